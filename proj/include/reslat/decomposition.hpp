#pragma once

#include <vector>

#include "reslat/finalg.hpp"

namespace reslat {

struct ChainDecomposition {
  /// Sum-irreducible components, bottom to top, each relabeled bottom to top
  /// with the unit last. The lowest component keeps the zero, if any.
  std::vector<FinAlg> components;
  /// Valid cut positions j: the j lowest non-unit elements lie below the cut.
  std::vector<int> cuts;
  /// For each component, the parent indices of its elements (unit last).
  std::vector<std::vector<Elem>> embeddings;
};

/// Throws PreconditionError unless alg is an integral chain with divisions.
void require_integral_chain(const FinAlg& alg);

std::vector<int> valid_cuts(const FinAlg& alg);
ChainDecomposition sum_decompose(const FinAlg& alg);
/// Number of sum-irreducible components (0 for the trivial algebra).
int index(const FinAlg& alg);

/// n such that the quotient by the radical is isomorphic to L_n. Requires a
/// bounded Wajsberg chain.
int rank(const FinAlg& alg);
/// Largest k such that L_k embeds (zero and unit preserved). Requires a
/// bounded Wajsberg chain.
int divisibility_index(const FinAlg& alg);

/// Same index and pairwise isomorphic components.
bool chains_equivalent(const FinAlg& a, const FinAlg& b);

}  // namespace reslat
