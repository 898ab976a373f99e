#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reslat/types.hpp"

namespace reslat {

/// A finite residuated lattice given by its operation tables.
///
/// ldiv(a, b) holds a\b and rdiv(a, b) holds a/b. The order is derived from
/// the join table: a <= b iff a v b = b. A declared zero must be the bottom.
struct FinAlg {
  std::string name;
  int size = 0;
  Elem unit = 0;
  std::optional<Elem> zero;
  Table join, meet, prod, ldiv, rdiv;

  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  bool has_divisions() const { return !ldiv.empty() && !rdiv.empty(); }

  Elem bottom() const;
  Elem top() const;

  bool is_integral() const { return top() == unit; }
  bool is_commutative() const;
  bool is_chain() const;

  /// Elements sorted by the (linear) order; only meaningful for chains.
  std::vector<Elem> chain_order() const;

  /// Same algebra with elements renamed through perm (old -> new).
  FinAlg relabeled(const std::vector<Elem>& perm) const;
};

/// Drops the zero constant (hoop / zero-free reduct).
FinAlg without_zero(FinAlg alg);
/// Declares the bottom element as zero.
FinAlg with_zero(FinAlg alg);
FinAlg renamed(FinAlg alg, std::string name);

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// Human-readable summary, one line per violation.
  std::string describe() const;
};

/// Checks table shapes and entry ranges; throws MalformedAlgebra.
void check_shape(const FinAlg& alg);

/// Exhaustively checks every residuated-lattice axiom. At most one violation
/// per axiom is reported, in the fixed checking order. Throws MalformedAlgebra
/// on malformed tables.
ValidationReport validate(const FinAlg& alg);

/// Lattice + monoid part of the validator (divisions ignored).
ValidationReport validate_lattice_monoid(const FinAlg& alg);

/// Fills ldiv/rdiv from join, meet, prod and unit. Throws NotResiduated if
/// the lattice/monoid axioms fail or no residuals exist.
FinAlg complete_divisions(FinAlg partial);

/// A+ = {a : a >= 1}.
ElemSet positive_cone(const FinAlg& alg);

/// Bijection a -> b on element indices.
using IsoWitness = std::vector<Elem>;

/// Backtracking isomorphism search with invariant pruning. The zero constant
/// is not compared: on a finite lattice it is always the bottom, which every
/// lattice isomorphism preserves.
std::optional<IsoWitness> is_isomorphic(const FinAlg& a, const FinAlg& b);

/// True iff w maps a onto b preserving all operations and the unit.
bool is_iso_witness(const FinAlg& a, const FinAlg& b, const IsoWitness& w);

/// The trivial (one-element) algebra.
FinAlg trivial_algebra(bool with_zero = false);

}  // namespace reslat
