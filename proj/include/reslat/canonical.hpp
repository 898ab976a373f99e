#pragma once

#include <compare>
#include <vector>

#include "reslat/finalg.hpp"
#include "reslat/types.hpp"

namespace reslat {

/// A finite relational structure described by binary operation tables and
/// distinguished constants; the common shape of lattices and algebras for
/// canonical labeling.
struct TableStructure {
  int size = 0;
  std::vector<const Table*> tables;
  std::vector<Elem> constants;
};

/// Canonical labeling: perm maps old index -> new index, key is the relabeled
/// (constants, tables) tuple, lexicographically least among all labelings
/// that respect the refined invariant partition. Two structures are
/// isomorphic iff their keys are equal.
struct CanonicalForm {
  std::vector<Elem> perm;
  std::vector<int> key;
};

CanonicalForm canonical_form(const TableStructure& s);

/// Canonical form of a residuated lattice over (join, prod, unit).
CanonicalForm canonical_form(const FinAlg& alg);

/// Canonical relabeling of an algebra (unit, join, prod preserved).
FinAlg canonicalize(const FinAlg& alg);

}  // namespace reslat
