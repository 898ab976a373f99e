#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reslat/finalg.hpp"

namespace reslat {

/// Algebras kept pairwise non-isomorphic through canonical keys.
class AlgebraCatalog {
 public:
  /// Adds alg unless an isomorphic copy is present; returns true if added.
  bool add(FinAlg alg);
  bool contains(const FinAlg& alg) const;

  const std::vector<FinAlg>& algebras() const { return algebras_; }
  std::size_t size() const { return algebras_.size(); }
  /// Sorts entries by (size, canonical key) for deterministic output.
  void sort();

 private:
  std::vector<FinAlg> algebras_;
  std::vector<std::vector<int>> keys_;
};

/// Subuniverse generated by x together with the unit (and zero, if declared).
ElemSet subuniverse_closure(const FinAlg& alg, ElemSet x);
/// All subuniverses as element masks, sorted.
std::vector<ElemSet> subuniverses(const FinAlg& alg);
/// Restriction of alg to a subuniverse, elements in increasing index order.
FinAlg induced_subalgebra(const FinAlg& alg, ElemSet s);

AlgebraCatalog subalgebras(const FinAlg& alg);
AlgebraCatalog homomorphic_images(const FinAlg& alg);
/// H(S(alg)) together with S(H(alg)).
AlgebraCatalog hs_closure(const FinAlg& alg);

/// a is in HS(b) (probing both HS and SH).
bool hs_contains(const FinAlg& b, const FinAlg& a);

/// Every subdirectly irreducible member of HS(a) lies in HS(b).
bool var_leq(const FinAlg& a, const FinAlg& b);
bool var_equal(const FinAlg& a, const FinAlg& b);

struct VarietyPoset {
  std::vector<std::string> labels;
  /// leq[i][j]: V(alg_i) is contained in V(alg_j)
  std::vector<std::vector<bool>> leq;
  /// classes of mutually equivalent nodes, ordered by least member
  std::vector<std::vector<int>> classes;
  /// covers between classes (lower, upper)
  std::vector<std::pair<int, int>> hasse;

  std::string to_dot() const;
};

VarietyPoset variety_poset(const std::vector<FinAlg>& algebras);

}  // namespace reslat
