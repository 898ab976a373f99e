#pragma once

#include <utility>
#include <vector>

#include "reslat/finalg.hpp"

namespace reslat {

enum class Side { Left, Right };

/// Unary table of l_a(x) = a\(x*a) /\ 1 (Left) or r_a(x) = (a*x)/a /\ 1 (Right).
std::vector<Elem> conjugate(const FinAlg& alg, Side side, Elem a);

bool is_filter(const FinAlg& alg, ElemSet f);
bool is_congruence_filter(const FinAlg& alg, ElemSet f);

/// Least filter containing X and the unit (upward closed, closed under meet
/// and product).
ElemSet generate_filter(const FinAlg& alg, ElemSet x);
/// Least filter containing X that is also closed under all conjugates.
ElemSet generate_congruence_filter(const FinAlg& alg, ElemSet x);

/// Filters ordered by inclusion, listed by (size, mask); hasse holds index
/// pairs (lower, upper) of covers.
struct FilterLattice {
  std::vector<ElemSet> filters;
  std::vector<std::pair<int, int>> hasse;

  int index_of(ElemSet f) const;
  /// Minimal elements above the least filter.
  std::vector<int> atoms() const;
  /// Maximal elements below the whole carrier.
  std::vector<int> coatoms() const;
};

FilterLattice all_filters(const FinAlg& alg);
FilterLattice congruence_filters(const FinAlg& alg);

/// Equivalence relation on the carrier as block labels, normalized so that
/// labels appear in order of first occurrence.
struct Congruence {
  std::vector<int> block;

  static Congruence from_labels(std::vector<int> labels);
  bool related(Elem a, Elem b) const { return block[a] == block[b]; }
  int num_blocks() const;
  std::vector<std::vector<Elem>> blocks() const;
  /// this is contained in other (as sets of pairs)
  bool leq(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

bool is_congruence(const FinAlg& alg, const Congruence& c);

/// theta_F = {(a, b) : a/b, b/a in F}. Throws PreconditionError when F is
/// not a congruence filter.
Congruence filter_to_congruence(const FinAlg& alg, ElemSet f);
/// Union of the classes of the elements above the unit.
ElemSet congruence_to_filter(const FinAlg& alg, const Congruence& c);

/// Least congruence identifying a and b, by closure under all operations.
Congruence principal_congruence(const FinAlg& alg, Elem a, Elem b);
Congruence congruence_join(const FinAlg& alg, const Congruence& a, const Congruence& b);
/// Every congruence, sorted, obtained as joins of principal congruences.
std::vector<Congruence> all_congruences_bruteforce(const FinAlg& alg);

/// A / theta_F with blocks numbered by their least member.
FinAlg quotient(const FinAlg& alg, ElemSet f);
FinAlg quotient(const FinAlg& alg, const Congruence& c);

bool is_subdirectly_irreducible(const FinAlg& alg);
bool is_simple(const FinAlg& alg);

/// Intersection of the maximal proper congruence filters (the whole carrier
/// for the trivial algebra).
ElemSet radical(const FinAlg& alg);

}  // namespace reslat
