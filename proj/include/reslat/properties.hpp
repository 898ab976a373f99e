#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslat/finalg.hpp"
#include "reslat/term.hpp"

namespace reslat {

/// Named verdicts in a fixed order, with a witness description for failures
/// when one is available.
struct PropertyReport {
  std::vector<std::pair<std::string, bool>> verdicts;
  std::map<std::string, std::string> witnesses;

  /// Throws std::out_of_range for unknown names.
  bool get(const std::string& name) const;
  void set(const std::string& name, bool value, std::string witness = {});
};

/// Names reported by basic_properties, in order.
const std::vector<std::string>& property_names();

/// integral, commutative, divisible, cancellative, idempotent, prelinear,
/// representable, one_distributive, normal, well_connected,
/// weakly_well_connected, chain, subdirectly_irreducible, simple.
/// Representability is decided twice (equation and "every subdirectly
/// irreducible quotient is a chain"); a disagreement throws std::logic_error.
PropertyReport basic_properties(const FinAlg& alg);

/// Decides a single name from property_names().
bool has_property(const FinAlg& alg, const std::string& name);

/// (a/\1)^N * b <= b * a and b * (a/\1)^N <= a * b for all a, b with
/// N = |A|. On failure *witness receives (a, b).
bool is_normal(const FinAlg& alg, std::pair<Elem, Elem>* witness = nullptr);
/// Every filter is a congruence filter.
bool all_filters_normal(const FinAlg& alg);

/// a \/ b >= 1 implies a >= 1 or b >= 1.
bool is_well_connected(const FinAlg& alg, std::pair<Elem, Elem>* witness = nullptr);
/// (a/\1) \/ (b/\1) = 1 implies a >= 1 or b >= 1; also checked as "1 is
/// join irreducible", a disagreement throws std::logic_error.
bool is_weakly_well_connected(const FinAlg& alg, std::pair<Elem, Elem>* witness = nullptr);

using UnaryTable = std::vector<Elem>;

inline constexpr int kDefaultGammaCap = 3;

/// n = 0: {x -> x/\1}; n >= 1: all compositions of exactly n conjugates
/// l_b, r_b, as sorted distinct tables. Throws PreconditionError if n > cap.
std::vector<UnaryTable> gamma_set(const FinAlg& alg, int n, int cap = kDefaultGammaCap);

/// g1(a) \/ g2(b) = 1 for all g1, g2 in gamma_set(n).
bool satisfies_Bn(const FinAlg& alg, Elem a, Elem b, int n, int cap = kDefaultGammaCap);

/// Precomputed B^n relation over all pairs: holds[a][b].
std::vector<std::vector<bool>> bn_relation(const FinAlg& alg, int n, int cap = kDefaultGammaCap);

/// B^n(a, b) implies a >= 1 or b >= 1.
bool is_gamma_connected(const FinAlg& alg, int n, int cap = kDefaultGammaCap);

/// For all a, b: B^n(a, b) implies B^k(a, b).
bool satisfies_Gnk(const FinAlg& alg, int n, int k, int cap = kDefaultGammaCap);

/// x \/ y = 1 implies l_w(x) \/ r_z(y) = 1 for all w, z.
bool satisfies_G_quasi(const FinAlg& alg);

}  // namespace reslat
