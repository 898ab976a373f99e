#pragma once

#include <random>
#include <vector>

#include "reslat/builders.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/finalg.hpp"

namespace fixtures {

using namespace reslat;

inline FinAlg two() { return renamed(without_zero(lukasiewicz(1)), "2"); }
inline FinAlg luk_hoop(int n) { return without_zero(lukasiewicz(n)); }

/// Every residuated lattice with at most max_size elements.
inline const std::vector<FinAlg>& enumerated_upto(int max_size) {
  static std::vector<std::vector<FinAlg>> cache(8);
  auto& c = cache.at(max_size);
  if (c.empty())
    for (int n = 1; n <= max_size; ++n) {
      SearchConstraints sc;
      sc.size = n;
      const auto cat = enumerate_rl(sc);
      c.insert(c.end(), cat.algebras().begin(), cat.algebras().end());
    }
  return c;
}

inline std::vector<FinAlg> enumerated_commutative_upto(int max_size) {
  std::vector<FinAlg> out;
  for (int n = 1; n <= max_size; ++n) {
    SearchConstraints sc;
    sc.size = n;
    sc.commutative = true;
    const auto cat = enumerate_rl(sc);
    out.insert(out.end(), cat.algebras().begin(), cat.algebras().end());
  }
  return out;
}

/// A fixed sample of named chains used across suites.
inline std::vector<FinAlg> named_chains() {
  std::vector<FinAlg> v;
  for (int n = 1; n <= 5; ++n) v.push_back(lukasiewicz(n));
  for (int n = 0; n <= 4; ++n) v.push_back(godel(n));
  v.push_back(ordinal_sum({two(), luk_hoop(2)}));
  v.push_back(ordinal_sum({luk_hoop(2), two(), luk_hoop(3)}));
  return v;
}

inline std::vector<Elem> random_permutation(int n, std::mt19937& rng) {
  std::vector<Elem> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixtures
