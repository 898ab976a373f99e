#pragma once

#include <string>
#include <vector>

#include "reslat/finalg.hpp"

namespace reslat {

/// Join and meet tables of a finite partial order given as leq[a][b].
/// Throws MalformedAlgebra when the order is not a lattice.
std::pair<Table, Table> lattice_tables(const std::vector<std::vector<bool>>& leq);

/// Chain 0 < 1 < ... < n with unit n, zero 0 and a*b = max(a+b-n, 0).
FinAlg lukasiewicz(int n);

/// Zero-free chain 0 < ... < n with product = meet. godel(0) is trivial.
FinAlg godel(int n);

/// Ordinal sum of integral chains, listed bottom to top. Elements are
/// numbered bottom to top with the shared unit last. The sum has a zero iff
/// the lowest nontrivial component has one.
FinAlg ordinal_sum(const std::vector<FinAlg>& components);

enum class Delta { Identity, ConstantOne };

struct RotationSpec {
  FinAlg base;
  int n = 2;
  Delta delta = Delta::Identity;
};

struct Rotation {
  FinAlg alg;
  /// base element a -> its index in alg
  std::vector<Elem> base_image;
  /// index of the ladder element l_i at position i-1
  std::vector<Elem> ladder;
};

/// Generalized rotation of a commutative integral algebra. Layout: the
/// dualized image of delta first, then the ladder, then the base.
Rotation rotate_detailed(const RotationSpec& spec);
FinAlg rotate(const RotationSpec& spec);

/// Componentwise product; element (a, b) has index a * |B| + b.
FinAlg direct_product(const FinAlg& a, const FinAlg& b);

std::string to_string(Delta d);
Delta parse_delta(const std::string& s);

}  // namespace reslat
