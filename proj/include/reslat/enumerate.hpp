#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslat/classops.hpp"
#include "reslat/finalg.hpp"

namespace reslat {

struct Lattice {
  int size = 0;
  std::vector<std::vector<bool>> leq;
  Table join, meet;
};

/// All lattices on n elements up to isomorphism, in canonical order.
std::vector<Lattice> enumerate_lattices(int n);

using Predicate = std::function<bool(const FinAlg&)>;

inline constexpr int kDefaultSizeCap = 6;

struct SearchConstraints {
  int size = 1;
  bool commutative = false;
  bool integral = false;
  bool chain = false;
  Predicate predicate;
  int cap = kDefaultSizeCap;
};

/// Throws std::invalid_argument for unknown names or syntax errors.
/// Grammar: expr := and ('|' and)*, and := not ('&' not)*,
/// not := '!' not | '(' expr ')' | name, with names from property_names().
Predicate parse_predicate(const std::string& text);

/// All residuated lattices of the given size satisfying the constraints, up
/// to isomorphism, sorted by canonical key and named "rl<size>-<k>".
/// jobs <= 0 means one worker per hardware thread. Throws PreconditionError
/// when size exceeds cap.
AlgebraCatalog enumerate_rl(const SearchConstraints& c, int jobs = 1);

/// Smallest witness over sizes 1..size_max (c.size is ignored), first in
/// canonical order.
std::optional<FinAlg> find_example(SearchConstraints c, int size_max, int jobs = 1);

/// Worker count from RESLAT_JOBS, or 1.
int default_jobs();

}  // namespace reslat
