#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslat {

/// Index of an element of a finite algebra's carrier (0..size-1).
using Elem = int;

/// Hard limit on carrier size; element sets are stored as 64-bit masks.
inline constexpr int kMaxElements = 64;

/// Square operation table stored row-major: at(a, b) is the value of a op b.
class Table {
 public:
  Table() = default;
  explicit Table(int n, Elem fill = 0) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  Elem operator()(Elem a, Elem b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem& operator()(Elem a, Elem b) { return cells_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::vector<Elem>& cells() const { return cells_; }

  /// Rows as nested vectors (the on-disk layout).
  std::vector<std::vector<Elem>> rows() const;
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  /// Relabels through perm (old index -> new index).
  Table relabeled(const std::vector<Elem>& perm) const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  int n_ = 0;
  std::vector<Elem> cells_;
};

/// Subset of a carrier of at most kMaxElements elements.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet full(int n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static ElemSet of(const std::vector<Elem>& elems) {
    ElemSet s;
    for (Elem e : elems) s.insert(e);
    return s;
  }

  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }

  std::vector<Elem> elements() const;

  friend constexpr bool operator==(ElemSet, ElemSet) = default;
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Malformed input: wrong table shapes, out-of-range entries, bad JSON.
class MalformedAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The product admits no residuals (or the structure is not a lattice-ordered monoid).
class NotResiduated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input algebra is violated (e.g. not a chain, not integral).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace reslat
