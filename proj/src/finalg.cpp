#include "reslat/finalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reslat {

std::vector<std::vector<Elem>> Table::rows() const {
  std::vector<std::vector<Elem>> out(n_, std::vector<Elem>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out[a][b] = (*this)(a, b);
  return out;
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  Table t(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw MalformedAlgebra("table row " + std::to_string(a) + " has length " +
                             std::to_string(rows[a].size()) + ", expected " + std::to_string(n));
    for (int b = 0; b < n; ++b) t(a, b) = rows[a][b];
  }
  return t;
}

Table Table::relabeled(const std::vector<Elem>& perm) const {
  Table t(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t(perm[a], perm[b]) = perm[(*this)(a, b)];
  return t;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Elem FinAlg::bottom() const {
  Elem b = 0;
  for (Elem x = 1; x < size; ++x) b = meet(b, x);
  return b;
}

Elem FinAlg::top() const {
  Elem t = 0;
  for (Elem x = 1; x < size; ++x) t = join(t, x);
  return t;
}

bool FinAlg::is_commutative() const {
  for (Elem a = 0; a < size; ++a)
    for (Elem b = a + 1; b < size; ++b)
      if (prod(a, b) != prod(b, a)) return false;
  return true;
}

bool FinAlg::is_chain() const {
  for (Elem a = 0; a < size; ++a)
    for (Elem b = a + 1; b < size; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::vector<Elem> FinAlg::chain_order() const {
  std::vector<Elem> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return a != b && leq(a, b); });
  return order;
}

FinAlg FinAlg::relabeled(const std::vector<Elem>& perm) const {
  FinAlg out;
  out.name = name;
  out.size = size;
  out.unit = perm[unit];
  if (zero) out.zero = perm[*zero];
  out.join = join.relabeled(perm);
  out.meet = meet.relabeled(perm);
  out.prod = prod.relabeled(perm);
  if (has_divisions()) {
    out.ldiv = ldiv.relabeled(perm);
    out.rdiv = rdiv.relabeled(perm);
  }
  return out;
}

FinAlg without_zero(FinAlg alg) {
  alg.zero.reset();
  return alg;
}

FinAlg with_zero(FinAlg alg) {
  alg.zero = alg.bottom();
  return alg;
}

FinAlg renamed(FinAlg alg, std::string name) {
  alg.name = std::move(name);
  return alg;
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
    os << ")\n";
  }
  return os.str();
}

namespace {

void check_table(const Table& t, int n, const char* what) {
  if (t.size() != n)
    throw MalformedAlgebra(std::string(what) + " table has dimension " + std::to_string(t.size()) +
                           ", expected " + std::to_string(n));
  for (Elem v : t.cells())
    if (v < 0 || v >= n)
      throw MalformedAlgebra(std::string(what) + " table entry " + std::to_string(v) + " out of range");
}

// Records at most one violation per axiom name.
class Collector {
 public:
  explicit Collector(ValidationReport& r) : r_(r) {}
  bool seen(const std::string& axiom) const {
    return std::any_of(r_.violations.begin(), r_.violations.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
  }
  void add(const std::string& axiom, std::vector<Elem> w) {
    if (!seen(axiom)) r_.violations.push_back({axiom, std::move(w)});
  }

 private:
  ValidationReport& r_;
};

void check_lattice_monoid(const FinAlg& A, Collector& out) {
  const int n = A.size;
  for (Elem a = 0; a < n; ++a) {
    if (A.join(a, a) != a) out.add("join-idempotent", {a});
    if (A.meet(a, a) != a) out.add("meet-idempotent", {a});
    for (Elem b = 0; b < n; ++b) {
      if (A.join(a, b) != A.join(b, a)) out.add("join-commutative", {a, b});
      if (A.meet(a, b) != A.meet(b, a)) out.add("meet-commutative", {a, b});
      if (A.join(a, A.meet(a, b)) != a) out.add("absorption-join", {a, b});
      if (A.meet(a, A.join(a, b)) != a) out.add("absorption-meet", {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (A.join(A.join(a, b), c) != A.join(a, A.join(b, c))) out.add("join-associative", {a, b, c});
        if (A.meet(A.meet(a, b), c) != A.meet(a, A.meet(b, c))) out.add("meet-associative", {a, b, c});
      }
    }
  }
  // meet must be the greatest lower bound for the join-derived order
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = A.meet(a, b);
      if (!A.leq(m, a) || !A.leq(m, b)) out.add("meet-is-glb", {a, b});
      for (Elem c = 0; c < n; ++c)
        if (A.leq(c, a) && A.leq(c, b) && !A.leq(c, m)) out.add("meet-is-glb", {a, b, c});
    }
  if (A.zero)
    for (Elem x = 0; x < n; ++x)
      if (!A.leq(*A.zero, x)) out.add("zero-is-bottom", {*A.zero, x});
  for (Elem a = 0; a < n; ++a) {
    if (A.prod(A.unit, a) != a) out.add("unit-left", {a});
    if (A.prod(a, A.unit) != a) out.add("unit-right", {a});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A.prod(A.prod(a, b), c) != A.prod(a, A.prod(b, c))) out.add("prod-associative", {a, b, c});
  }
}

}  // namespace

void check_shape(const FinAlg& alg) {
  const int n = alg.size;
  if (n < 1) throw MalformedAlgebra("size must be positive");
  if (n > kMaxElements) throw MalformedAlgebra("size exceeds " + std::to_string(kMaxElements));
  if (alg.unit < 0 || alg.unit >= n) throw MalformedAlgebra("unit out of range");
  if (alg.zero && (*alg.zero < 0 || *alg.zero >= n)) throw MalformedAlgebra("zero out of range");
  check_table(alg.join, n, "join");
  check_table(alg.meet, n, "meet");
  check_table(alg.prod, n, "prod");
  if (alg.ldiv.empty() != alg.rdiv.empty())
    throw MalformedAlgebra("ldiv and rdiv must be given together");
  if (alg.has_divisions()) {
    check_table(alg.ldiv, n, "ldiv");
    check_table(alg.rdiv, n, "rdiv");
  }
}

ValidationReport validate_lattice_monoid(const FinAlg& alg) {
  check_shape(alg);
  ValidationReport r;
  Collector out(r);
  check_lattice_monoid(alg, out);
  return r;
}

ValidationReport validate(const FinAlg& alg) {
  check_shape(alg);
  ValidationReport r;
  Collector out(r);
  check_lattice_monoid(alg, out);
  if (!alg.has_divisions()) {
    out.add("divisions-present", {});
    return r;
  }
  const int n = alg.size;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const bool below = alg.leq(alg.prod(a, b), c);
        if (below != alg.leq(b, alg.ldiv(a, c))) out.add("residuation-left", {a, b, c});
        if (below != alg.leq(a, alg.rdiv(c, b))) out.add("residuation-right", {a, b, c});
      }
  return r;
}

FinAlg complete_divisions(FinAlg alg) {
  alg.ldiv = Table();
  alg.rdiv = Table();
  const auto pre = validate_lattice_monoid(alg);
  if (!pre.ok()) throw NotResiduated("cannot complete divisions: " + pre.describe());
  const int n = alg.size;
  const Elem bot = alg.bottom();
  alg.ldiv = Table(n);
  alg.rdiv = Table(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      // a\b = max{y : a*y <= b}, b/a = max{y : y*a <= b}
      bool any_l = false, any_r = false;
      Elem l = bot, r = bot;
      for (Elem y = 0; y < n; ++y) {
        if (alg.leq(alg.prod(a, y), b)) l = any_l ? alg.join(l, y) : y, any_l = true;
        if (alg.leq(alg.prod(y, a), b)) r = any_r ? alg.join(r, y) : y, any_r = true;
      }
      if (!any_l || !alg.leq(alg.prod(a, l), b))
        throw NotResiduated("no left residual " + std::to_string(a) + "\\" + std::to_string(b));
      if (!any_r || !alg.leq(alg.prod(r, a), b))
        throw NotResiduated("no right residual " + std::to_string(b) + "/" + std::to_string(a));
      alg.ldiv(a, b) = l;
      alg.rdiv(b, a) = r;
    }
  const auto post = validate(alg);
  if (!post.ok()) throw NotResiduated("product is not residuated: " + post.describe());
  return alg;
}

ElemSet positive_cone(const FinAlg& alg) {
  ElemSet s;
  for (Elem a = 0; a < alg.size; ++a)
    if (alg.join(a, alg.unit) == a) s.insert(a);
  return s;
}

bool is_iso_witness(const FinAlg& a, const FinAlg& b, const IsoWitness& w) {
  if (a.size != b.size || static_cast<int>(w.size()) != a.size) return false;
  std::vector<bool> hit(b.size, false);
  for (Elem x : w) {
    if (x < 0 || x >= b.size || hit[x]) return false;
    hit[x] = true;
  }
  if (w[a.unit] != b.unit) return false;
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) {
      if (w[a.join(x, y)] != b.join(w[x], w[y])) return false;
      if (w[a.meet(x, y)] != b.meet(w[x], w[y])) return false;
      if (w[a.prod(x, y)] != b.prod(w[x], w[y])) return false;
      if (a.has_divisions() && b.has_divisions()) {
        if (w[a.ldiv(x, y)] != b.ldiv(w[x], w[y])) return false;
        if (w[a.rdiv(x, y)] != b.rdiv(w[x], w[y])) return false;
      }
    }
  return true;
}

namespace {

std::vector<std::vector<int>> element_profiles(const FinAlg& A) {
  std::vector<std::vector<int>> p(A.size);
  for (Elem x = 0; x < A.size; ++x) {
    int below = 0, above = 0, fixes = 0;
    for (Elem y = 0; y < A.size; ++y) {
      below += A.leq(y, x);
      above += A.leq(x, y);
      fixes += A.prod(x, y) == y;
    }
    p[x] = {x == A.unit, below, above, A.prod(x, x) == x, fixes, A.leq(x, A.unit), A.leq(A.unit, x)};
  }
  return p;
}

class IsoSearch {
 public:
  IsoSearch(const FinAlg& a, const FinAlg& b) : a_(a), b_(b), map_(a.size, -1), used_(b.size, false) {
    const auto pa = element_profiles(a), pb = element_profiles(b);
    cand_.resize(a.size);
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < b.size; ++y)
        if (pa[x] == pb[y]) cand_[x].push_back(y);
    order_.resize(a.size);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Elem x, Elem y) { return cand_[x].size() < cand_[y].size(); });
  }

  std::optional<IsoWitness> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(Elem x) const {
    for (Elem y = 0; y < a_.size; ++y) {
      if (map_[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Elem j = a_.join(p, q), m = a_.prod(p, q);
        if (map_[j] >= 0 && map_[j] != b_.join(map_[p], map_[q])) return false;
        if (map_[m] >= 0 && map_[m] != b_.prod(map_[p], map_[q])) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return is_iso_witness(a_, b_, map_);
    const Elem x = order_[depth];
    for (Elem y : cand_[x]) {
      if (used_[y]) continue;
      map_[x] = y;
      used_[y] = true;
      if (consistent(x) && search(depth + 1)) return true;
      used_[y] = false;
      map_[x] = -1;
    }
    return false;
  }

  const FinAlg& a_;
  const FinAlg& b_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<Elem> order_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const FinAlg& a, const FinAlg& b) {
  if (a.size != b.size) return std::nullopt;
  auto pa = element_profiles(a), pb = element_profiles(b);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return std::nullopt;
  return IsoSearch(a, b).run();
}

FinAlg trivial_algebra(bool with_zero_constant) {
  FinAlg t;
  t.name = "trivial";
  t.size = 1;
  t.unit = 0;
  if (with_zero_constant) t.zero = 0;
  t.join = t.meet = t.prod = t.ldiv = t.rdiv = Table(1, 0);
  return t;
}

}  // namespace reslat
