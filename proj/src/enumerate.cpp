#include "reslat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "reslat/builders.hpp"
#include "reslat/canonical.hpp"
#include "reslat/properties.hpp"

namespace reslat {

// ---------------------------------------------------------------------------
// Lattices

namespace {

bool lattice_of(const std::vector<std::vector<bool>>& leq, Table& join, Table& meet) {
  const int n = static_cast<int>(leq.size());
  join = Table(n);
  meet = Table(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      int lub = -1, glb = -1;
      for (Elem c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = c;
        if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = c;
      }
      if (lub < 0 || glb < 0) return false;
      for (Elem c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && !leq[lub][c]) return false;
        if (leq[c][a] && leq[c][b] && !leq[c][glb]) return false;
      }
      join(a, b) = join(b, a) = lub;
      meet(a, b) = meet(b, a) = glb;
    }
  return true;
}

// Naturally labelled bounded posets: element k > 0 gets a down-closed set of
// {0..k-1} containing 0 as its strict down-set.
void grow(int n, int k, std::vector<std::vector<bool>>& leq, std::set<std::vector<int>>& seen,
          std::vector<std::pair<std::vector<int>, Lattice>>& out) {
  if (k == n) {
    // the last element must be the top
    for (Elem a = 0; a < n; ++a)
      if (!leq[a][n - 1]) return;
    Lattice L;
    L.size = n;
    L.leq = leq;
    if (!lattice_of(leq, L.join, L.meet)) return;
    auto cf = canonical_form(TableStructure{n, {&L.join}, {}});
    if (!seen.insert(cf.key).second) return;
    Lattice R;
    R.size = n;
    R.join = L.join.relabeled(cf.perm);
    R.meet = L.meet.relabeled(cf.perm);
    R.leq.assign(n, std::vector<bool>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) R.leq[cf.perm[a]][cf.perm[b]] = leq[a][b];
    out.emplace_back(std::move(cf.key), std::move(R));
    return;
  }
  // subsets of {1..k-1}; 0 is always below
  const std::uint32_t limit = k <= 1 ? 1u : (1u << (k - 1));
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<bool> below(k, false);
    below[0] = true;
    for (int i = 1; i < k; ++i) below[i] = (mask >> (i - 1)) & 1u;
    bool down_closed = true;
    for (int i = 1; i < k && down_closed; ++i)
      if (below[i])
        for (int j = 0; j < i; ++j)
          if (leq[j][i] && !below[j]) {
            down_closed = false;
            break;
          }
    if (!down_closed) continue;
    for (int i = 0; i < k; ++i) leq[i][k] = below[i];
    leq[k][k] = true;
    grow(n, k + 1, leq, seen, out);
    for (int i = 0; i < k; ++i) leq[i][k] = false;
  }
}

}  // namespace

std::vector<Lattice> enumerate_lattices(int n) {
  if (n < 1) throw PreconditionError("enumerate_lattices: n must be >= 1");
  if (n > 10) throw PreconditionError("enumerate_lattices: n too large");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  leq[0][0] = true;
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Lattice>> found;
  grow(n, 1, leq, seen, found);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Lattice> out;
  for (auto& [k, L] : found) out.push_back(std::move(L));
  return out;
}

// ---------------------------------------------------------------------------
// Product search

namespace {

class ProductSearch {
 public:
  ProductSearch(const Lattice& L, Elem unit, const SearchConstraints& c)
      : L_(L), n_(L.size), unit_(unit), c_(c), p_(n_ * n_, -1) {
    bottom_ = 0;
    for (Elem x = 0; x < n_; ++x)
      if (L.leq[x][bottom_]) bottom_ = x;
    for (Elem x = 0; x < n_; ++x) {
      set(unit_, x, x);
      set(x, unit_, x);
    }
    for (Elem x = 0; x < n_; ++x) {
      if (x == unit_) continue;
      set(bottom_, x, bottom_);
      set(x, bottom_, bottom_);
    }
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (get(x, y) < 0 && (!c_.commutative || x <= y)) cells_.emplace_back(x, y);
  }

  void run(std::vector<FinAlg>& out) {
    // fixed cells must already be consistent
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (get(x, y) >= 0 && !consistent(x, y)) return;
    search(0, out);
  }

 private:
  int get(Elem x, Elem y) const { return p_[x * n_ + y]; }
  void set(Elem x, Elem y, int v) { p_[x * n_ + y] = v; }
  bool le(Elem a, Elem b) const { return L_.leq[a][b]; }

  void search(std::size_t i, std::vector<FinAlg>& out) {
    if (i == cells_.size()) {
      emit(out);
      return;
    }
    const auto [x, y] = cells_[i];
    for (Elem v = 0; v < n_; ++v) {
      if (c_.integral && !le(v, L_.meet(x, y))) continue;
      set(x, y, v);
      const bool mirror = c_.commutative && x != y;
      if (mirror) set(y, x, v);
      if (consistent(x, y) && (!mirror || consistent(y, x))) search(i + 1, out);
      set(x, y, -1);
      if (mirror) set(y, x, -1);
    }
  }

  // All constraints touching cell (x, y) whose cells are all known.
  bool consistent(Elem x, Elem y) const {
    const int v = get(x, y);
    // monotonicity
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        const int w = get(a, b);
        if (w < 0) continue;
        if (le(x, a) && le(y, b) && !le(v, w)) return false;
        if (le(a, x) && le(b, y) && !le(w, v)) return false;
      }
    // joins in the row of x and the column of y
    for (Elem z1 = 0; z1 < n_; ++z1)
      for (Elem z2 = 0; z2 < n_; ++z2) {
        const Elem j = L_.join(z1, z2);
        if (z1 == y || z2 == y || j == y) {
          const int a = get(x, z1), b = get(x, z2), c = get(x, j);
          if (a >= 0 && b >= 0 && c >= 0 && L_.join(a, b) != c) return false;
        }
        if (z1 == x || z2 == x || j == x) {
          const int a = get(z1, y), b = get(z2, y), c = get(j, y);
          if (a >= 0 && b >= 0 && c >= 0 && L_.join(a, b) != c) return false;
        }
      }
    // associativity (ab)c = a(bc) for triples using this cell
    auto check = [&](Elem a, Elem b, Elem c) {
      const int ab = get(a, b), bc = get(b, c);
      if (ab < 0 || bc < 0) return true;
      const int l = get(ab, c), r = get(a, bc);
      return l < 0 || r < 0 || l == r;
    };
    for (Elem z = 0; z < n_; ++z) {
      if (!check(x, y, z) || !check(z, x, y)) return false;
    }
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        if (get(a, b) == x && !check(a, b, y)) return false;
        if (get(a, b) == y && !check(x, a, b)) return false;
      }
    return true;
  }

  void emit(std::vector<FinAlg>& out) const {
    FinAlg A;
    A.size = n_;
    A.unit = unit_;
    A.join = L_.join;
    A.meet = L_.meet;
    A.prod = Table(n_);
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) A.prod(x, y) = get(x, y);
    try {
      A = complete_divisions(std::move(A));
    } catch (const NotResiduated&) {
      return;
    }
    out.push_back(std::move(A));
  }

  const Lattice& L_;
  int n_;
  Elem unit_, bottom_ = 0;
  const SearchConstraints& c_;
  std::vector<int> p_;
  std::vector<std::pair<Elem, Elem>> cells_;
};

bool is_chain_lattice(const Lattice& L) {
  for (Elem a = 0; a < L.size; ++a)
    for (Elem b = 0; b < L.size; ++b)
      if (!L.leq[a][b] && !L.leq[b][a]) return false;
  return true;
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("RESLAT_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 1;
}

AlgebraCatalog enumerate_rl(const SearchConstraints& c, int jobs) {
  if (c.size < 1) throw PreconditionError("enumerate: size must be >= 1");
  if (c.size > c.cap)
    throw PreconditionError("enumerate: size " + std::to_string(c.size) + " exceeds the cap " + std::to_string(c.cap));
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  const auto lattices = enumerate_lattices(c.size);
  struct Task {
    const Lattice* L;
    Elem unit;
  };
  std::vector<Task> tasks;
  for (const auto& L : lattices) {
    if (c.chain && !is_chain_lattice(L)) continue;
    for (Elem u = 0; u < L.size; ++u) {
      bool top = true;
      for (Elem x = 0; x < L.size; ++x) top = top && L.leq[x][u];
      if (c.integral && !top) continue;
      tasks.push_back({&L, u});
    }
  }

  std::vector<std::vector<FinAlg>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      ProductSearch(*tasks[i].L, tasks[i].unit, c).run(results[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<int>, FinAlg> unique;
  for (auto& list : results)
    for (auto& a : list) {
      auto cf = canonical_form(a);
      if (unique.count(cf.key)) continue;
      unique.emplace(std::move(cf.key), a.relabeled(cf.perm));
    }
  AlgebraCatalog out;
  int k = 0;
  for (auto& [key, a] : unique) {
    a.name = "rl" + std::to_string(c.size) + "-" + std::to_string(++k);
    if (c.predicate && !c.predicate(a)) continue;
    out.add(std::move(a));
  }
  return out;
}

std::optional<FinAlg> find_example(SearchConstraints c, int size_max, int jobs) {
  for (int n = 1; n <= size_max; ++n) {
    c.size = n;
    c.cap = std::max(c.cap, size_max);
    auto cat = enumerate_rl(c, jobs);
    if (cat.size() > 0) return cat.algebras().front();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Predicate expressions

namespace {

class PredicateParser {
 public:
  explicit PredicateParser(std::string text) : s_(std::move(text)) {}

  Predicate parse() {
    Predicate p = disj();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("predicate: " + what + " at position " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Predicate disj() {
    Predicate p = conj();
    while (accept('|')) {
      Predicate q = conj();
      p = [p, q](const FinAlg& a) { return p(a) || q(a); };
    }
    return p;
  }
  Predicate conj() {
    Predicate p = neg();
    while (accept('&')) {
      Predicate q = neg();
      p = [p, q](const FinAlg& a) { return p(a) && q(a); };
    }
    return p;
  }
  Predicate neg() {
    if (accept('!')) {
      Predicate p = neg();
      return [p](const FinAlg& a) { return !p(a); };
    }
    if (accept('(')) {
      Predicate p = disj();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    return name();
  }
  Predicate name() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-'))
      ++i_;
    if (start == i_) fail("expected a property name");
    std::string n = s_.substr(start, i_ - start);
    std::replace(n.begin(), n.end(), '-', '_');
    if (n == "si" || n == "SI") n = "subdirectly_irreducible";
    const auto& names = property_names();
    if (std::find(names.begin(), names.end(), n) == names.end()) fail("unknown property '" + n + "'");
    return [n](const FinAlg& a) { return has_property(a, n); };
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

Predicate parse_predicate(const std::string& text) { return PredicateParser(text).parse(); }

}  // namespace reslat
