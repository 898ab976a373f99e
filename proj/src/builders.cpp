#include "reslat/builders.hpp"

#include <algorithm>

namespace reslat {

std::pair<Table, Table> lattice_tables(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  Table join(n), meet(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (Elem c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = c;
        if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = c;
      }
      // the candidates must be least / greatest, not just minimal / maximal
      for (Elem c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && !(lub >= 0 && leq[lub][c]))
          throw MalformedAlgebra("order is not a lattice (no join of " + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
        if (leq[c][a] && leq[c][b] && !(glb >= 0 && leq[c][glb]))
          throw MalformedAlgebra("order is not a lattice (no meet of " + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
      }
      if (lub < 0 || glb < 0)
        throw MalformedAlgebra("order is not a lattice (no bound for " + std::to_string(a) + ", " +
                               std::to_string(b) + ")");
      join(a, b) = lub;
      meet(a, b) = glb;
    }
  return {join, meet};
}

namespace {

FinAlg chain_skeleton(int size) {
  FinAlg A;
  A.size = size;
  A.join = Table(size);
  A.meet = Table(size);
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b) {
      A.join(a, b) = std::max(a, b);
      A.meet(a, b) = std::min(a, b);
    }
  return A;
}

}  // namespace

FinAlg lukasiewicz(int n) {
  if (n < 1) throw PreconditionError("lukasiewicz: n must be >= 1");
  if (n + 1 > kMaxElements) throw PreconditionError("lukasiewicz: too many elements");
  FinAlg A = chain_skeleton(n + 1);
  A.name = "L" + std::to_string(n);
  A.unit = n;
  A.zero = 0;
  A.prod = A.ldiv = A.rdiv = Table(n + 1);
  for (Elem a = 0; a <= n; ++a)
    for (Elem b = 0; b <= n; ++b) {
      A.prod(a, b) = std::max(a + b - n, 0);
      A.ldiv(a, b) = std::min(n - a + b, n);
      A.rdiv(b, a) = std::min(n - a + b, n);
    }
  return A;
}

FinAlg godel(int n) {
  if (n < 0) throw PreconditionError("godel: n must be >= 0");
  if (n + 1 > kMaxElements) throw PreconditionError("godel: too many elements");
  FinAlg A = chain_skeleton(n + 1);
  A.name = "G" + std::to_string(n);
  A.unit = n;
  A.prod = A.meet;
  A.ldiv = A.rdiv = Table(n + 1);
  for (Elem a = 0; a <= n; ++a)
    for (Elem b = 0; b <= n; ++b) {
      A.ldiv(a, b) = a <= b ? n : b;
      A.rdiv(b, a) = a <= b ? n : b;
    }
  return A;
}

FinAlg ordinal_sum(const std::vector<FinAlg>& components) {
  if (components.empty()) throw PreconditionError("ordinal_sum: no components");
  for (const auto& c : components) {
    if (!c.has_divisions()) throw PreconditionError("ordinal_sum: component '" + c.name + "' has no divisions");
    if (!c.is_integral()) throw PreconditionError("ordinal_sum: component '" + c.name + "' is not integral");
    if (!c.is_chain()) throw PreconditionError("ordinal_sum: component '" + c.name + "' is not a chain");
  }

  std::string name;
  for (const auto& c : components) name += (name.empty() ? "" : "+") + (c.name.empty() ? "?" : c.name);

  // global element = (component, local element); unit is shared
  struct Loc {
    int comp;
    Elem local;
  };
  std::vector<Loc> locs;
  std::vector<std::vector<Elem>> index(components.size());
  std::optional<bool> bounded;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    index[i].assign(c.size, -1);
    if (c.size > 1 && !bounded) bounded = c.zero.has_value();
    for (Elem x : c.chain_order()) {
      if (x == c.unit) continue;
      index[i][x] = static_cast<Elem>(locs.size());
      locs.push_back({static_cast<int>(i), x});
    }
  }
  const int size = static_cast<int>(locs.size()) + 1;
  if (size > kMaxElements) throw PreconditionError("ordinal_sum: too many elements");
  const Elem unit = size - 1;
  for (std::size_t i = 0; i < components.size(); ++i) index[i][components[i].unit] = unit;

  FinAlg S = chain_skeleton(size);
  S.name = name;
  S.unit = unit;
  if (bounded.value_or(components.front().zero.has_value())) S.zero = 0;
  S.prod = S.ldiv = S.rdiv = Table(size);

  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      if (x == unit || y == unit) {
        S.prod(x, y) = x == unit ? y : x;
        S.ldiv(x, y) = x == unit ? y : unit;
        S.rdiv(y, x) = x == unit ? y : unit;
        continue;
      }
      const Loc lx = locs[x], ly = locs[y];
      const auto& c = components[lx.comp];
      const auto& idx = index[lx.comp];
      if (lx.comp == ly.comp) {
        S.prod(x, y) = idx[c.prod(lx.local, ly.local)];
        S.ldiv(x, y) = idx[c.ldiv(lx.local, ly.local)];
        S.rdiv(y, x) = idx[c.rdiv(ly.local, lx.local)];
      } else if (lx.comp < ly.comp) {
        S.prod(x, y) = x;
        S.ldiv(x, y) = unit;
        S.rdiv(y, x) = unit;
      } else {
        S.prod(x, y) = y;
        S.ldiv(x, y) = y;
        S.rdiv(y, x) = y;
      }
    }
  const auto report = validate(S);
  if (!report.ok()) throw std::logic_error("ordinal_sum produced an invalid algebra: " + report.describe());
  return S;
}

Rotation rotate_detailed(const RotationSpec& spec) {
  const FinAlg& A = spec.base;
  if (spec.n < 2) throw PreconditionError("rotate: n must be >= 2");
  if (!A.has_divisions()) throw PreconditionError("rotate: base has no divisions");
  if (!A.is_integral()) throw PreconditionError("rotate: base is not integral");
  if (!A.is_commutative()) throw PreconditionError("rotate: base is not commutative");

  const bool id = spec.delta == Delta::Identity;
  auto delta = [&](Elem a) { return id ? a : A.unit; };

  // coradical: d' for d in delta[A]
  std::vector<Elem> image;
  for (Elem a = 0; a < A.size; ++a)
    if (std::find(image.begin(), image.end(), delta(a)) == image.end()) image.push_back(delta(a));
  std::sort(image.begin(), image.end());
  const int nd = static_cast<int>(image.size());
  const int nl = spec.n - 2;
  const int size = nd + nl + A.size;
  if (size > kMaxElements) throw PreconditionError("rotate: too many elements");

  std::vector<Elem> prime(A.size, -1);  // d -> index of d'
  for (int i = 0; i < nd; ++i) prime[image[i]] = i;
  auto ladder = [&](int i) { return nd + i - 1; };  // l_i, 1 <= i <= nl
  auto base = [&](Elem a) { return nd + nl + a; };
  const Elem zero = prime[A.unit];

  enum class Part { Co, Ladder, Base };
  std::vector<Part> part(size);
  std::vector<Elem> local(size);
  for (Elem d : image) part[prime[d]] = Part::Co, local[prime[d]] = d;
  for (int i = 1; i <= nl; ++i) part[ladder(i)] = Part::Ladder, local[ladder(i)] = i;
  for (Elem a = 0; a < A.size; ++a) part[base(a)] = Part::Base, local[base(a)] = a;

  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      if (part[x] != part[y]) {
        leq[x][y] = part[x] < part[y];
      } else if (part[x] == Part::Co) {
        leq[x][y] = A.leq(local[y], local[x]);
      } else if (part[x] == Part::Ladder) {
        leq[x][y] = local[x] <= local[y];
      } else {
        leq[x][y] = A.leq(local[x], local[y]);
      }
    }

  FinAlg R;
  R.name = "rot(" + (A.name.empty() ? std::string("?") : A.name) + "," + std::to_string(spec.n) + "," +
           to_string(spec.delta) + ")";
  R.size = size;
  R.unit = base(A.unit);
  R.zero = zero;
  std::tie(R.join, R.meet) = lattice_tables(leq);

  // l_0 is the zero; the base acts as l_{n-1}
  auto ladder_elem = [&](int i) { return i <= 0 ? zero : ladder(i); };
  auto mul = [&](Elem x, Elem y) -> Elem {
    const Part px = part[x], py = part[y];
    if (px == Part::Base && py == Part::Base) return base(A.prod(local[x], local[y]));
    if (px == Part::Base && py == Part::Co) return prime[delta(A.ldiv(local[x], local[y]))];
    if (px == Part::Co && py == Part::Base) return prime[delta(A.ldiv(local[y], local[x]))];
    if (px == Part::Co || py == Part::Co) return zero;
    if (px == Part::Base) return y;
    if (py == Part::Base) return x;
    return ladder_elem(local[x] + local[y] - (spec.n - 1));
  };
  R.prod = Table(size);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      const Elem v = mul(x, y);
      if (v < 0) throw std::logic_error("rotate: product leaves the carrier");
      R.prod(x, y) = v;
    }
  R = complete_divisions(std::move(R));

  // the printed division cases must agree with the completed residuals
  for (Elem a = 0; a < A.size; ++a)
    for (Elem b : image) {
      if (R.ldiv(base(a), prime[b]) != prime[delta(A.prod(b, a))])
        throw std::logic_error("rotate: a\\b' disagrees with the construction");
      if (std::find(image.begin(), image.end(), a) != image.end() &&
          R.ldiv(prime[a], prime[b]) != base(A.ldiv(b, a)))
        throw std::logic_error("rotate: a'\\b' disagrees with the construction");
    }

  Rotation out;
  out.alg = std::move(R);
  for (Elem a = 0; a < A.size; ++a) out.base_image.push_back(base(a));
  for (int i = 1; i <= nl; ++i) out.ladder.push_back(ladder(i));
  return out;
}

FinAlg rotate(const RotationSpec& spec) { return rotate_detailed(spec).alg; }

FinAlg direct_product(const FinAlg& a, const FinAlg& b) {
  if (!a.has_divisions() || !b.has_divisions()) throw PreconditionError("direct_product: missing divisions");
  const int size = a.size * b.size;
  if (size > kMaxElements) throw PreconditionError("direct_product: too many elements");
  auto pair = [&](Elem x, Elem y) { return x * b.size + y; };
  FinAlg P;
  P.name = (a.name.empty() ? "?" : a.name) + "x" + (b.name.empty() ? "?" : b.name);
  P.size = size;
  P.unit = pair(a.unit, b.unit);
  if (a.zero && b.zero) P.zero = pair(*a.zero, *b.zero);
  P.join = P.meet = P.prod = P.ldiv = P.rdiv = Table(size);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      const Elem x1 = x / b.size, x2 = x % b.size, y1 = y / b.size, y2 = y % b.size;
      P.join(x, y) = pair(a.join(x1, y1), b.join(x2, y2));
      P.meet(x, y) = pair(a.meet(x1, y1), b.meet(x2, y2));
      P.prod(x, y) = pair(a.prod(x1, y1), b.prod(x2, y2));
      P.ldiv(x, y) = pair(a.ldiv(x1, y1), b.ldiv(x2, y2));
      P.rdiv(x, y) = pair(a.rdiv(x1, y1), b.rdiv(x2, y2));
    }
  return P;
}

std::string to_string(Delta d) { return d == Delta::Identity ? "id" : "one"; }

Delta parse_delta(const std::string& s) {
  if (s == "id") return Delta::Identity;
  if (s == "one") return Delta::ConstantOne;
  throw std::invalid_argument("unknown delta '" + s + "' (expected id or one)");
}

}  // namespace reslat
