#include "reslat/decomposition.hpp"

#include <algorithm>

#include "reslat/builders.hpp"
#include "reslat/congruence.hpp"
#include "reslat/term.hpp"

namespace reslat {

void require_integral_chain(const FinAlg& alg) {
  if (!alg.has_divisions()) throw PreconditionError("algebra has no divisions");
  if (!alg.is_integral()) throw PreconditionError("algebra is not integral");
  if (!alg.is_chain()) throw PreconditionError("algebra is not a chain");
}

namespace {

std::vector<Elem> nonunit_order(const FinAlg& alg) {
  auto order = alg.chain_order();
  order.pop_back();  // the unit is the top
  return order;
}

bool closed(const FinAlg& alg, const std::vector<Elem>& part) {
  ElemSet s = ElemSet::of(part);
  s.insert(alg.unit);
  for (Elem x : s.elements())
    for (Elem y : s.elements())
      for (const Table* t : {&alg.join, &alg.meet, &alg.prod, &alg.ldiv, &alg.rdiv})
        if (!s.contains((*t)(x, y))) return false;
  return true;
}

bool cut_is_valid(const FinAlg& alg, const std::vector<Elem>& order, int j) {
  const std::vector<Elem> lower(order.begin(), order.begin() + j), upper(order.begin() + j, order.end());
  const Elem u = alg.unit;
  for (Elem x : lower)
    for (Elem y : upper) {
      if (alg.prod(x, y) != x || alg.prod(y, x) != x) return false;
      if (alg.ldiv(x, y) != u || alg.rdiv(y, x) != u) return false;
      if (alg.ldiv(y, x) != x || alg.rdiv(x, y) != x) return false;
    }
  return closed(alg, lower) && closed(alg, upper);
}

FinAlg restrict(const FinAlg& alg, const std::vector<Elem>& elems, bool keep_zero) {
  // elems sorted bottom to top, unit last
  const int k = static_cast<int>(elems.size());
  std::vector<Elem> local(alg.size, -1);
  for (int i = 0; i < k; ++i) local[elems[i]] = i;
  FinAlg c;
  c.size = k;
  c.unit = local[alg.unit];
  if (keep_zero && alg.zero) c.zero = local[*alg.zero];
  Table* dst[5] = {&c.join, &c.meet, &c.prod, &c.ldiv, &c.rdiv};
  const Table* src[5] = {&alg.join, &alg.meet, &alg.prod, &alg.ldiv, &alg.rdiv};
  for (int t = 0; t < 5; ++t) {
    *dst[t] = Table(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) (*dst[t])(i, j) = local[(*src[t])(elems[i], elems[j])];
  }
  return c;
}

void require_bounded_wajsberg_chain(const FinAlg& alg) {
  require_integral_chain(alg);
  if (!alg.zero) throw PreconditionError("algebra has no zero");
  if (!satisfies(alg, builtin("wajsberg")).holds) throw PreconditionError("algebra is not a Wajsberg chain");
}

}  // namespace

std::vector<int> valid_cuts(const FinAlg& alg) {
  require_integral_chain(alg);
  const auto order = nonunit_order(alg);
  std::vector<int> cuts;
  for (int j = 1; j < static_cast<int>(order.size()); ++j)
    if (cut_is_valid(alg, order, j)) cuts.push_back(j);
  return cuts;
}

ChainDecomposition sum_decompose(const FinAlg& alg) {
  ChainDecomposition d;
  d.cuts = valid_cuts(alg);
  const auto order = nonunit_order(alg);
  if (order.empty()) return d;
  std::vector<int> bounds{0};
  bounds.insert(bounds.end(), d.cuts.begin(), d.cuts.end());
  bounds.push_back(static_cast<int>(order.size()));
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    std::vector<Elem> elems(order.begin() + bounds[i], order.begin() + bounds[i + 1]);
    elems.push_back(alg.unit);
    FinAlg c = restrict(alg, elems, i == 0);
    c.name = (alg.name.empty() ? std::string("component") : alg.name) + "#" + std::to_string(i + 1);
    d.components.push_back(std::move(c));
    d.embeddings.push_back(std::move(elems));
  }
  return d;
}

int index(const FinAlg& alg) { return static_cast<int>(sum_decompose(alg).components.size()); }

int rank(const FinAlg& alg) {
  require_bounded_wajsberg_chain(alg);
  const FinAlg q = quotient(alg, radical(alg));
  const int n = q.size - 1;
  if (n < 1 || !is_isomorphic(q, lukasiewicz(n)))
    throw std::logic_error("rank: quotient by the radical is not a Lukasiewicz chain");
  return n;
}

int divisibility_index(const FinAlg& alg) {
  require_bounded_wajsberg_chain(alg);
  const Elem zero = *alg.zero;
  int best = 0;
  for (Elem c = 0; c < alg.size; ++c) {
    if (c == alg.unit) continue;
    // candidate copy of L_k: the powers of a coatom
    std::vector<Elem> powers{alg.unit};
    Elem p = alg.unit;
    while (p != zero) {
      const Elem q = alg.prod(p, c);
      if (q == p) break;
      powers.push_back(q);
      p = q;
    }
    if (p != zero) continue;
    const int k = static_cast<int>(powers.size()) - 1;
    if (k <= best) continue;
    std::vector<Elem> elems(powers.rbegin(), powers.rend());
    if (!closed(alg, elems)) continue;
    const FinAlg sub = restrict(alg, elems, true);
    const FinAlg luk = lukasiewicz(k);
    if (sub.prod == luk.prod && sub.join == luk.join && sub.ldiv == luk.ldiv) best = k;
  }
  return best;
}

bool chains_equivalent(const FinAlg& a, const FinAlg& b) {
  const auto da = sum_decompose(a), db = sum_decompose(b);
  if (da.components.size() != db.components.size()) return false;
  for (std::size_t i = 0; i < da.components.size(); ++i)
    if (!is_isomorphic(da.components[i], db.components[i])) return false;
  return true;
}

}  // namespace reslat
