#include "reslat/congruence.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace reslat {

std::vector<Elem> conjugate(const FinAlg& alg, Side side, Elem a) {
  std::vector<Elem> t(alg.size);
  for (Elem x = 0; x < alg.size; ++x) {
    const Elem v = side == Side::Left ? alg.ldiv(a, alg.prod(x, a)) : alg.rdiv(alg.prod(a, x), a);
    t[x] = alg.meet(v, alg.unit);
  }
  return t;
}

namespace {

bool up_closed(const FinAlg& alg, ElemSet f) {
  for (Elem x : f.elements())
    for (Elem y = 0; y < alg.size; ++y)
      if (alg.leq(x, y) && !f.contains(y)) return false;
  return true;
}

ElemSet close(const FinAlg& alg, ElemSet f, bool conjugates) {
  f.insert(alg.unit);
  std::vector<std::vector<Elem>> conj;
  if (conjugates)
    for (Elem b = 0; b < alg.size; ++b) {
      conj.push_back(conjugate(alg, Side::Left, b));
      conj.push_back(conjugate(alg, Side::Right, b));
    }
  while (true) {
    ElemSet next = f;
    const auto elems = f.elements();
    for (Elem x : elems) {
      for (Elem y = 0; y < alg.size; ++y)
        if (alg.leq(x, y)) next.insert(y);
      for (Elem y : elems) {
        next.insert(alg.meet(x, y));
        next.insert(alg.prod(x, y));
      }
      for (const auto& c : conj) next.insert(c[x]);
    }
    if (next == f) return f;
    f = next;
  }
}

FilterLattice lattice_of(const FinAlg& alg, bool conjugates) {
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<ElemSet> work{close(alg, {}, conjugates)};
  seen.insert({work[0].count(), work[0].bits()});
  for (std::size_t i = 0; i < work.size(); ++i) {
    const ElemSet f = work[i];
    for (Elem x = 0; x < alg.size; ++x) {
      if (f.contains(x)) continue;
      ElemSet g = f;
      g.insert(x);
      g = close(alg, g, conjugates);
      if (seen.insert({g.count(), g.bits()}).second) work.push_back(g);
    }
  }
  FilterLattice L;
  for (const auto& [c, bits] : seen) L.filters.push_back(ElemSet(bits));
  const int k = static_cast<int>(L.filters.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !L.filters[i].subset_of(L.filters[j])) continue;
      bool cover = true;
      for (int m = 0; m < k && cover; ++m)
        if (m != i && m != j && L.filters[i].subset_of(L.filters[m]) && L.filters[m].subset_of(L.filters[j]))
          cover = false;
      if (cover) L.hasse.emplace_back(i, j);
    }
  return L;
}

}  // namespace

bool is_filter(const FinAlg& alg, ElemSet f) {
  if (!f.contains(alg.unit) || !up_closed(alg, f)) return false;
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      if (!f.contains(alg.meet(x, y)) || !f.contains(alg.prod(x, y))) return false;
  return true;
}

bool is_congruence_filter(const FinAlg& alg, ElemSet f) {
  if (!is_filter(alg, f)) return false;
  for (Elem b = 0; b < alg.size; ++b) {
    const auto l = conjugate(alg, Side::Left, b);
    const auto r = conjugate(alg, Side::Right, b);
    for (Elem x : f.elements())
      if (!f.contains(l[x]) || !f.contains(r[x])) return false;
  }
  return true;
}

ElemSet generate_filter(const FinAlg& alg, ElemSet x) { return close(alg, x, false); }
ElemSet generate_congruence_filter(const FinAlg& alg, ElemSet x) { return close(alg, x, true); }

int FilterLattice::index_of(ElemSet f) const {
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i] == f) return static_cast<int>(i);
  return -1;
}

std::vector<int> FilterLattice::atoms() const {
  std::vector<int> out;
  for (const auto& [lo, hi] : hasse)
    if (lo == 0) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FilterLattice::coatoms() const {
  std::vector<int> out;
  const int top = static_cast<int>(filters.size()) - 1;
  for (const auto& [lo, hi] : hasse)
    if (hi == top) out.push_back(lo);
  std::sort(out.begin(), out.end());
  return out;
}

FilterLattice all_filters(const FinAlg& alg) { return lattice_of(alg, false); }
FilterLattice congruence_filters(const FinAlg& alg) { return lattice_of(alg, true); }

Congruence Congruence::from_labels(std::vector<int> labels) {
  std::map<int, int> rename;
  for (int& l : labels) {
    auto [it, fresh] = rename.emplace(l, static_cast<int>(rename.size()));
    l = it->second;
  }
  return Congruence{std::move(labels)};
}

int Congruence::num_blocks() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(num_blocks());
  for (std::size_t x = 0; x < block.size(); ++x) out[block[x]].push_back(static_cast<Elem>(x));
  return out;
}

bool Congruence::leq(const Congruence& other) const {
  for (std::size_t a = 0; a < block.size(); ++a)
    for (std::size_t b = a + 1; b < block.size(); ++b)
      if (block[a] == block[b] && other.block[a] != other.block[b]) return false;
  return true;
}

namespace {

std::array<const Table*, 5> op_tables(const FinAlg& alg) {
  return {&alg.join, &alg.meet, &alg.prod, &alg.ldiv, &alg.rdiv};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Smallest congruence containing the pairs already merged in uf.
Congruence compatible_closure(const FinAlg& alg, UnionFind& uf) {
  const auto ops = op_tables(alg);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < alg.size; ++x)
      for (Elem y = x + 1; y < alg.size; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int k = 0; k < 5; ++k)
          for (Elem z = 0; z < alg.size; ++z) {
            changed |= uf.unite((*ops[k])(x, z), (*ops[k])(y, z));
            changed |= uf.unite((*ops[k])(z, x), (*ops[k])(z, y));
          }
      }
  }
  std::vector<int> labels(alg.size);
  for (Elem x = 0; x < alg.size; ++x) labels[x] = uf.find(x);
  return Congruence::from_labels(std::move(labels));
}

}  // namespace

bool is_congruence(const FinAlg& alg, const Congruence& c) {
  const auto ops = op_tables(alg);
  for (Elem x = 0; x < alg.size; ++x)
    for (Elem y = 0; y < alg.size; ++y) {
      if (!c.related(x, y)) continue;
      for (int k = 0; k < 5; ++k)
        for (Elem z = 0; z < alg.size; ++z)
          if (!c.related((*ops[k])(x, z), (*ops[k])(y, z)) || !c.related((*ops[k])(z, x), (*ops[k])(z, y)))
            return false;
    }
  return true;
}

Congruence filter_to_congruence(const FinAlg& alg, ElemSet f) {
  if (!is_congruence_filter(alg, f)) throw PreconditionError("not a congruence filter");
  UnionFind uf(alg.size);
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = a + 1; b < alg.size; ++b)
      if (f.contains(alg.rdiv(a, b)) && f.contains(alg.rdiv(b, a))) uf.unite(a, b);
  std::vector<int> labels(alg.size);
  for (Elem x = 0; x < alg.size; ++x) labels[x] = uf.find(x);
  return Congruence::from_labels(std::move(labels));
}

ElemSet congruence_to_filter(const FinAlg& alg, const Congruence& c) {
  ElemSet f;
  const ElemSet cone = positive_cone(alg);
  for (Elem x = 0; x < alg.size; ++x)
    for (Elem a : cone.elements())
      if (c.related(x, a)) f.insert(x);
  return f;
}

Congruence principal_congruence(const FinAlg& alg, Elem a, Elem b) {
  UnionFind uf(alg.size);
  uf.unite(a, b);
  return compatible_closure(alg, uf);
}

Congruence congruence_join(const FinAlg& alg, const Congruence& a, const Congruence& b) {
  UnionFind uf(alg.size);
  for (const auto* c : {&a, &b})
    for (const auto& blk : c->blocks())
      for (Elem x : blk) uf.unite(blk.front(), x);
  return compatible_closure(alg, uf);
}

std::vector<Congruence> all_congruences_bruteforce(const FinAlg& alg) {
  std::vector<int> id(alg.size);
  std::iota(id.begin(), id.end(), 0);
  std::set<Congruence> all{Congruence::from_labels(id)};
  std::vector<Congruence> principal;
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = a + 1; b < alg.size; ++b) principal.push_back(principal_congruence(alg, a, b));
  std::vector<Congruence> work(all.begin(), all.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& p : principal) {
      Congruence j = congruence_join(alg, work[i], p);
      if (all.insert(j).second) work.push_back(std::move(j));
    }
  return {all.begin(), all.end()};
}

FinAlg quotient(const FinAlg& alg, const Congruence& c) {
  const auto blocks = c.blocks();
  const int k = static_cast<int>(blocks.size());
  FinAlg Q;
  Q.name = alg.name.empty() ? std::string() : alg.name + "/~";
  Q.size = k;
  Q.unit = c.block[alg.unit];
  if (alg.zero) Q.zero = c.block[*alg.zero];
  Table* dst[5] = {&Q.join, &Q.meet, &Q.prod, &Q.ldiv, &Q.rdiv};
  const auto src = op_tables(alg);
  for (int t = 0; t < 5; ++t) {
    *dst[t] = Table(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) (*dst[t])(i, j) = c.block[(*src[t])(blocks[i].front(), blocks[j].front())];
  }
  return Q;
}

FinAlg quotient(const FinAlg& alg, ElemSet f) { return quotient(alg, filter_to_congruence(alg, f)); }

bool is_subdirectly_irreducible(const FinAlg& alg) {
  const auto L = congruence_filters(alg);
  return L.filters.size() >= 2 && L.atoms().size() == 1;
}

bool is_simple(const FinAlg& alg) { return congruence_filters(alg).filters.size() == 2; }

ElemSet radical(const FinAlg& alg) {
  const auto L = congruence_filters(alg);
  ElemSet r = ElemSet::full(alg.size);
  if (L.filters.size() < 2) return r;
  for (int i : L.coatoms()) r = r & L.filters[i];
  return r;
}

}  // namespace reslat
