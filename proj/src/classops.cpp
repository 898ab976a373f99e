#include "reslat/classops.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "reslat/canonical.hpp"
#include "reslat/congruence.hpp"

namespace reslat {

bool AlgebraCatalog::add(FinAlg alg) {
  auto key = canonical_form(alg).key;
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return false;
  keys_.push_back(std::move(key));
  algebras_.push_back(std::move(alg));
  return true;
}

bool AlgebraCatalog::contains(const FinAlg& alg) const {
  const auto key = canonical_form(alg).key;
  return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

void AlgebraCatalog::sort() {
  std::vector<std::size_t> idx(algebras_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
  std::vector<FinAlg> algs;
  std::vector<std::vector<int>> keys;
  for (std::size_t i : idx) {
    algs.push_back(std::move(algebras_[i]));
    keys.push_back(std::move(keys_[i]));
  }
  algebras_ = std::move(algs);
  keys_ = std::move(keys);
}

ElemSet subuniverse_closure(const FinAlg& alg, ElemSet s) {
  s.insert(alg.unit);
  if (alg.zero) s.insert(*alg.zero);
  const Table* ops[5] = {&alg.join, &alg.meet, &alg.prod, &alg.ldiv, &alg.rdiv};
  while (true) {
    ElemSet next = s;
    const auto elems = s.elements();
    for (Elem x : elems)
      for (Elem y : elems)
        for (const Table* t : ops) next.insert((*t)(x, y));
    if (next == s) return s;
    s = next;
  }
}

std::vector<ElemSet> subuniverses(const FinAlg& alg) {
  std::set<ElemSet> seen{subuniverse_closure(alg, {})};
  std::vector<ElemSet> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (Elem x = 0; x < alg.size; ++x) {
      if (work[i].contains(x)) continue;
      ElemSet g = work[i];
      g.insert(x);
      g = subuniverse_closure(alg, g);
      if (seen.insert(g).second) work.push_back(g);
    }
  return {seen.begin(), seen.end()};
}

FinAlg induced_subalgebra(const FinAlg& alg, ElemSet s) {
  const auto elems = s.elements();
  const int k = static_cast<int>(elems.size());
  std::vector<Elem> local(alg.size, -1);
  for (int i = 0; i < k; ++i) local[elems[i]] = i;
  FinAlg sub;
  sub.name = alg.name.empty() ? std::string() : alg.name + "|" + std::to_string(k);
  sub.size = k;
  sub.unit = local[alg.unit];
  if (alg.zero) sub.zero = local[*alg.zero];
  Table* dst[5] = {&sub.join, &sub.meet, &sub.prod, &sub.ldiv, &sub.rdiv};
  const Table* src[5] = {&alg.join, &alg.meet, &alg.prod, &alg.ldiv, &alg.rdiv};
  for (int t = 0; t < 5; ++t) {
    *dst[t] = Table(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) (*dst[t])(i, j) = local[(*src[t])(elems[i], elems[j])];
  }
  return sub;
}

AlgebraCatalog subalgebras(const FinAlg& alg) {
  AlgebraCatalog c;
  for (ElemSet s : subuniverses(alg)) c.add(induced_subalgebra(alg, s));
  c.sort();
  return c;
}

AlgebraCatalog homomorphic_images(const FinAlg& alg) {
  AlgebraCatalog c;
  for (ElemSet f : congruence_filters(alg).filters) c.add(quotient(alg, f));
  c.sort();
  return c;
}

AlgebraCatalog hs_closure(const FinAlg& alg) {
  AlgebraCatalog c;
  const auto subs = subalgebras(alg);
  for (const auto& s : subs.algebras()) {
    const auto images = homomorphic_images(s);
    for (const auto& h : images.algebras()) c.add(h);
  }
  const auto images = homomorphic_images(alg);
  for (const auto& h : images.algebras()) {
    const auto hs = subalgebras(h);
    for (const auto& s : hs.algebras()) c.add(s);
  }
  c.sort();
  return c;
}

bool hs_contains(const FinAlg& b, const FinAlg& a) { return hs_closure(b).contains(a); }

namespace {

std::vector<FinAlg> si_members(const AlgebraCatalog& hs) {
  std::vector<FinAlg> out;
  for (const auto& m : hs.algebras())
    if (is_subdirectly_irreducible(m)) out.push_back(m);
  return out;
}

bool leq_cached(const std::vector<FinAlg>& si_of_a, const AlgebraCatalog& hs_of_b) {
  for (const auto& m : si_of_a)
    if (!hs_of_b.contains(m)) return false;
  return true;
}

}  // namespace

bool var_leq(const FinAlg& a, const FinAlg& b) { return leq_cached(si_members(hs_closure(a)), hs_closure(b)); }

bool var_equal(const FinAlg& a, const FinAlg& b) { return var_leq(a, b) && var_leq(b, a); }

VarietyPoset variety_poset(const std::vector<FinAlg>& algebras) {
  const int n = static_cast<int>(algebras.size());
  std::vector<AlgebraCatalog> hs;
  std::vector<std::vector<FinAlg>> si;
  for (const auto& a : algebras) {
    hs.push_back(hs_closure(a));
    si.push_back(si_members(hs.back()));
  }
  VarietyPoset P;
  for (const auto& a : algebras) P.labels.push_back(a.name.empty() ? "?" : a.name);
  P.leq.assign(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P.leq[i][j] = i == j || leq_cached(si[i], hs[j]);

  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(P.classes.size());
    P.classes.push_back({i});
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && P.leq[i][j] && P.leq[j][i]) {
        cls[j] = cls[i];
        P.classes.back().push_back(j);
      }
  }
  const int k = static_cast<int>(P.classes.size());
  auto below = [&](int c, int d) {
    const int x = P.classes[c][0], y = P.classes[d][0];
    return c != d && P.leq[x][y];
  };
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      if (!below(c, d)) continue;
      bool cover = true;
      for (int e = 0; e < k && cover; ++e)
        if (below(c, e) && below(e, d)) cover = false;
      if (cover) P.hasse.emplace_back(c, d);
    }
  return P;
}

std::string VarietyPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph variety_poset {\n  rankdir=BT;\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::string label;
    for (int i : classes[c]) label += (label.empty() ? "" : " = ") + labels[i];
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    os << "  n" << c << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [lo, hi] : hasse) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace reslat
