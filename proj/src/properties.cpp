#include "reslat/properties.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "reslat/congruence.hpp"

namespace reslat {

bool PropertyReport::get(const std::string& name) const {
  for (const auto& [k, v] : verdicts)
    if (k == name) return v;
  throw std::out_of_range("no property '" + name + "'");
}

void PropertyReport::set(const std::string& name, bool value, std::string witness) {
  auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& kv) { return kv.first == name; });
  if (it == verdicts.end())
    verdicts.emplace_back(name, value);
  else
    it->second = value;
  if (!witness.empty()) witnesses[name] = std::move(witness);
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"integral",
                                              "commutative",
                                              "divisible",
                                              "cancellative",
                                              "idempotent",
                                              "prelinear",
                                              "representable",
                                              "one_distributive",
                                              "normal",
                                              "well_connected",
                                              "weakly_well_connected",
                                              "chain",
                                              "subdirectly_irreducible",
                                              "simple"};
  return names;
}

namespace {

std::string pair_text(const std::pair<Elem, Elem>& p) {
  return "a=" + std::to_string(p.first) + ", b=" + std::to_string(p.second);
}

bool representable_by_quotients(const FinAlg& alg) {
  for (ElemSet f : congruence_filters(alg).filters) {
    const FinAlg q = quotient(alg, f);
    if (is_subdirectly_irreducible(q) && !q.is_chain()) return false;
  }
  return true;
}

Elem power(const FinAlg& alg, Elem x, int n) {
  Elem r = alg.unit;
  for (int i = 0; i < n; ++i) r = alg.prod(r, x);
  return r;
}

}  // namespace

PropertyReport basic_properties(const FinAlg& alg) {
  PropertyReport r;
  auto equational = [&](const std::string& key, const std::string& builtin_name) {
    const Verdict v = satisfies(alg, builtin(builtin_name));
    r.set(key, v.holds, v.counterexample ? to_string(*v.counterexample) : std::string());
    return v.holds;
  };
  equational("integral", "integral");
  equational("commutative", "commutative");
  equational("divisible", "divisible");
  equational("cancellative", "cancellative");
  equational("idempotent", "idempotent");
  equational("prelinear", "prelinear");
  const bool rep = equational("representable", "representable");
  if (rep != representable_by_quotients(alg))
    throw std::logic_error("representability: equation and quotient test disagree on '" + alg.name + "'");
  equational("one_distributive", "one-distributive");

  std::pair<Elem, Elem> w;
  bool v = is_normal(alg, &w);
  r.set("normal", v, v ? "" : pair_text(w));
  v = is_well_connected(alg, &w);
  r.set("well_connected", v, v ? "" : pair_text(w));
  v = is_weakly_well_connected(alg, &w);
  r.set("weakly_well_connected", v, v ? "" : pair_text(w));
  r.set("chain", alg.is_chain());
  r.set("subdirectly_irreducible", is_subdirectly_irreducible(alg));
  r.set("simple", is_simple(alg));
  return r;
}

bool has_property(const FinAlg& alg, const std::string& name) {
  if (name == "integral") return alg.is_integral();
  if (name == "commutative") return alg.is_commutative();
  if (name == "chain") return alg.is_chain();
  if (name == "normal") return is_normal(alg);
  if (name == "well_connected") return is_well_connected(alg);
  if (name == "weakly_well_connected") return is_weakly_well_connected(alg);
  if (name == "subdirectly_irreducible") return is_subdirectly_irreducible(alg);
  if (name == "simple") return is_simple(alg);
  if (name == "one_distributive") return satisfies(alg, builtin("one-distributive")).holds;
  if (name == "divisible" || name == "cancellative" || name == "idempotent" || name == "prelinear" ||
      name == "representable")
    return satisfies(alg, builtin(name)).holds;
  throw std::invalid_argument("unknown property '" + name + "'");
}

bool is_normal(const FinAlg& alg, std::pair<Elem, Elem>* witness) {
  const int n = alg.size;
  for (Elem a = 0; a < n; ++a) {
    const Elem p = power(alg, alg.meet(a, alg.unit), n);
    for (Elem b = 0; b < n; ++b)
      if (!alg.leq(alg.prod(p, b), alg.prod(b, a)) || !alg.leq(alg.prod(b, p), alg.prod(a, b))) {
        if (witness) *witness = {a, b};
        return false;
      }
  }
  return true;
}

bool all_filters_normal(const FinAlg& alg) {
  for (ElemSet f : all_filters(alg).filters)
    if (!is_congruence_filter(alg, f)) return false;
  return true;
}

bool is_well_connected(const FinAlg& alg, std::pair<Elem, Elem>* witness) {
  const Elem u = alg.unit;
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = 0; b < alg.size; ++b)
      if (alg.leq(u, alg.join(a, b)) && !alg.leq(u, a) && !alg.leq(u, b)) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

bool is_weakly_well_connected(const FinAlg& alg, std::pair<Elem, Elem>* witness) {
  const Elem u = alg.unit;
  bool by_meets = true, irreducible = true;
  std::pair<Elem, Elem> first{-1, -1};
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = 0; b < alg.size; ++b) {
      if (alg.join(alg.meet(a, u), alg.meet(b, u)) == u && !alg.leq(u, a) && !alg.leq(u, b)) {
        if (by_meets) first = {a, b};
        by_meets = false;
      }
      if (alg.join(a, b) == u && a != u && b != u) irreducible = false;
    }
  if (by_meets != irreducible)
    throw std::logic_error("weak well-connectedness: the two characterizations disagree on '" + alg.name + "'");
  if (!by_meets && witness) *witness = first;
  return by_meets;
}

std::vector<UnaryTable> gamma_set(const FinAlg& alg, int n, int cap) {
  if (n < 0) throw PreconditionError("gamma_set: n must be >= 0");
  if (n > cap) throw PreconditionError("gamma_set: n exceeds the cap " + std::to_string(cap));
  UnaryTable base(alg.size);
  for (Elem x = 0; x < alg.size; ++x) base[x] = alg.meet(x, alg.unit);
  if (n == 0) return {base};

  std::vector<UnaryTable> singles;
  for (Elem b = 0; b < alg.size; ++b) {
    singles.push_back(conjugate(alg, Side::Left, b));
    singles.push_back(conjugate(alg, Side::Right, b));
  }
  std::sort(singles.begin(), singles.end());
  singles.erase(std::unique(singles.begin(), singles.end()), singles.end());

  std::vector<UnaryTable> level = singles;
  for (int k = 1; k < n; ++k) {
    std::set<UnaryTable> next;
    for (const auto& c : singles)
      for (const auto& g : level) {
        UnaryTable t(alg.size);
        for (Elem x = 0; x < alg.size; ++x) t[x] = c[g[x]];
        next.insert(std::move(t));
      }
    level.assign(next.begin(), next.end());
  }
  return level;
}

std::vector<std::vector<bool>> bn_relation(const FinAlg& alg, int n, int cap) {
  const auto gammas = gamma_set(alg, n, cap);
  std::vector<ElemSet> values(alg.size);
  for (Elem a = 0; a < alg.size; ++a)
    for (const auto& g : gammas) values[a].insert(g[a]);
  std::vector<std::vector<bool>> holds(alg.size, std::vector<bool>(alg.size, true));
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = 0; b < alg.size; ++b)
      for (Elem u : values[a].elements()) {
        for (Elem v : values[b].elements())
          if (alg.join(u, v) != alg.unit) {
            holds[a][b] = false;
            break;
          }
        if (!holds[a][b]) break;
      }
  return holds;
}

bool satisfies_Bn(const FinAlg& alg, Elem a, Elem b, int n, int cap) { return bn_relation(alg, n, cap)[a][b]; }

bool is_gamma_connected(const FinAlg& alg, int n, int cap) {
  const auto holds = bn_relation(alg, n, cap);
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = 0; b < alg.size; ++b)
      if (holds[a][b] && !alg.leq(alg.unit, a) && !alg.leq(alg.unit, b)) return false;
  return true;
}

bool satisfies_Gnk(const FinAlg& alg, int n, int k, int cap) {
  const auto hn = bn_relation(alg, n, cap);
  const auto hk = bn_relation(alg, k, cap);
  for (Elem a = 0; a < alg.size; ++a)
    for (Elem b = 0; b < alg.size; ++b)
      if (hn[a][b] && !hk[a][b]) return false;
  return true;
}

bool satisfies_G_quasi(const FinAlg& alg) {
  std::vector<UnaryTable> left, right;
  for (Elem c = 0; c < alg.size; ++c) {
    left.push_back(conjugate(alg, Side::Left, c));
    right.push_back(conjugate(alg, Side::Right, c));
  }
  for (Elem x = 0; x < alg.size; ++x)
    for (Elem y = 0; y < alg.size; ++y) {
      if (alg.join(x, y) != alg.unit) continue;
      for (const auto& l : left)
        for (const auto& r : right)
          if (alg.join(l[x], r[y]) != alg.unit) return false;
    }
  return true;
}

}  // namespace reslat
