#include "reslat/canonical.hpp"

#include <algorithm>
#include <map>

namespace reslat {

namespace {

using Colors = std::vector<int>;

// Renumbers colors to 0..k-1 preserving their order.
int compress(Colors& c) {
  Colors sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& x : c) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return static_cast<int>(sorted.size());
}

Colors initial_colors(const TableStructure& s) {
  std::vector<std::vector<int>> sig(s.size);
  for (Elem x = 0; x < s.size; ++x) {
    for (Elem c : s.constants) sig[x].push_back(x == c ? 0 : 1);
    for (const Table* t : s.tables) {
      int fixes_right = 0, fixes_left = 0;
      for (Elem y = 0; y < s.size; ++y) {
        fixes_right += (*t)(x, y) == y;
        fixes_left += (*t)(x, y) == x;
      }
      sig[x].push_back((*t)(x, x) == x);
      sig[x].push_back(fixes_right);
      sig[x].push_back(fixes_left);
    }
  }
  auto sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors c(s.size);
  for (Elem x = 0; x < s.size; ++x)
    c[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
  return c;
}

// Equitable refinement: split classes by the multiset of (color of partner,
// colors of products with partner) until stable.
void refine(const TableStructure& s, Colors& c) {
  int classes = compress(c);
  while (true) {
    std::vector<std::vector<int>> sig(s.size);
    for (Elem x = 0; x < s.size; ++x) {
      std::vector<std::vector<int>> rel;
      rel.reserve(s.size);
      for (Elem y = 0; y < s.size; ++y) {
        std::vector<int> r{c[y]};
        for (const Table* t : s.tables) {
          r.push_back(c[(*t)(x, y)]);
          r.push_back(c[(*t)(y, x)]);
        }
        rel.push_back(std::move(r));
      }
      std::sort(rel.begin(), rel.end());
      sig[x].push_back(c[x]);
      for (auto& r : rel) sig[x].insert(sig[x].end(), r.begin(), r.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Elem x = 0; x < s.size; ++x)
      c[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return;
    classes = now;
  }
}

std::vector<int> key_for(const TableStructure& s, const std::vector<Elem>& perm) {
  std::vector<int> key;
  key.reserve(s.constants.size() + s.tables.size() * s.size * s.size + 1);
  key.push_back(s.size);
  for (Elem c : s.constants) key.push_back(perm[c]);
  std::vector<Elem> inv(s.size);
  for (Elem x = 0; x < s.size; ++x) inv[perm[x]] = x;
  for (const Table* t : s.tables)
    for (Elem i = 0; i < s.size; ++i)
      for (Elem j = 0; j < s.size; ++j) key.push_back(perm[(*t)(inv[i], inv[j])]);
  return key;
}

void search(const TableStructure& s, Colors c, CanonicalForm& best, bool& have) {
  refine(s, c);
  // first non-singleton cell, in color order
  std::map<int, std::vector<Elem>> cells;
  for (Elem x = 0; x < s.size; ++x) cells[c[x]].push_back(x);
  const std::vector<Elem>* target = nullptr;
  int target_color = -1;
  for (auto& [color, members] : cells)
    if (members.size() > 1) {
      target = &members;
      target_color = color;
      break;
    }
  if (!target) {
    std::vector<Elem> perm(c.begin(), c.end());
    auto key = key_for(s, perm);
    if (!have || key < best.key) {
      best.key = std::move(key);
      best.perm = std::move(perm);
      have = true;
    }
    return;
  }
  for (Elem x : *target) {
    Colors next(s.size);
    for (Elem y = 0; y < s.size; ++y) next[y] = 2 * c[y] + ((c[y] == target_color && y != x) ? 1 : 0);
    search(s, std::move(next), best, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const TableStructure& s) {
  CanonicalForm best;
  bool have = false;
  search(s, initial_colors(s), best, have);
  return best;
}

CanonicalForm canonical_form(const FinAlg& alg) {
  TableStructure s{alg.size, {&alg.join, &alg.prod}, {alg.unit}};
  return canonical_form(s);
}

FinAlg canonicalize(const FinAlg& alg) {
  auto cf = canonical_form(alg);
  return alg.relabeled(cf.perm);
}

}  // namespace reslat
