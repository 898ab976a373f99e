#include "doctest.h"
#include "fixtures.hpp"
#include "reslat/classops.hpp"
#include "reslat/decomposition.hpp"
#include "reslat/term.hpp"

using namespace reslat;
using fixtures::luk_hoop;
using fixtures::two;

namespace {

std::vector<FinAlg> pieces() { return {two(), luk_hoop(2), luk_hoop(3), luk_hoop(4)}; }

std::vector<std::vector<FinAlg>> all_sum_inputs(int max_len) {
  std::vector<std::vector<FinAlg>> out;
  std::vector<std::vector<FinAlg>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<FinAlg>> next;
    for (const auto& f : frontier)
      for (const auto& p : pieces()) {
        auto g = f;
        g.push_back(p);
        next.push_back(g);
        out.push_back(g);
      }
    frontier = std::move(next);
  }
  return out;
}

bool wajsberg(const FinAlg& A) { return satisfies(A, builtin("wajsberg")).holds; }

}  // namespace

TEST_CASE("valid cuts") {
  CHECK(valid_cuts(godel(3)).size() == 2);
  CHECK(valid_cuts(lukasiewicz(4)).empty());
  CHECK(valid_cuts(trivial_algebra()).empty());
  CHECK_THROWS_AS(valid_cuts(direct_product(godel(1), godel(1))), PreconditionError);
}

TEST_CASE("decomposition examples") {
  const auto d = sum_decompose(ordinal_sum({luk_hoop(2), two(), luk_hoop(3)}));
  REQUIRE(d.components.size() == 3);
  CHECK(is_isomorphic(d.components[0], luk_hoop(2)));
  CHECK(is_isomorphic(d.components[1], two()));
  CHECK(is_isomorphic(d.components[2], luk_hoop(3)));
  for (int n = 1; n <= 6; ++n) {
    const auto dl = sum_decompose(lukasiewicz(n));
    REQUIRE(dl.components.size() == 1);
    CHECK(is_isomorphic(dl.components[0], lukasiewicz(n)));
    CHECK(dl.components[0].zero.has_value());
  }
  for (int k = 0; k <= 5; ++k) {
    const auto dg = sum_decompose(godel(k));
    CHECK(dg.components.size() == std::size_t(k));
    for (const auto& c : dg.components) CHECK(is_isomorphic(c, two()));
    CHECK(index(godel(k)) == k);
  }
  CHECK(index(trivial_algebra()) == 0);
}

TEST_CASE("decomposition round trip and sum-irreducible components") {
  for (const auto& in : all_sum_inputs(3)) {
    const FinAlg s = ordinal_sum(in);
    CAPTURE(s.name);
    const auto d = sum_decompose(s);
    REQUIRE(d.components.size() == in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      CHECK(is_isomorphic(d.components[i], in[i]));
      CHECK(valid_cuts(d.components[i]).empty());
      CHECK(validate(d.components[i]).ok());
      CHECK(wajsberg(d.components[i]));
      CHECK(d.embeddings[i].size() == std::size_t(d.components[i].size));
    }
    CHECK(is_isomorphic(ordinal_sum(d.components), s));
    CHECK(index(s) == int(in.size()));
  }
  // bounded bottom component keeps its zero
  const auto b = sum_decompose(ordinal_sum({lukasiewicz(2), two()}));
  CHECK(b.components[0].zero.has_value());
  CHECK_FALSE(b.components[1].zero.has_value());
}

TEST_CASE("index is additive over sums") {
  const std::vector<FinAlg> chains = {godel(2), ordinal_sum({luk_hoop(2), two()}), luk_hoop(3), two()};
  for (const auto& a : chains)
    for (const auto& b : chains) CHECK(index(ordinal_sum({a, b})) == index(a) + index(b));
}

TEST_CASE("same component iff double residual differs from one") {
  for (const auto& in : all_sum_inputs(3)) {
    const FinAlg s = ordinal_sum(in);
    const auto d = sum_decompose(s);
    std::vector<int> comp(s.size, -1);
    for (std::size_t i = 0; i < d.embeddings.size(); ++i)
      for (Elem e : d.embeddings[i])
        if (e != s.unit) comp[e] = int(i);
    for (Elem x = 0; x < s.size; ++x)
      for (Elem y = 0; y < s.size; ++y) {
        if (x == s.unit || y == s.unit || !s.leq(x, y) || x == y) continue;
        const Elem t = s.ldiv(s.ldiv(y, x), x);
        CHECK((comp[x] == comp[y]) == (t != s.unit));
      }
  }
}

TEST_CASE("rank and divisibility index") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(rank(lukasiewicz(n)) == n);
    CHECK(divisibility_index(lukasiewicz(n)) == n);
  }
  const auto subs = subalgebras(lukasiewicz(6));
  CHECK(subs.contains(lukasiewicz(2)));
  CHECK(subs.contains(lukasiewicz(3)));
  const FinAlg bounded = ordinal_sum({lukasiewicz(3), luk_hoop(2)});
  CHECK_THROWS_AS(rank(bounded), PreconditionError);
  CHECK_THROWS_AS(rank(godel(2)), PreconditionError);
}

TEST_CASE("finite chain equation") {
  for (int n = 1; n <= 5; ++n) {
    for (const FinAlg& A : {lukasiewicz(n), godel(n)}) {
      CAPTURE(A.name);
      const int size = A.size;
      for (int k = 1; k <= 6; ++k) CHECK(satisfies(A, builtin("finite-chain", {k})).holds == (k >= size));
    }
  }
}

TEST_CASE("chain equivalence") {
  CHECK(chains_equivalent(godel(2), ordinal_sum({two(), two()})));
  const FinAlg a = ordinal_sum({two(), luk_hoop(2)}), b = ordinal_sum({luk_hoop(2), two()});
  CHECK_FALSE(chains_equivalent(a, b));
  CHECK_FALSE(var_equal(a, b));
  CHECK_FALSE(chains_equivalent(lukasiewicz(2), lukasiewicz(3)));

  std::vector<FinAlg> chains;
  for (const auto& in : all_sum_inputs(2)) chains.push_back(ordinal_sum(in));
  chains.push_back(godel(2));
  for (const auto& x : chains)
    for (const auto& y : chains) {
      CAPTURE(x.name);
      CAPTURE(y.name);
      CHECK(chains_equivalent(x, y) == var_equal(x, y));
    }
}
