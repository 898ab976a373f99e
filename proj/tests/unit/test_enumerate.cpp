#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reslat/congruence.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/properties.hpp"

using namespace reslat;

namespace {

std::size_t count(int size, bool comm = false, bool integral = false, bool chain = false, int jobs = 1) {
  SearchConstraints sc;
  sc.size = size;
  sc.commutative = comm;
  sc.integral = integral;
  sc.chain = chain;
  return enumerate_rl(sc, jobs).size();
}

}  // namespace

TEST_CASE("lattice counts") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_lattices(n).size() == expected[n - 1]);
}

TEST_CASE("lattices agree with the naive generator") {
  for (int n = 1; n <= 5; ++n) {
    const auto fast = enumerate_lattices(n);
    const auto slow = oracle::naive_lattices(n);
    REQUIRE(fast.size() == slow.size());
    for (const auto& l : fast) {
      // every enumerated order is a lattice whose tables agree with the order
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CHECK(l.leq[a][l.join(a, b)]);
          CHECK(l.leq[b][l.join(a, b)]);
          CHECK(l.leq[l.meet(a, b)][a]);
          CHECK(l.leq[l.meet(a, b)][b]);
        }
    }
  }
}

TEST_CASE("residuated lattice counts agree with the naive generator") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(count(n) == oracle::naive_rl(n).size());
    CHECK(count(n, true) == oracle::naive_rl(n, {true, false}).size());
    CHECK(count(n, false, true) == oracle::naive_rl(n, {false, true}).size());
  }
}

TEST_CASE("residuated lattice counts") {
  const std::vector<std::size_t> total = {1, 1, 3, 20, 149}, comm = {1, 1, 3, 16, 100}, integ = {1, 1, 2, 9, 49};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count(n) == total[n - 1]);
    CHECK(count(n, true) == comm[n - 1]);
    CHECK(count(n, false, true) == integ[n - 1]);
  }
  CHECK(count(4, false, false, true) < count(4));
}

TEST_CASE("outputs validate, satisfy constraints and are pairwise non-isomorphic") {
  for (int n = 1; n <= 4; ++n) {
    SearchConstraints sc;
    sc.size = n;
    const auto cat = enumerate_rl(sc);
    const auto& v = cat.algebras();
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(validate(v[i]).ok());
      CHECK(v[i].name == "rl" + std::to_string(n) + "-" + std::to_string(i + 1));
      for (std::size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(oracle::brute_isomorphic(v[i], v[j]));
    }
  }
  SearchConstraints sc;
  sc.size = 5;
  sc.commutative = sc.integral = sc.chain = true;
  const auto cat = enumerate_rl(sc);
  for (const auto& a : cat.algebras()) {
    CHECK(a.is_commutative());
    CHECK(a.is_integral());
    CHECK(a.is_chain());
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (int n : {4, 5}) {
    SearchConstraints sc;
    sc.size = n;
    const auto one = enumerate_rl(sc, 1);
    const auto four = enumerate_rl(sc, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one.algebras()[i].name == four.algebras()[i].name);
      CHECK(one.algebras()[i].prod == four.algebras()[i].prod);
      CHECK(one.algebras()[i].join == four.algebras()[i].join);
    }
  }
}

TEST_CASE("predicates") {
  const Predicate p = parse_predicate("integral & !(chain | commutative)");
  CHECK_FALSE(p(lukasiewicz(3)));
  CHECK(parse_predicate("si")(godel(2)));
  CHECK(parse_predicate("SI & !simple")(godel(2)));
  CHECK(parse_predicate("!  chain")(direct_product(godel(1), godel(1))));
  CHECK_THROWS_AS(parse_predicate("integral &"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("(chain"), std::invalid_argument);

  SearchConstraints sc;
  sc.size = 4;
  sc.predicate = parse_predicate("chain");
  CHECK(enumerate_rl(sc).size() == count(4, false, false, true));
}

TEST_CASE("size cap") {
  SearchConstraints sc;
  sc.size = 7;
  CHECK_THROWS_AS(enumerate_rl(sc), PreconditionError);
  sc.size = 0;
  CHECK_THROWS_AS(enumerate_rl(sc), PreconditionError);
}

TEST_CASE("find examples") {
  SearchConstraints sc;
  sc.integral = true;
  sc.predicate = parse_predicate("simple & !well_connected");
  const auto w = find_example(sc, 6);
  REQUIRE(w.has_value());
  CHECK(w->size == 5);
  CHECK(w->is_integral());
  CHECK(is_simple(*w));
  CHECK_FALSE(is_well_connected(*w));

  SearchConstraints none;
  none.commutative = true;
  none.predicate = parse_predicate("si & !weakly_well_connected");
  CHECK_FALSE(find_example(none, 6).has_value());

  SearchConstraints nn;
  nn.integral = true;
  nn.predicate = parse_predicate("!normal");
  const auto n = find_example(nn, 6);
  REQUIRE(n.has_value());
  CHECK_FALSE(n->is_commutative());
  MESSAGE("smallest integral non-normal algebra has " << n->size << " elements");
}

TEST_CASE("worker default") { CHECK(default_jobs() >= 1); }
