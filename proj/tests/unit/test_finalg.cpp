#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reslat/canonical.hpp"
#include "reslat/io.hpp"

using namespace reslat;
using fixtures::enumerated_upto;

namespace {

FinAlg strip_divisions(FinAlg a) {
  a.ldiv = Table();
  a.rdiv = Table();
  return a;
}

std::vector<Elem> inverse(const std::vector<Elem>& p) {
  std::vector<Elem> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Elem>(i);
  return q;
}

}  // namespace

TEST_CASE("validate accepts constructed algebras") {
  CHECK(validate(lukasiewicz(3)).ok());
  CHECK(validate(trivial_algebra()).ok());
  CHECK(validate(trivial_algebra(true)).ok());
  CHECK(validate(godel(4)).ok());
}

TEST_CASE("validate flags a mutated product") {
  FinAlg m = lukasiewicz(2);
  m.prod(1, 1) = 1;
  const auto r = validate(m);
  CHECK_FALSE(r.ok());
  REQUIRE(!r.violations.empty());
  CHECK(r.violations.front().witness.size() <= 3);
  CHECK(r.describe().find("fails at") != std::string::npos);
}

TEST_CASE("validate reports at most one violation per axiom") {
  FinAlg m = lukasiewicz(3);
  for (Elem a = 0; a < 4; ++a) m.ldiv(a, 0) = 3;
  const auto r = validate(m);
  std::set<std::string> seen;
  for (const auto& v : r.violations) CHECK(seen.insert(v.axiom).second);
  CHECK(seen.count("residuation-left") == 1);
}

TEST_CASE("validate detects a zero that is not the bottom") {
  FinAlg m = lukasiewicz(2);
  m.zero = 1;
  CHECK_FALSE(validate(m).ok());
}

TEST_CASE("malformed tables are rejected") {
  FinAlg m = lukasiewicz(2);
  m.prod(0, 0) = 9;
  CHECK_THROWS_AS(validate(m), MalformedAlgebra);
  FinAlg w = lukasiewicz(2);
  w.meet = Table(2);
  CHECK_THROWS_AS(validate(w), MalformedAlgebra);
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), MalformedAlgebra);
}

TEST_CASE("complete_divisions examples") {
  const FinAlg l2 = complete_divisions(strip_divisions(lukasiewicz(2)));
  CHECK(l2.ldiv(1, 0) == 1);
  CHECK(l2.ldiv(2, 1) == 1);
  CHECK(l2.ldiv == lukasiewicz(2).ldiv);
  CHECK(l2.rdiv == lukasiewicz(2).rdiv);

  const FinAlg t = complete_divisions(strip_divisions(trivial_algebra()));
  CHECK(t.ldiv(0, 0) == 0);

  const FinAlg g2 = complete_divisions(strip_divisions(godel(2)));
  CHECK(g2.ldiv(1, 0) == 0);  // b\a = a
  CHECK(g2.ldiv(0, 1) == 2);  // a\b = 1
}

TEST_CASE("complete_divisions rejects non-residuated products") {
  FinAlg m = strip_divisions(lukasiewicz(2));
  m.prod(1, 1) = 1;
  m.prod(1, 0) = 1;
  m.prod(0, 1) = 1;
  CHECK_THROWS_AS(complete_divisions(m), NotResiduated);
}

TEST_CASE("complete_divisions is idempotent") {
  for (const auto& A : enumerated_upto(4)) {
    const FinAlg again = complete_divisions(A);
    CHECK(again.ldiv == A.ldiv);
    CHECK(again.rdiv == A.rdiv);
  }
}

TEST_CASE("product is order preserving in validated algebras") {
  for (const auto& A : enumerated_upto(4))
    for (Elem a = 0; a < A.size; ++a)
      for (Elem b = 0; b < A.size; ++b)
        for (Elem c = 0; c < A.size; ++c)
          if (A.leq(a, b)) {
            CHECK(A.leq(A.prod(a, c), A.prod(b, c)));
            CHECK(A.leq(A.prod(c, a), A.prod(c, b)));
          }
}

TEST_CASE("is_isomorphic examples") {
  const FinAlg l2 = lukasiewicz(2);
  const std::vector<Elem> perm{2, 0, 1};
  const FinAlg moved = l2.relabeled(perm);
  const auto w = is_isomorphic(l2, moved);
  REQUIRE(w);
  CHECK(*w == perm);
  CHECK(is_iso_witness(l2, moved, *w));
  CHECK_FALSE(is_isomorphic(l2, godel(2)));
  const auto t = is_isomorphic(trivial_algebra(), trivial_algebra());
  REQUIRE(t);
  CHECK(*t == std::vector<Elem>{0});
}

TEST_CASE("is_isomorphic is an equivalence on small algebras") {
  std::mt19937 rng(3);
  for (const auto& A : enumerated_upto(4)) {
    const auto p = fixtures::random_permutation(A.size, rng);
    const auto q = fixtures::random_permutation(A.size, rng);
    const FinAlg B = A.relabeled(p), C = B.relabeled(q);
    const auto ab = is_isomorphic(A, B);
    const auto bc = is_isomorphic(B, C);
    REQUIRE(ab);
    REQUIRE(bc);
    CHECK(is_iso_witness(B, A, inverse(*ab)));
    std::vector<Elem> comp(A.size);
    for (Elem x = 0; x < A.size; ++x) comp[x] = (*bc)[(*ab)[x]];
    CHECK(is_iso_witness(A, C, comp));
    CHECK(is_isomorphic(A, A));
  }
  const auto& all = enumerated_upto(4);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK_FALSE(is_isomorphic(all[i], all[j]));
      if (all[i].size == all[j].size) CHECK_FALSE(oracle::brute_isomorphic(all[i], all[j]));
    }
}

TEST_CASE("canonical keys identify exactly the isomorphism classes") {
  std::mt19937 rng(5);
  for (const auto& A : enumerated_upto(4)) {
    const auto key = canonical_form(A).key;
    for (int i = 0; i < 3; ++i) CHECK(canonical_form(A.relabeled(fixtures::random_permutation(A.size, rng))).key == key);
    const FinAlg c = canonicalize(A);
    CHECK(is_isomorphic(A, c));
    CHECK(validate(c).ok());
  }
  std::set<std::vector<int>> keys;
  for (const auto& A : enumerated_upto(4)) keys.insert(canonical_form(A).key);
  CHECK(keys.size() == enumerated_upto(4).size());
}

TEST_CASE("positive cone") {
  CHECK(positive_cone(lukasiewicz(2)) == ElemSet::of({2}));
  CHECK(positive_cone(trivial_algebra()) == ElemSet::full(1));
  int non_integral = 0;
  for (const auto& A : enumerated_upto(4)) {
    if (A.size != 4 || A.is_integral()) continue;
    ++non_integral;
    CHECK(positive_cone(A).count() > 1);
  }
  CHECK(non_integral > 0);
}

TEST_CASE("json round trip") {
  const FinAlg a = lukasiewicz(3);
  const std::string text = algebra_to_json(a);
  const FinAlg b = algebra_from_json(text);
  CHECK(b.name == a.name);
  CHECK(b.zero == a.zero);
  CHECK(b.prod == a.prod);
  CHECK(b.ldiv == a.ldiv);
  CHECK(algebra_to_json(b) == text);
  CHECK(text.find("\"stamp\"") == std::string::npos);
  CHECK(algebra_to_json(a, "run-1").find("\"stamp\":\"run-1\"") != std::string::npos);
}

TEST_CASE("json loading completes missing divisions") {
  const std::string text =
      R"({"name":"g","size":3,"unit":2,"zero":null,"join":[[0,1,2],[1,1,2],[2,2,2]],)"
      R"("meet":[[0,0,0],[0,1,1],[0,1,2]],"prod":[[0,0,0],[0,1,1],[0,1,2]]})";
  const FinAlg g = algebra_from_json(text);
  CHECK(validate(g).ok());
  CHECK(is_isomorphic(g, godel(2)));
  CHECK_FALSE(g.zero);
}

TEST_CASE("json loading rejects malformed input") {
  CHECK_THROWS_AS(algebra_from_json("{"), MalformedAlgebra);
  CHECK_THROWS_AS(algebra_from_json("[]"), MalformedAlgebra);
  CHECK_THROWS_AS(algebra_from_json(R"({"size":2,"unit":1,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]]})"),
                  MalformedAlgebra);
  CHECK_THROWS_AS(algebra_from_json(R"({"size":2,"unit":1,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"prod":[[0,0],[0]]})"),
                  MalformedAlgebra);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"size":2,"unit":1,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"prod":[[0,5],[0,1]]})"),
      MalformedAlgebra);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"size":2,"unit":1,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"prod":[[1,1],[1,1]]})"),
      NotResiduated);
}
