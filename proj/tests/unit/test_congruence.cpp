#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reslat/congruence.hpp"
#include "reslat/properties.hpp"

using namespace reslat;
using fixtures::enumerated_upto;
using fixtures::two;

namespace {

std::vector<Elem> meet_one(const FinAlg& A) {
  std::vector<Elem> t(A.size);
  for (Elem x = 0; x < A.size; ++x) t[x] = A.meet(x, A.unit);
  return t;
}

std::vector<FinAlg> size5_sample(std::size_t count) {
  SearchConstraints sc;
  sc.size = 5;
  const auto cat = enumerate_rl(sc);
  std::vector<FinAlg> all = cat.algebras();
  std::mt19937 rng(2024);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  return all;
}

}  // namespace

TEST_CASE("conjugates") {
  for (const auto& A : enumerated_upto(4)) {
    CHECK(conjugate(A, Side::Left, A.unit) == meet_one(A));
    CHECK(conjugate(A, Side::Right, A.unit) == meet_one(A));
    if (A.is_commutative())
      for (Elem a = 0; a < A.size; ++a) CHECK(conjugate(A, Side::Left, a) == conjugate(A, Side::Right, a));
  }
  // a commutative example where l_a is not x /\ 1: in bounded algebras l_0 is constantly 1
  const FinAlg l2 = lukasiewicz(2);
  CHECK(conjugate(l2, Side::Left, 0) == std::vector<Elem>{2, 2, 2});

  SearchConstraints sc;
  sc.size = 5;
  const auto cat = enumerate_rl(sc);
  bool found = false;
  for (const auto& A : cat.algebras()) {
    if (A.is_commutative()) continue;
    for (Elem a = 0; a < A.size && !found; ++a)
      found = conjugate(A, Side::Left, a) != conjugate(A, Side::Right, a);
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("generated congruence filters") {
  for (const auto& A : enumerated_upto(4)) CHECK(generate_congruence_filter(A, {}) == positive_cone(A));
  const FinAlg g2 = godel(2);
  CHECK(generate_congruence_filter(g2, ElemSet::of({1})) == ElemSet::of({1, 2}));
  const FinAlg l3 = lukasiewicz(3);
  for (Elem a = 0; a < 3; ++a) CHECK(generate_congruence_filter(l3, ElemSet::of({a})) == ElemSet::full(4));
}

TEST_CASE("fixpoint generation matches the conjugate-product description") {
  std::mt19937 rng(9);
  std::vector<FinAlg> algebras = enumerated_upto(4);
  for (const auto& A : size5_sample(40)) algebras.push_back(A);
  for (const auto& A : algebras) {
    for (int trial = 0; trial < 6; ++trial) {
      ElemSet x(rng() & ElemSet::full(A.size).bits());
      CHECK(generate_congruence_filter(A, x) == oracle::conjugate_product_filter(A, x));
    }
  }
}

TEST_CASE("congruence filter lattice shape") {
  const auto L = congruence_filters(godel(2));
  CHECK(L.filters.size() == 3);
  CHECK(L.hasse.size() == 2);
  CHECK(L.atoms() == std::vector<int>{1});
  CHECK(L.coatoms() == std::vector<int>{1});
  for (const auto& A : enumerated_upto(4)) {
    const auto C = congruence_filters(A);
    CHECK(C.filters.front() == positive_cone(A));
    CHECK(C.filters.back() == ElemSet::full(A.size));
    for (ElemSet f : C.filters) CHECK(is_congruence_filter(A, f));
    // closed under intersection
    for (ElemSet f : C.filters)
      for (ElemSet g : C.filters) CHECK(C.index_of(f & g) >= 0);
  }
}

TEST_CASE("filter to congruence examples") {
  const FinAlg g2 = godel(2);
  const Congruence c = filter_to_congruence(g2, ElemSet::of({1, 2}));
  CHECK(c.blocks() == std::vector<std::vector<Elem>>{{0}, {1, 2}});
  for (const auto& A : enumerated_upto(4)) {
    CHECK(filter_to_congruence(A, positive_cone(A)).num_blocks() == A.size);
    CHECK(filter_to_congruence(A, ElemSet::full(A.size)).num_blocks() == 1);
  }
  CHECK_THROWS_AS(filter_to_congruence(g2, ElemSet::of({1})), PreconditionError);
}

TEST_CASE("filters and congruences correspond exactly") {
  std::vector<FinAlg> algebras = enumerated_upto(4);
  for (const auto& A : size5_sample(30)) algebras.push_back(A);
  for (const auto& A : algebras) {
    CAPTURE(A.name);
    const auto L = congruence_filters(A);
    const auto brute = all_congruences_bruteforce(A);
    std::vector<Congruence> image;
    for (ElemSet f : L.filters) {
      const Congruence c = filter_to_congruence(A, f);
      CHECK(is_congruence(A, c));
      CHECK(congruence_to_filter(A, c) == f);
      image.push_back(c);
    }
    std::sort(image.begin(), image.end());
    CHECK(image == brute);
    for (const auto& c : brute) CHECK(filter_to_congruence(A, congruence_to_filter(A, c)) == c);
    for (std::size_t i = 0; i < L.filters.size(); ++i)
      for (std::size_t j = 0; j < L.filters.size(); ++j)
        CHECK(L.filters[i].subset_of(L.filters[j]) ==
              filter_to_congruence(A, L.filters[i]).leq(filter_to_congruence(A, L.filters[j])));
  }
}

TEST_CASE("quotients are residuated lattices") {
  for (const auto& A : enumerated_upto(4))
    for (ElemSet f : congruence_filters(A).filters) {
      const FinAlg q = quotient(A, f);
      CHECK(validate(q).ok());
      CHECK(q.size == filter_to_congruence(A, f).num_blocks());
    }
}

TEST_CASE("subdirect irreducibility and simplicity") {
  CHECK(is_simple(lukasiewicz(4)));
  CHECK(is_subdirectly_irreducible(lukasiewicz(4)));
  CHECK(is_subdirectly_irreducible(godel(2)));
  CHECK_FALSE(is_simple(godel(2)));
  const FinAlg p = direct_product(lukasiewicz(2), lukasiewicz(2));
  CHECK_FALSE(is_subdirectly_irreducible(p));
  CHECK_FALSE(is_subdirectly_irreducible(trivial_algebra()));
  CHECK_FALSE(is_simple(trivial_algebra()));
}

TEST_CASE("radical") {
  for (int n = 1; n <= 6; ++n) CHECK(radical(lukasiewicz(n)) == ElemSet::of({n}));
  const Rotation rot = rotate_detailed({godel(2), 3, Delta::Identity});
  CHECK(radical(rot.alg) == ElemSet::of(rot.base_image));
  CHECK(radical(trivial_algebra(true)) == ElemSet::full(1));
}

TEST_CASE("normal iff every filter is a congruence filter") {
  std::vector<FinAlg> algebras = enumerated_upto(4);
  for (const auto& A : size5_sample(200)) algebras.push_back(A);
  int non_normal = 0;
  for (const auto& A : algebras) {
    CAPTURE(A.name);
    const bool n = is_normal(A);
    CHECK(n == all_filters_normal(A));
    non_normal += !n;
  }
  MESSAGE("non-normal algebras in sample: " << non_normal);
}
