#include <doctest.h>

#include <random>

#include "reptype/separating.hpp"

using namespace reptype;

TEST_CASE("rho at points and tuples") {
  CHECK(rho_point(1) == 1);
  CHECK(rho_point(ExtNat::inf()) == 2);
  CHECK(rho_point(4) == rat(8, 5));
  CHECK(rho_point(0) == 0);
  CHECK(rho_tuple({5, 2, 1}) == 4);
  CHECK(rho_tuple({}) == 0);
  CHECK(rho_tuple({ExtNat::inf(), ExtNat::inf()}) == 4);
  for (std::uint64_t n = 1; n < 200; ++n) {
    CHECK(rho_point(n) < rho_point(n + 1));
    CHECK(rho_point(n) < 2);
    CHECK(rho_point(n) == 1 + rat(static_cast<long>(n) - 1, static_cast<long>(n) + 1));
  }
}

TEST_CASE("mu with infinity conventions") {
  CHECK(mu3(1, 1, 1) == ExtNat(4));
  CHECK(mu3(ExtNat::inf(), 0, 0) == ExtNat(4));
  CHECK(mu3(0, ExtNat::inf(), 0) == ExtNat(4));
  CHECK(mu3(7, 3, 0) == ExtNat(21));
  CHECK(mu3(ExtNat::inf(), 1, 0).is_inf());
  CHECK(mu3(1, 1, 0) == ExtNat(1));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 12);
  for (int i = 0; i < 1000; ++i) {
    auto pick = [&]() { int v = d(rng); return v == 12 ? ExtNat::inf() : ExtNat(v); };
    ExtNat a = pick(), b = pick(), c = pick();
    ExtNat m = mu3(a, b, c);
    CHECK(m == mu3(b, a, c));
    CHECK(m == mu3(c, b, a));
    CHECK(m == mu3(a, c, b));
  }
}

TEST_CASE("rho, mu and group-order predicates agree") {
  auto v = lemma6_check(3, 3, 1);
  CHECK(v.agree);
  CHECK(v.sides[0] == 0);
  v = lemma6_check(1, 1, 1);
  CHECK(v.agree);
  CHECK(v.sides[0] == -1);
  v = lemma6_check(9, 9, 9);
  CHECK(v.agree);
  CHECK(v.sides[0] == 1);
  for (std::uint64_t a = 1; a <= 30; ++a)
    for (std::uint64_t b = 1; b <= 30; ++b)
      for (std::uint64_t c = 1; c <= 30; ++c) REQUIRE(lemma6_agree(a, b, c));
}

TEST_CASE("six solutions of rho = 4") {
  auto sols = solve_rho_eq4();
  ExtNat I = ExtNat::inf();
  std::set<std::vector<ExtNat>> expect{{I, I}, {I, 1, 1}, {5, 2, 1}, {3, 3, 1}, {2, 2, 2}, {1, 1, 1, 1}};
  CHECK(sols == expect);
  CHECK(sols.size() == 6);
  CHECK(sols.count({4, 2, 1}) == 0);
  CHECK(rho_tuple({4, 2, 1}) == rat(59, 15));
}

TEST_CASE("triangle groups") {
  CHECK(triangle_group_order(3, 3, 2) == ExtNat(24));
  CHECK(triangle_group_order(3, 2, 2) == ExtNat(12));
  CHECK(triangle_group_order(7, 3, 2).is_inf());
  CHECK(triangle_group_order(5, 3, 2) == ExtNat(120));
  CHECK(triangle_group_order(4, 3, 2) == ExtNat(48));
  CHECK(triangle_group_order(6, 3, 2).is_inf());
  CHECK(triangle_group_order(5, 2, 2) == ExtNat(20));
}
