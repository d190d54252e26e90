#include <doctest.h>

#include <random>

#include "reptype/arith.hpp"

using namespace reptype;

TEST_CASE("rat canonical form and text") {
  CHECK(rat(6, 4) == rat(3, 2));
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(rat(8, 4)) == "2");
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  CHECK(parse_rat("10/4") == rat(5, 2));
  CHECK(to_decimal(rat(12, 5), 1) == "2.4");
  CHECK(to_decimal(rat(2, 3), 4) == "0.6667");
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("rat arithmetic round trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 1000; ++i) {
    long bn = d(rng);
    if (bn == 0) bn = 1;
    Rat a = rat(d(rng), std::abs(d(rng)) + 1), b = rat(bn, std::abs(d(rng)) + 1);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("extnat absorption") {
  ExtNat inf = ExtNat::inf();
  for (std::uint64_t n : {0ULL, 1ULL, 7ULL}) {
    CHECK((inf + n).is_inf());
    CHECK((inf - n).is_inf());
    CHECK(max(inf, n).is_inf());
  }
  CHECK((inf + inf).is_inf());
  CHECK(ExtNat(3) - ExtNat(1) == ExtNat(2));
  CHECK_THROWS(ExtNat(1) - ExtNat(3));
  CHECK(to_string(inf) == "inf");
  CHECK(parse_extnat("inf").is_inf());
  CHECK(parse_extnat("12") == ExtNat(12));
}

TEST_CASE("quadratic field comparisons") {
  QuadRat golden(rat(3, 2), rat(1, 2));
  CHECK(rat_cmp(golden, rat(5, 2)) == std::strong_ordering::greater);
  CHECK(rat_cmp(golden, rat(27, 10)) == std::strong_ordering::less);
  CHECK(rat_cmp(rat(12, 5), rat(12, 5)) == std::strong_ordering::equal);
  // (1+sqrt5)^2/4 == (3+sqrt5)/2
  QuadRat phi(rat(1, 2), rat(1, 2));
  CHECK(phi * phi == golden);
}

TEST_CASE("quadratic sign matches high precision evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2000, 2000);
  mpf_class root5(5, 256);
  root5 = sqrt(root5);
  for (int i = 0; i < 1000; ++i) {
    QuadRat q(rat(d(rng), std::abs(d(rng)) + 1), rat(d(rng), std::abs(d(rng)) + 1));
    mpf_class a(q.a, 256), b(q.b, 256);
    mpf_class v(a + b * root5, 256);
    int expect = sgn(v);
    CHECK(q.sign() == expect);
  }
}

TEST_CASE("cosine hat values") {
  CHECK(rat_cmp(hat_of_label(ExtNat(7)), Rat(3)) == std::strong_ordering::greater);
  CHECK(rat_cmp(hat_of_label(ExtNat(7)), Rat(4)) == std::strong_ordering::less);
  CHECK(hat_of_label(ExtNat(3)).equals(Rat(1)));
  CHECK(hat_of_label(ExtNat(4)).equals(Rat(2)));
  CHECK(hat_of_label(ExtNat(6)).equals(Rat(3)));
  CHECK(hat_of_label(ExtNat::inf()).equals(Rat(4)));
  // 4cos^2(pi/7) = 3.2469796...
  CHECK(rat_cmp(hat_of_label(ExtNat(7)), rat(32469, 10000)) == std::strong_ordering::greater);
  CHECK(rat_cmp(hat_of_label(ExtNat(7)), rat(32470, 10000)) == std::strong_ordering::less);
  for (std::uint64_t p = 7; p <= 40; ++p) {
    CosEncloser e(p);
    for (int i = 0; i < 60; ++i) e.refine();
    double c = std::cos(M_PI / static_cast<double>(p));
    CHECK(e.cos_bounds().lo.get_d() <= c + 1e-15);
    CHECK(e.cos_bounds().hi.get_d() >= c - 1e-15);
    CHECK(e.cos_bounds().hi - e.cos_bounds().lo < rat(1, 1000000000));
    // strictly increasing in p
    RealSum diff = RealSum::of(hat_of_label(ExtNat(p + 1))) + Rat(-1) * RealSum::of(hat_of_label(ExtNat(p)));
    CHECK(rat_cmp(diff, Rat(0)) == std::strong_ordering::greater);
  }
}

TEST_CASE("real sums compare against rationals") {
  // 4/3 * 4cos^2(pi/7) + 1 ~ 5.329
  RealSum s = Rat(1) + rat(4, 3) * RealSum::of(hat_of_label(ExtNat(7)));
  CHECK(rat_cmp(s, Rat(4)) == std::strong_ordering::greater);
  CHECK(rat_cmp(s, rat(533, 100)) == std::strong_ordering::less);
  RealSum g = RealSum::of(hat_of_label(ExtNat(5))) + Rat(1);
  CHECK(rat_cmp(g, Rat(4)) == std::strong_ordering::less);
  CHECK(g.is_rational() == false);
  RealSum mixed = RealSum::of(hat_of_label(ExtNat(5))) + RealSum::of(hat_of_label(ExtNat(8)));
  CHECK(rat_cmp(mixed, rat(604, 100)) == std::strong_ordering::less);  // 2.618 + 3.414 = 6.032
  CHECK(rat_cmp(mixed, Rat(6)) == std::strong_ordering::greater);
}
