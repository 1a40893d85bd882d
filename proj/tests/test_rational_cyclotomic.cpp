#include "doctest.h"

#include <random>

#include "loomalg/cyclotomic.hpp"
#include "loomalg/rational.hpp"

using namespace loomalg;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("-17") == Rational(-17));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("a/b"));
  CHECK_THROWS(parse_rational("1/  2"));
  CHECK(rational_str(Rational(-3, 4)) == "-3/4");
  CHECK(rational_str(Rational(5)) == "5");
}

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(4) == 2);
  CHECK(totient(6) == 2);
  CHECK(totient(12) == 4);
  CHECK(totient(36) == 12);
}

TEST_CASE("cyclotomic polynomials, small conductors") {
  // phi_1 = x - 1
  auto p1 = cyclotomic_polynomial(1);
  CHECK(p1 == std::vector<Rational>{Rational(-1), Rational(1)});
  // phi_2 = x + 1
  auto p2 = cyclotomic_polynomial(2);
  CHECK(p2 == std::vector<Rational>{Rational(1), Rational(1)});
  // phi_4 = x^2 + 1
  auto p4 = cyclotomic_polynomial(4);
  CHECK(p4 == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  // phi_6 = x^2 - x + 1
  auto p6 = cyclotomic_polynomial(6);
  CHECK(p6 == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
  // phi_12 = x^4 - x^2 + 1
  auto p12 = cyclotomic_polynomial(12);
  CHECK(p12 == std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0),
                                     Rational(1)});
}

TEST_CASE("cyclotomic polynomial divides x^m - 1") {
  // Multiply phi_d over all divisors d of m and compare against x^m - 1.
  for (unsigned m : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 30u}) {
    std::vector<Rational> prod{Rational(1)};
    for (unsigned d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<Rational> next(prod.size() + phi.size() - 1, Rational(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    REQUIRE(prod.size() == m + 1);
    CHECK(prod[0] == Rational(-1));
    CHECK(prod[m] == Rational(1));
    for (unsigned i = 1; i < m; ++i) CHECK(prod[i] == Rational(0));
  }
}

TEST_CASE("conductor 1 and 2 are rational") {
  Cyclotomic a = Cyclotomic::root_power(1, 5);
  CHECK(a.is_rational());
  CHECK(a.rational_value() == Rational(1));
  Cyclotomic b = Cyclotomic::root_power(2, 3);
  CHECK(b.is_rational());
  CHECK(b.rational_value() == Rational(-1));
  Cyclotomic c = Cyclotomic::root_power(2, 4);
  CHECK(c.rational_value() == Rational(1));
}

TEST_CASE("fourth root arithmetic") {
  Cyclotomic i = Cyclotomic::root_power(4, 1);
  CHECK((i * i).rational_value() == Rational(-1));
  Cyclotomic one = Cyclotomic::one(4);
  // (1+i)(1-i) = 2
  CHECK(((one + i) * (one - i)).rational_value() == Rational(2));
  // i^-1 = -i
  CHECK(i.inverse() == -i);
  CHECK(cyc_pow(i, -1) == -i);
  CHECK(cyc_pow(i, 7) == -i);
}

TEST_CASE("sixth roots") {
  // zeta_6 satisfies z^2 = z - 1, and z^3 = -1.
  Cyclotomic z = Cyclotomic::root_power(6, 1);
  CHECK(z * z == z - Cyclotomic::one(6));
  CHECK(cyc_pow(z, 3).rational_value() == Rational(-1));
  CHECK(cyc_pow(z, 6).rational_value() == Rational(1));
  // 1 + z^2 + z^4 = 0 would be the conductor-3 relation lifted to 6:
  // z^2 is a primitive cube root.
  Cyclotomic w = cyc_pow(z, 2);
  CHECK((Cyclotomic::one(6) + w + w * w).is_zero());
}

TEST_CASE("field axioms, randomized") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto rand_elem = [&](unsigned m) {
    Cyclotomic x = Cyclotomic::zero(m);
    for (unsigned k = 0; k < totient(m); ++k) {
      Cyclotomic term = Cyclotomic::root_power(m, k);
      term.scale(Rational(coeff(rng), den(rng)));
      x += term;
    }
    return x;
  };
  for (unsigned m : {2u, 4u, 6u, 12u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = rand_elem(m), b = rand_elem(m), c = rand_elem(m);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + (-a) == Cyclotomic::zero(m));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyclotomic::one(m));
      }
    }
  }
}

TEST_CASE("string form") {
  Cyclotomic i = Cyclotomic::root_power(4, 1);
  Cyclotomic x = Cyclotomic::from_rational(4, Rational(1, 2)) + i;
  CHECK(x.str() == "z + 1/2");
  CHECK(Cyclotomic::zero(4).str() == "0");
  CHECK((-i).str() == "-z");
}
