#include <random>
#include <stdexcept>

#include "doctest.h"

#include "discheb/errors.hpp"
#include "discheb/rational.hpp"

using namespace discheb;

TEST_CASE("rational construction reduces and normalizes sign") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("+5/10") == Rational(1, 2));
  CHECK(Rational::from_string(" 4/6 ") == Rational(2, 3));
  CHECK(Rational::from_string("0") == Rational(0));
}

TEST_CASE("rational parsing rejects malformed input") {
  for (const char* bad : {"", "a", "1.5", "1/0", "1/", "/2", "1 / 2", "2/-3", "--4", "0x10"})
    CHECK_THROWS_AS(Rational::from_string(bad), ParseError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(-3, 5).abs() == Rational(3, 5));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(3, 2) > 1);
  CHECK(Rational(1, 2).sgn() == 1);
  CHECK(Rational(0).sgn() == 0);
  CHECK(Rational(-5).sgn() == -1);
}

TEST_CASE("rational round trips through its canonical string") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 400);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    CHECK(Rational::from_string(r.str()) == r);
  }
}

TEST_CASE("rational results stay reduced with positive denominator") {
  std::mt19937 rng(20240902);
  std::uniform_int_distribution<long> num(-300, 300);
  std::uniform_int_distribution<long> den(1, 250);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.denominator() > 0);
    }
  }
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(Rational(1, 3).decimal(3) == "0.333");
  CHECK(Rational(2, 3).decimal(3) == "0.667");
  CHECK(Rational(1, 8).decimal(2) == "0.12");   // 0.125 ties to even 12
  CHECK(Rational(3, 8).decimal(2) == "0.38");   // 0.375 ties to even 38
  CHECK(Rational(-1, 8).decimal(2) == "-0.12");
  CHECK(Rational(-5, 4).decimal(1) == "-1.2");
  CHECK(Rational(99, 100).decimal(1) == "1.0");
  CHECK(Rational(3, 2).decimal(0) == "2");
  CHECK(Rational(1, 2).decimal(0) == "0");
  CHECK(Rational(5).decimal(3) == "5.000");
  CHECK(Rational(-1, 1000).decimal(2) == "0.00");  // rounded-away sign disappears
  CHECK(Rational(0).decimal(4) == "0.0000");
  CHECK_THROWS_AS(Rational(1).decimal(-1), std::invalid_argument);
}
