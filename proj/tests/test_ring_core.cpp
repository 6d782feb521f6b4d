#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tribospin/hyperbolic.hpp"
#include "tribospin/polynomial.hpp"
#include "tribospin/rational.hpp"

using namespace tribospin;

namespace {

struct RationalGen {
  std::mt19937 rng;
  std::uniform_int_distribution<long> num{-20, 20};
  std::uniform_int_distribution<long> den{1, 10};

  explicit RationalGen(unsigned seed) : rng(seed) {}
  Rational operator()() { return Rational(num(rng), den(rng)); }
};

}  // namespace

TEST_CASE("rational normalization invariants") {
  Rational x(6, -4);
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x.str() == "-3/2");

  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominatorError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDivisorError);
}

TEST_CASE("rational arithmetic stays canonical") {
  RationalGen gen(11);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen(), b = gen();
    for (const Rational& v : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(v.denominator() > 0);
    }
  }
}

TEST_CASE("hyperbolic multiplication examples") {
  CHECK(HyperbolicNumber(1, 1) * HyperbolicNumber(1, -1) == HyperbolicNumber(0, 0));
  CHECK(HyperbolicNumber(2, 0) * HyperbolicNumber(3, 5) == HyperbolicNumber(6, 10));
  CHECK(HyperbolicNumber(1, 2) * HyperbolicNumber(3, 4) == HyperbolicNumber(11, 10));
}

TEST_CASE("hyperbolic inverse") {
  CHECK(HyperbolicNumber(2, 0).inverse() == HyperbolicNumber(Rational(1, 2), Rational(0)));
  CHECK_THROWS_AS(HyperbolicNumber(1, 1).inverse(), ZeroDivisorError);
  CHECK(HyperbolicNumber(3, 1).inverse() == HyperbolicNumber(Rational(3, 8), Rational(-1, 8)));

  RationalGen gen(13);
  int inverted = 0;
  for (int i = 0; i < 300; ++i) {
    HyperbolicNumber x(gen(), gen());
    if (x.on_null_cone()) {
      CHECK_THROWS_AS(x.inverse(), ZeroDivisorError);
      continue;
    }
    ++inverted;
    CHECK(x * x.inverse() == HyperbolicNumber(1, 0));
  }
  CHECK(inverted > 200);
}

TEST_CASE("hyperbolic ring axioms hold exactly") {
  RationalGen gen(17);
  for (int i = 0; i < 300; ++i) {
    HyperbolicNumber x(gen(), gen()), y(gen(), gen()), z(gen(), gen());
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * HyperbolicNumber(1, 0) == x);
    // conjugate pairs multiply into the reals
    CHECK((x * x.conj()).jpart == Rational(0));
  }
}

TEST_CASE("complexified arithmetic tracks the exact ring") {
  RationalGen gen(19);
  for (int i = 0; i < 200; ++i) {
    HyperbolicNumber x(gen(), gen()), y(gen(), gen());
    HyperbolicNumber exact = x * y;
    ComplexHyperbolic approx = ComplexHyperbolic::from(x) * ComplexHyperbolic::from(y);
    const double scale =
        std::max({1.0, std::abs(exact.re.to_double()), std::abs(exact.jpart.to_double())});
    CHECK(std::abs(approx.re.real() - exact.re.to_double()) <= 1e-12 * scale);
    CHECK(std::abs(approx.jpart.real() - exact.jpart.to_double()) <= 1e-12 * scale);
  }
}

TEST_CASE("polynomial evaluation") {
  Polynomial p{Rational(1), Rational(1)};  // 1 + x
  CHECK(p.eval(Rational(2)) == Rational(3));

  CHECK(Polynomial{Rational(0)}.is_zero());
  CHECK(Polynomial{}.eval(Rational(5)) == Rational(0));

  Polynomial q{Rational(1), Rational(0), Rational(1)};  // 1 + x^2
  CHECK(q.eval(Rational(3, 2)) == Rational(13, 4));
}

TEST_CASE("polynomial degree behaves over an integral domain") {
  RationalGen gen(23);
  auto random_poly = [&](long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::vector<Rational> c;
    long d = deg(gen.rng);
    for (long i = 0; i <= d; ++i) c.push_back(gen());
    return Polynomial(std::move(c));
  };
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(4), q = random_poly(4);
    if (p.is_zero() || q.is_zero()) {
      CHECK((p * q).is_zero());
    } else {
      CHECK((p * q).degree() == p.degree() + q.degree());
    }
    Rational x = gen();
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}
