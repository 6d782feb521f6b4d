#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tribospin/families.hpp"
#include "tribospin/linalg.hpp"
#include "tribospin/sequence.hpp"

using namespace tribospin;

namespace {

SequenceParams params(long a, long b, long c, long r, long s, long t) {
  return {Rational(a), Rational(b), Rational(c), Rational(r), Rational(s), Rational(t)};
}

const SequenceParams kTribonacci = params(0, 1, 1, 1, 1, 1);
const SequenceParams kPadovan = params(1, 1, 1, 0, 1, 1);
const SequenceParams kPerrin = params(3, 0, 2, 0, 1, 1);
const SequenceParams kJacobsthalPadovan = params(1, 1, 1, 0, 1, 2);

// Plain recurrence oracle, written independently of term()/term_range().
std::vector<Rational> oracle_terms(const SequenceParams& p, long n) {
  std::vector<Rational> v{p.a, p.b, p.c};
  for (long i = 3; i <= n; ++i)
    v.push_back(p.r * v[i - 1] + p.s * v[i - 2] + p.t * v[i - 3]);
  v.resize(n + 1);
  return v;
}

}  // namespace

TEST_CASE("term reproduces the recurrence oracle") {
  const long expected[] = {0, 1, 1, 2, 4, 7, 13, 24};
  for (long n = 0; n <= 7; ++n) CHECK(term(kTribonacci, n) == Rational(expected[n]));

  CHECK(term(params(5, -3, 9, 2, 0, 1), 2) == Rational(9));  // n = 2 is the initial value c

  auto jp = oracle_terms(kJacobsthalPadovan, 5);
  CHECK(jp[3] == Rational(3));
  CHECK(jp[4] == Rational(3));
  CHECK(jp[5] == Rational(5));
  for (long n = 3; n <= 5; ++n) CHECK(term(kJacobsthalPadovan, n) == jp[n]);

  CHECK_THROWS_AS(term(kTribonacci, -1), PreconditionError);
}

TEST_CASE("matrix power path equals the recurrence") {
  CHECK(term_by_matrix(kTribonacci, 7) == Rational(24));
  CHECK(term_by_matrix(kTribonacci, 2) == Rational(1));  // S^0 = identity
  CHECK(term_by_matrix(kPadovan, 10) == Rational(12));
  CHECK_THROWS_AS(term_by_matrix(kTribonacci, 1), PreconditionError);

  for (const FamilyDescriptor* f : concrete_families()) {
    auto v = oracle_terms(f->params, 60);
    for (long n = 2; n <= 60; n += 7) CHECK(term_by_matrix(f->params, n) == v[n]);
  }
}

TEST_CASE("characteristic roots: real Tribonacci root and Vieta residuals") {
  const CharacteristicRoots roots = characteristic_roots(kTribonacci);
  CHECK(roots.distinct);
  // the real root of x^3 - x^2 - x - 1
  const double real_root = 1.839286755214161;
  const double closest = std::min({std::abs(roots.sigma1 - real_root),
                                   std::abs(roots.sigma2 - real_root),
                                   std::abs(roots.sigma3 - real_root)});
  CHECK(closest < 1e-9);

  const CharacteristicRoots triple = characteristic_roots(params(0, 0, 0, 3, -3, 1));
  CHECK_FALSE(triple.distinct);
  CHECK(std::abs(triple.sigma1 - 1.0) < 1e-9);
  CHECK(std::abs(triple.sigma2 - 1.0) < 1e-9);
  CHECK(std::abs(triple.sigma3 - 1.0) < 1e-9);
}

TEST_CASE("Vieta residuals stay small on random parameters") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> num(-10, 10);
  std::uniform_int_distribution<long> den(1, 4);
  for (int i = 0; i < 400; ++i) {
    SequenceParams p = params(0, 1, 1, 0, 0, 0);
    p.r = Rational(num(rng), den(rng));
    p.s = Rational(num(rng), den(rng));
    p.t = Rational(num(rng), den(rng));
    const CharacteristicRoots roots = characteristic_roots(p);
    const auto e1 = roots.sigma1 + roots.sigma2 + roots.sigma3;
    const auto e2 = roots.sigma1 * roots.sigma2 + roots.sigma1 * roots.sigma3 +
                    roots.sigma2 * roots.sigma3;
    const auto e3 = roots.sigma1 * roots.sigma2 * roots.sigma3;
    CHECK(std::abs(e1 - p.r.to_double()) <= 1e-9 * std::max(1.0, std::abs(p.r.to_double())));
    CHECK(std::abs(e2 + p.s.to_double()) <= 1e-9 * std::max(1.0, std::abs(p.s.to_double())));
    CHECK(std::abs(e3 - p.t.to_double()) <= 1e-9 * std::max(1.0, std::abs(p.t.to_double())));
  }
}

TEST_CASE("binet weights are deterministic") {
  const CharacteristicRoots roots = characteristic_roots(kPerrin);
  const BinetWeights w1 = binet_weights(kPerrin, roots);
  const BinetWeights w2 = binet_weights(kPerrin, roots);
  CHECK(w1.phi1 == w2.phi1);
  CHECK(w1.phi2 == w2.phi2);
  CHECK(w1.phi3 == w2.phi3);
}

TEST_CASE("binet closed form matches exact terms") {
  CHECK(std::abs(binet_term(kTribonacci, 10) - 149.0) < 1e-6);
  CHECK(std::abs(binet_term(kTribonacci, 0) - 0.0) < 1e-9);
  CHECK_THROWS_AS(binet_term(params(0, 1, 1, 3, -3, 1), 4), RepeatedRootsError);

  for (const FamilyDescriptor* f : concrete_families()) {
    auto v = oracle_terms(f->params, 30);
    for (long n = 0; n <= 30; ++n) {
      const std::complex<double> approx = binet_term(f->params, n);
      const double exact = v[n].to_double();
      const double tol = 1e-6 * std::max(1.0, std::abs(exact));
      CHECK(std::abs(approx.real() - exact) <= tol);
      CHECK(std::abs(approx.imag()) <= tol);
    }
  }
}

TEST_CASE("summation closed forms equal brute force") {
  // (V7 - V5 - V2 + V0) / 2 = (24 - 7 - 1 + 0) / 2 = 8
  CHECK(sum_first(kTribonacci, 4) == Rational(8));
  CHECK(sum_first(kPadovan, 4) == Rational(7));

  SUBCASE("every family, every m up to 60") {
    for (const FamilyDescriptor* f : concrete_families()) {
      const SequenceParams& p = f->params;
      auto v = oracle_terms(p, 125);
      Rational all(0), even(0), odd(0);
      const bool first_ok = !(p.r + p.s + p.t - 1).is_zero();
      const bool alt_ok = !(p.r - p.s + p.t + 1).is_zero();
      for (long m = 0; m <= 60; ++m) {
        all += v[m];
        even += v[2 * m];
        if (first_ok) CHECK(sum_first(p, m) == all);
        if (first_ok && alt_ok) CHECK(sum_even(p, m) == even);
        odd += v[2 * m + 1];
        if (first_ok && alt_ok) CHECK(sum_odd(p, m) == odd);
      }
    }
  }

  SUBCASE("pell-padovan trips the alternating denominator") {
    const SequenceParams pp = family_lookup("pell-padovan").params;
    CHECK_THROWS_AS(sum_even(pp, 3), ZeroDenominatorError);
    CHECK_THROWS_AS(sum_odd(pp, 3), ZeroDenominatorError);
    CHECK(sum_first(pp, 3) == oracle_terms(pp, 3)[0] + oracle_terms(pp, 3)[1] +
                                  oracle_terms(pp, 3)[2] + oracle_terms(pp, 3)[3]);
  }
}

TEST_CASE("s = 1 special sums") {
  // V0 + V2 + V4 + V6 = 0 + 1 + 4 + 13
  CHECK(sum_special_s1(kTribonacci, 3, Parity::Even) == Rational(18));
  CHECK_THROWS_AS(sum_special_s1(params(0, 1, 1, 1, 0, 1), 3, Parity::Even), PreconditionError);
  CHECK(sum_special_s1(params(0, 1, 2, 2, 1, 1), 0, Parity::Even) == Rational(0));

  for (const FamilyDescriptor* f : concrete_families()) {
    const SequenceParams& p = f->params;
    if (p.s != Rational(1) || (p.r + p.t).is_zero()) continue;
    auto v = oracle_terms(p, 2 * 40 + 2);
    Rational even(0), odd(0);
    for (long m = 0; m <= 40; ++m) {
      even += v[2 * m];
      odd += v[2 * m + 1];
      CHECK(sum_special_s1(p, m, Parity::Even) == even);
      CHECK(sum_special_s1(p, m, Parity::Odd) == odd);
    }
  }
}

TEST_CASE("band determinant term formula") {
  CHECK(det_term_hessenberg(params(5, 6, 7, 1, 2, 3), 0) == Rational(5));
  CHECK(det_term_hessenberg(kTribonacci, 6) == Rational(13));
  CHECK(det_term_hessenberg(kPerrin, 8) == Rational(10));

  for (const FamilyDescriptor* f : concrete_families()) {
    auto v = oracle_terms(f->params, 12);
    for (long n = 0; n <= 12; ++n) CHECK(det_term_hessenberg(f->params, n) == v[n]);
  }
}

TEST_CASE("reciprocal-entry determinant term formula") {
  CHECK(det_term_cereceda(params(3, 1, 3, 1, 1, 1), 5) == Rational(21));
  CHECK(det_term_cereceda(params(7, 1, 2, 1, 1, 1), 0) == Rational(7));
  CHECK_THROWS_AS(det_term_cereceda(params(0, 0, 1, 0, 1, 1), 4), ZeroDenominatorError);

  for (const FamilyDescriptor* f : concrete_families()) {
    const SequenceParams& p = f->params;
    if (p.a.is_zero() || p.t.is_zero()) continue;
    auto v = oracle_terms(p, 12);
    for (long n = 0; n <= 12; ++n) CHECK(det_term_cereceda(p, n) == v[n]);
  }
}

TEST_CASE("rational and hyperbolic determinants") {
  std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
  CHECK(determinant(std::move(m)) == Rational(1));

  std::vector<std::vector<Rational>> singular{{Rational(1), Rational(2)},
                                              {Rational(2), Rational(4)}};
  CHECK(determinant(std::move(singular)) == Rational(0));

  std::vector<std::vector<Rational>> pivot_swap{
      {Rational(0), Rational(1), Rational(0)},
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(3)}};
  CHECK(determinant(std::move(pivot_swap)) == Rational(-3));

  // 2x2 over the hyperbolic ring, cross-checked by cofactor expansion
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int i = 0; i < 50; ++i) {
    auto h = [&] { return HyperbolicNumber(Rational(coef(rng)), Rational(coef(rng))); };
    std::vector<std::vector<HyperbolicNumber>> hm{{h(), h()}, {h(), h()}};
    HyperbolicNumber expected = hm[0][0] * hm[1][1] - hm[0][1] * hm[1][0];
    CHECK(determinant(hm) == expected);
  }
}
