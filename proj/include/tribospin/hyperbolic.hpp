#pragma once

#include <complex>

#include "tribospin/rational.hpp"

namespace tribospin {

/// Split-complex scalar a + b*j with j*j = +1, over exact rationals.
/// Commutative ring with zero divisors exactly on the null cone a^2 = b^2.
struct HyperbolicNumber {
  Rational re;
  Rational jpart;

  HyperbolicNumber() = default;
  HyperbolicNumber(Rational r, Rational j) : re(std::move(r)), jpart(std::move(j)) {}

  bool is_zero() const { return re.is_zero() && jpart.is_zero(); }
  bool on_null_cone() const { return re * re == jpart * jpart; }

  HyperbolicNumber conj() const { return {re, -jpart}; }

  /// (a + bj)^-1 = (a - bj) / (a^2 - b^2); only defined off the null cone.
  HyperbolicNumber inverse() const {
    Rational d = re * re - jpart * jpart;
    if (d.is_zero()) throw ZeroDivisorError("hyperbolic number on the null cone has no inverse");
    return {re / d, -jpart / d};
  }

  HyperbolicNumber operator-() const { return {-re, -jpart}; }

  friend HyperbolicNumber operator+(const HyperbolicNumber& x, const HyperbolicNumber& y) {
    return {x.re + y.re, x.jpart + y.jpart};
  }
  friend HyperbolicNumber operator-(const HyperbolicNumber& x, const HyperbolicNumber& y) {
    return {x.re - y.re, x.jpart - y.jpart};
  }
  // (a + bj)(c + dj) = (ac + bd) + (ad + bc) j
  friend HyperbolicNumber operator*(const HyperbolicNumber& x, const HyperbolicNumber& y) {
    return {x.re * y.re + x.jpart * y.jpart, x.re * y.jpart + x.jpart * y.re};
  }
  friend HyperbolicNumber operator*(const Rational& w, const HyperbolicNumber& x) {
    return {w * x.re, w * x.jpart};
  }
  friend HyperbolicNumber operator*(const HyperbolicNumber& x, const Rational& w) { return w * x; }

  friend bool operator==(const HyperbolicNumber& x, const HyperbolicNumber& y) {
    return x.re == y.re && x.jpart == y.jpart;
  }
  friend bool operator!=(const HyperbolicNumber& x, const HyperbolicNumber& y) { return !(x == y); }
};

/// Same ring law over complex doubles; carrier for the closed-form (Binet/EGF)
/// evaluations where the characteristic roots are complex.
struct ComplexHyperbolic {
  std::complex<double> re{};
  std::complex<double> jpart{};

  ComplexHyperbolic() = default;
  ComplexHyperbolic(std::complex<double> r, std::complex<double> j) : re(r), jpart(j) {}

  static ComplexHyperbolic from(const HyperbolicNumber& x) {
    return {std::complex<double>(x.re.to_double(), 0.0),
            std::complex<double>(x.jpart.to_double(), 0.0)};
  }

  ComplexHyperbolic operator-() const { return {-re, -jpart}; }

  friend ComplexHyperbolic operator+(const ComplexHyperbolic& x, const ComplexHyperbolic& y) {
    return {x.re + y.re, x.jpart + y.jpart};
  }
  friend ComplexHyperbolic operator-(const ComplexHyperbolic& x, const ComplexHyperbolic& y) {
    return {x.re - y.re, x.jpart - y.jpart};
  }
  friend ComplexHyperbolic operator*(const ComplexHyperbolic& x, const ComplexHyperbolic& y) {
    return {x.re * y.re + x.jpart * y.jpart, x.re * y.jpart + x.jpart * y.re};
  }
  friend ComplexHyperbolic operator*(std::complex<double> w, const ComplexHyperbolic& x) {
    return {w * x.re, w * x.jpart};
  }
};

}  // namespace tribospin
