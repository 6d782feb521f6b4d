#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "tribospin/errors.hpp"

namespace tribospin {

/// Arbitrary-precision rational, kept canonical at all times:
/// gcd(|numerator|, denominator) = 1 and denominator > 0.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, enables `3 * x`
  Rational(long num, long den) {
    if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" in base 10.
  static Rational parse(const std::string& text) {
    try {
      mpq_class v(text, 10);
      if (v.get_den() == 0) throw ZeroDenominatorError("zero denominator in '" + text + "'");
      v.canonicalize();
      return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational: '" + text + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }  // "p" or "p/q"

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivisorError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace tribospin
