#pragma once

#include <initializer_list>
#include <vector>

#include "tribospin/rational.hpp"

namespace tribospin {

/// Dense univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial has no coefficients; otherwise the top
/// coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero

  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  /// Horner evaluation, exact.
  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& ci : coeffs_) c.push_back(-ci);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[i + k] += p.coeffs_[i] * q.coeffs_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& w, const Polynomial& p) {
    if (w.is_zero()) return {};
    std::vector<Rational> c;
    c.reserve(p.coeffs_.size());
    for (const auto& ci : p.coeffs_) c.push_back(w * ci);
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace tribospin
