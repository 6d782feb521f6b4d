#pragma once

#include <array>
#include <vector>

#include "tribospin/hyperbolic.hpp"
#include "tribospin/rational.hpp"

namespace tribospin {

/// 3x3 rational matrix; enough linear algebra for the companion-matrix paths.
struct RationalMat3 {
  std::array<std::array<Rational, 3>, 3> m{};

  static RationalMat3 identity() {
    RationalMat3 e;
    for (int i = 0; i < 3; ++i) e.m[i][i] = Rational(1);
    return e;
  }

  friend RationalMat3 operator*(const RationalMat3& a, const RationalMat3& b) {
    RationalMat3 c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        Rational acc(0);
        for (int l = 0; l < 3; ++l) acc += a.m[i][l] * b.m[l][k];
        c.m[i][k] = acc;
      }
    return c;
  }

  /// Binary exponentiation, exact.
  RationalMat3 pow(unsigned long e) const {
    RationalMat3 result = identity();
    RationalMat3 base = *this;
    while (e != 0) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1UL;
    }
    return result;
  }
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. The input is consumed.
Rational determinant(std::vector<std::vector<Rational>> a);

/// Determinant over the hyperbolic ring, computed through the characteristic
/// decomposition z = x + yj  ->  (x + y, x - y), one exact rational
/// determinant per slot.
HyperbolicNumber determinant(const std::vector<std::vector<HyperbolicNumber>>& a);

}  // namespace tribospin
