#include "tribospin/linalg.hpp"

#include <cstddef>
#include <utility>

namespace tribospin {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");

  // Bareiss: a[i][k] <- (a[i][k]*a[r][r] - a[i][r]*a[r][k]) / prev, divisions exact.
  Rational prev(1);
  int sign = 1;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (a[r][r].is_zero()) {
      std::size_t swap_row = r + 1;
      while (swap_row < n && a[swap_row][r].is_zero()) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(a[r], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t k = r + 1; k < n; ++k)
        a[i][k] = (a[i][k] * a[r][r] - a[i][r] * a[r][k]) / prev;
      a[i][r] = Rational(0);
    }
    prev = a[r][r];
  }
  Rational det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

HyperbolicNumber determinant(const std::vector<std::vector<HyperbolicNumber>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i].reserve(n);
    minus[i].reserve(n);
    for (const auto& z : a[i]) {
      plus[i].push_back(z.re + z.jpart);
      minus[i].push_back(z.re - z.jpart);
    }
  }
  Rational dp = determinant(std::move(plus));
  Rational dm = determinant(std::move(minus));
  Rational half(1, 2);
  return {half * (dp + dm), half * (dp - dm)};
}

}  // namespace tribospin
