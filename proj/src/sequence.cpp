#include "tribospin/sequence.hpp"

#include <algorithm>
#include <cmath>

#include "det_common.hpp"
#include "tribospin/linalg.hpp"

namespace tribospin {

namespace {

void require_nonnegative(long n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
}

RationalMat3 companion_matrix(const SequenceParams& p) {
  RationalMat3 s;
  s.m = {{{p.r, p.s, p.t},
          {Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0)}}};
  return s;
}

std::complex<double> int_pow(std::complex<double> base, long e) {
  std::complex<double> acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1L) acc *= base;
    base *= base;
    e >>= 1L;
  }
  return acc;
}

}  // namespace

Rational term(const SequenceParams& p, long n) {
  require_nonnegative(n);
  if (n == 0) return p.a;
  if (n == 1) return p.b;
  if (n == 2) return p.c;
  Rational v0 = p.a, v1 = p.b, v2 = p.c;
  for (long i = 3; i <= n; ++i) {
    Rational next = p.r * v2 + p.s * v1 + p.t * v0;
    v0 = std::move(v1);
    v1 = std::move(v2);
    v2 = std::move(next);
  }
  return v2;
}

std::vector<Rational> term_range(const SequenceParams& p, long n) {
  require_nonnegative(n);
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  v.push_back(p.a);
  if (n >= 1) v.push_back(p.b);
  if (n >= 2) v.push_back(p.c);
  for (long i = 3; i <= n; ++i)
    v.push_back(p.r * v[i - 1] + p.s * v[i - 2] + p.t * v[i - 3]);
  return v;
}

Rational term_by_matrix(const SequenceParams& p, long n) {
  if (n < 2) throw PreconditionError("matrix-power term path requires n >= 2");
  RationalMat3 power = companion_matrix(p).pow(static_cast<unsigned long>(n - 2));
  // top entry of S^(n-2) (c, b, a)^T
  return power.m[0][0] * p.c + power.m[0][1] * p.b + power.m[0][2] * p.a;
}

CharacteristicRoots characteristic_roots(const SequenceParams& p) {
  const double r = p.r.to_double(), s = p.s.to_double(), t = p.t.to_double();

  CharacteristicRoots out;
  out.epsilon = std::complex<double>(-0.5, std::sqrt(3.0) / 2.0);
  const double radicand = r * r * r * t / 27.0 - r * r * s * s / 108.0 + r * s * t / 6.0 -
                          s * s * s / 27.0 + t * t / 4.0;
  out.upsilon = std::complex<double>(radicand, 0.0);

  const std::complex<double> root_disc = std::sqrt(out.upsilon);
  const double shift = r * r * r / 27.0 + r * s / 6.0 + t / 2.0;
  out.xi = std::pow(shift + root_disc, 1.0 / 3.0);

  // The two cube-root branches must multiply to r^2/9 + s/3; pick gamma's
  // branch by that constraint instead of trusting the principal value.
  const double pair_product = r * r / 9.0 + s / 3.0;
  std::complex<double> gamma = std::pow(shift - root_disc, 1.0 / 3.0);
  if (std::abs(out.xi) > 1e-300) {
    std::complex<double> best = gamma;
    double best_err = std::abs(out.xi * gamma - pair_product);
    for (int k = 1; k < 3; ++k) {
      std::complex<double> candidate = gamma * int_pow(out.epsilon, k);
      double err = std::abs(out.xi * candidate - pair_product);
      if (err < best_err) {
        best_err = err;
        best = candidate;
      }
    }
    gamma = best;
  }
  out.gamma = gamma;

  const std::complex<double> third(r / 3.0, 0.0);
  const std::complex<double> eps2 = out.epsilon * out.epsilon;
  out.sigma1 = third + out.xi + out.gamma;
  out.sigma2 = third + out.epsilon * out.xi + eps2 * out.gamma;
  out.sigma3 = third + eps2 * out.xi + out.epsilon * out.gamma;

  auto polish = [&](std::complex<double> x) {
    const std::complex<double> f = ((x - r) * x - s) * x - t;
    const std::complex<double> df = (3.0 * x - 2.0 * r) * x - s;
    const double scale = std::max(1.0, std::abs(x));
    if (std::abs(df) > 1e-12 * scale * scale) x -= f / df;
    return x;
  };
  out.sigma1 = polish(out.sigma1);
  out.sigma2 = polish(out.sigma2);
  out.sigma3 = polish(out.sigma3);

  const double mag = std::max({std::abs(out.sigma1), std::abs(out.sigma2), std::abs(out.sigma3)});
  const double gap = std::min({std::abs(out.sigma1 - out.sigma2), std::abs(out.sigma1 - out.sigma3),
                               std::abs(out.sigma2 - out.sigma3)});
  out.distinct = gap > 1e-8 * std::max(1.0, mag);
  return out;
}

BinetWeights binet_weights(const SequenceParams& p, const CharacteristicRoots& roots) {
  const std::complex<double> a(p.a.to_double(), 0.0), b(p.b.to_double(), 0.0),
      c(p.c.to_double(), 0.0);
  return {c - (roots.sigma2 + roots.sigma3) * b + roots.sigma2 * roots.sigma3 * a,
          c - (roots.sigma1 + roots.sigma3) * b + roots.sigma1 * roots.sigma3 * a,
          c - (roots.sigma1 + roots.sigma2) * b + roots.sigma1 * roots.sigma2 * a};
}

std::complex<double> binet_term(const SequenceParams& p, long n) {
  require_nonnegative(n);
  const CharacteristicRoots roots = characteristic_roots(p);
  if (!roots.distinct)
    throw RepeatedRootsError("closed form requires distinct characteristic roots");
  const BinetWeights w = binet_weights(p, roots);
  const auto& s1 = roots.sigma1;
  const auto& s2 = roots.sigma2;
  const auto& s3 = roots.sigma3;
  return w.phi1 * int_pow(s1, n) / ((s1 - s2) * (s1 - s3)) +
         w.phi2 * int_pow(s2, n) / ((s2 - s1) * (s2 - s3)) +
         w.phi3 * int_pow(s3, n) / ((s3 - s1) * (s3 - s2));
}

namespace {

Rational first_sum_denominator(const SequenceParams& p) {
  Rational d = p.r + p.s + p.t - 1;
  if (d.is_zero()) throw ZeroDenominatorError("summation denominator r+s+t-1 is zero");
  return d;
}

Rational alternating_sum_denominator(const SequenceParams& p) {
  Rational d = p.r - p.s + p.t + 1;
  if (d.is_zero()) throw ZeroDenominatorError("summation denominator r-s+t+1 is zero");
  return d;
}

}  // namespace

Rational sum_first(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = first_sum_denominator(p);
  std::vector<Rational> v = term_range(p, m + 3);
  Rational num = v[m + 3] + (1 - p.r) * v[m + 2] + (1 - p.r - p.s) * v[m + 1] - v[2] +
                 (p.r - 1) * v[1] + (p.r + p.s - 1) * v[0];
  return num / d;
}

Rational sum_even(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = first_sum_denominator(p) * alternating_sum_denominator(p);
  std::vector<Rational> v = term_range(p, 2 * m + 2);
  Rational num = (1 - p.s) * v[2 * m + 2] + (p.t + p.r * p.s) * v[2 * m + 1] +
                 (p.t * p.t + p.r * p.t) * v[2 * m] + (p.s - 1) * v[2] +
                 (-p.t - p.r * p.s) * v[1] +
                 (p.r * p.r - p.s * p.s + p.r * p.t + 2 * p.s - 1) * v[0];
  return num / d;
}

Rational sum_odd(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = first_sum_denominator(p) * alternating_sum_denominator(p);
  std::vector<Rational> v = term_range(p, 2 * m + 2);
  Rational num = (p.r + p.t) * v[2 * m + 2] +
                 (p.s - p.s * p.s + p.t * p.t + p.r * p.t) * v[2 * m + 1] +
                 (p.t - p.s * p.t) * v[2 * m] + (-p.r - p.t) * v[2] +
                 (p.s - 1 + p.r * p.r + p.r * p.t) * v[1] + (p.s * p.t - p.t) * v[0];
  return num / d;
}

Rational sum_special_s1(const SequenceParams& p, long m, Parity parity) {
  require_nonnegative(m);
  if (p.s != Rational(1))
    throw PreconditionError("s = 1 summation formula applied with s = " + p.s.str());
  Rational d = p.r + p.t;
  if (d.is_zero()) throw ZeroDenominatorError("summation denominator r+t is zero");
  std::vector<Rational> v = term_range(p, 2 * m + 2);
  if (parity == Parity::Even) return (v[2 * m + 1] + p.t * v[2 * m] - v[1] + p.r * v[0]) / d;
  return (v[2 * m + 2] + p.t * v[2 * m + 1] - v[2] + p.r * v[1]) / d;
}

namespace detail {

std::vector<std::vector<Rational>> hessenberg_band_matrix(const SequenceParams& p, long n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i + 1 < dim && i < 3; ++i) m[i][i + 1] = Rational(-1);
  for (std::size_t i = 3; i < dim; ++i) {
    m[i][i - 2] = p.t;
    m[i][i - 1] = p.s;
    m[i][i] = p.r;
    if (i + 1 < dim) m[i][i + 1] = Rational(-1);
  }
  return m;
}

}  // namespace detail

Rational det_term_hessenberg(const SequenceParams& p, long n) {
  require_nonnegative(n);
  auto m = detail::hessenberg_band_matrix(p, n);
  m[0][0] = p.a;
  if (n >= 1) m[1][0] = p.b;
  if (n >= 2) m[2][0] = p.c;
  return determinant(std::move(m));
}

Rational det_term_cereceda(const SequenceParams& p, long n) {
  require_nonnegative(n);
  if (n >= 3 && p.t.is_zero())
    throw ZeroDenominatorError("reciprocal-entry determinant requires t != 0");
  if (n >= 2 && p.a.is_zero())
    throw ZeroDenominatorError("reciprocal-entry determinant requires V0 != 0");
  detail::CerecedaEntries<Rational> e{.x0 = p.a,
                                      .x1 = p.b,
                                      .x2 = p.c,
                                      .r = p.r,
                                      .t = p.t,
                                      .inv_x0 = n >= 2 ? Rational(1) / p.a : Rational(0),
                                      .neg_s_over_t = n >= 3 ? -(p.s / p.t) : Rational(0),
                                      .inv_t = n >= 3 ? Rational(1) / p.t : Rational(0),
                                      .one = Rational(1),
                                      .zero = Rational(0)};
  return determinant(detail::cereceda_matrix(e, n));
}

}  // namespace tribospin
