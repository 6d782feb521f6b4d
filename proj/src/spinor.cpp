#include "tribospin/spinor.hpp"

#include <cmath>

#include "det_common.hpp"
#include "tribospin/linalg.hpp"

namespace tribospin {

namespace {

void require_nonnegative(long n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
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

HSpinor f_map(const SplitQuaternion& q) {
  return {{q.q0, q.q3}, {-q.q1, q.q2}};
}

HSpinor spinor_from_window(const Rational& vn, const Rational& vn1, const Rational& vn2,
                           const Rational& vn3) {
  return {{vn, vn3}, {-vn1, vn2}};
}

HSpinor spinor_term(const SequenceParams& p, long n) {
  require_nonnegative(n);
  std::vector<Rational> v = term_range(p, n + 3);
  return spinor_from_window(v[n], v[n + 1], v[n + 2], v[n + 3]);
}

HSpinor apply_c_matrix(const HSpinor& x) { return {x.c2, -x.c1}; }

HSpinor times_j(const HSpinor& x) {
  const HyperbolicNumber j(Rational(0), Rational(1));
  return {j * x.c1, j * x.c2};
}

HSpinor conjugate(const HSpinor& x, ConjugationKind kind) {
  switch (kind) {
    case ConjugationKind::OrdinaryBar:
      return {x.c1.conj(), x.c2.conj()};
    case ConjugationKind::QuaternionicStar:
      return {x.c1.conj(), -x.c2};
    case ConjugationKind::HyperbolicTilde:
      return times_j(apply_c_matrix(conjugate(x, ConjugationKind::OrdinaryBar)));
    case ConjugationKind::MateCheck:
      return -apply_c_matrix(conjugate(x, ConjugationKind::OrdinaryBar));
  }
  throw PreconditionError("unknown conjugation kind");
}

HyperbolicNumber spinor_norm(const HSpinor& x) {
  return x.c1.conj() * x.c1 + x.c2.conj() * x.c2;
}

HSpinor spinor_term_by_matrix(const SequenceParams& p, long n) {
  require_nonnegative(n);
  RationalMat3 s;
  s.m = {{{p.r, p.s, p.t},
          {Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0)}}};
  const RationalMat3 power = s.pow(static_cast<unsigned long>(n));
  const HSpinor phi0 = spinor_term(p, 0);
  const HSpinor phi1 = spinor_term(p, 1);
  const HSpinor phi2 = spinor_term(p, 2);
  // bottom row of S^n applied to the column [phi2; phi1; phi0]
  return power.m[2][0] * phi2 + power.m[2][1] * phi1 + power.m[2][2] * phi0;
}

namespace {

HSpinor spinor_linear_combination(const SequenceParams& p,
                                  const std::vector<std::pair<Rational, long>>& terms,
                                  const Rational& denominator) {
  long max_index = 0;
  for (const auto& [w, idx] : terms) max_index = std::max(max_index, idx);
  std::vector<Rational> v = term_range(p, max_index + 3);
  HSpinor acc;
  for (const auto& [w, idx] : terms)
    acc = acc + w * spinor_from_window(v[idx], v[idx + 1], v[idx + 2], v[idx + 3]);
  Rational inv = Rational(1) / denominator;
  return inv * acc;
}

}  // namespace

HSpinor spinor_sum_first(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = p.r + p.s + p.t - 1;
  if (d.is_zero()) throw ZeroDenominatorError("summation denominator r+s+t-1 is zero");
  return spinor_linear_combination(p,
                                   {{Rational(1), m + 3},
                                    {1 - p.r, m + 2},
                                    {1 - p.r - p.s, m + 1},
                                    {Rational(-1), 2},
                                    {p.r - 1, 1},
                                    {p.r + p.s - 1, 0}},
                                   d);
}

namespace {

Rational even_odd_denominator(const SequenceParams& p) {
  Rational d1 = p.r + p.s + p.t - 1;
  if (d1.is_zero()) throw ZeroDenominatorError("summation denominator r+s+t-1 is zero");
  Rational d2 = p.r - p.s + p.t + 1;
  if (d2.is_zero()) throw ZeroDenominatorError("summation denominator r-s+t+1 is zero");
  return d1 * d2;
}

}  // namespace

HSpinor spinor_sum_even(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = even_odd_denominator(p);
  return spinor_linear_combination(
      p,
      {{1 - p.s, 2 * m + 2},
       {p.t + p.r * p.s, 2 * m + 1},
       {p.t * p.t + p.r * p.t, 2 * m},
       {p.s - 1, 2},
       {-p.t - p.r * p.s, 1},
       {p.r * p.r - p.s * p.s + p.r * p.t + 2 * p.s - 1, 0}},
      d);
}

HSpinor spinor_sum_odd(const SequenceParams& p, long m) {
  require_nonnegative(m);
  Rational d = even_odd_denominator(p);
  return spinor_linear_combination(p,
                                   {{p.r + p.t, 2 * m + 2},
                                    {p.s - p.s * p.s + p.t * p.t + p.r * p.t, 2 * m + 1},
                                    {p.t - p.s * p.t, 2 * m},
                                    {-p.r - p.t, 2},
                                    {p.s - 1 + p.r * p.r + p.r * p.t, 1},
                                    {p.s * p.t - p.t, 0}},
                                   d);
}

HSpinor spinor_sum_special_s1(const SequenceParams& p, long m, Parity parity) {
  require_nonnegative(m);
  if (p.s != Rational(1))
    throw PreconditionError("s = 1 summation formula applied with s = " + p.s.str());
  Rational d = p.r + p.t;
  if (d.is_zero()) throw ZeroDenominatorError("summation denominator r+t is zero");
  if (parity == Parity::Even)
    return spinor_linear_combination(
        p, {{Rational(1), 2 * m + 1}, {p.t, 2 * m}, {Rational(-1), 1}, {p.r, 0}}, d);
  return spinor_linear_combination(
      p, {{Rational(1), 2 * m + 2}, {p.t, 2 * m + 1}, {Rational(-1), 2}, {p.r, 1}}, d);
}

std::array<HSpinor, 3> gf_numerator(const SequenceParams& p) {
  const HSpinor phi0 = spinor_term(p, 0);
  const HSpinor phi1 = spinor_term(p, 1);
  const HSpinor phi2 = spinor_term(p, 2);
  return {phi0, phi1 - p.r * phi0, phi2 - p.r * phi1 - p.s * phi0};
}

bool generating_function_check(const SequenceParams& p, long truncation_degree) {
  if (truncation_degree < 3) throw PreconditionError("truncation degree must be at least 3");
  std::vector<Rational> v = term_range(p, truncation_degree + 3);
  std::vector<HSpinor> series;
  series.reserve(truncation_degree + 1);
  for (long n = 0; n <= truncation_degree; ++n)
    series.push_back(spinor_from_window(v[n], v[n + 1], v[n + 2], v[n + 3]));

  // (1 - r x - s x^2 - t x^3) * series, formal product truncated at the
  // series degree (higher coefficients would mix unknown terms).
  const Rational coeffs[4] = {Rational(1), -p.r, -p.s, -p.t};
  const std::array<HSpinor, 3> numerator = gf_numerator(p);
  for (long deg = 0; deg <= truncation_degree; ++deg) {
    HSpinor acc;
    for (long k = 0; k <= 3 && k <= deg; ++k) acc = acc + coeffs[k] * series[deg - k];
    if (deg <= 2) {
      if (acc != numerator[deg]) return false;
    } else if (!acc.is_zero()) {
      return false;
    }
  }
  return true;
}

SpinorBinetWeights spinor_binet_weights(const CharacteristicRoots& roots) {
  auto zeta = [](std::complex<double> sigma) {
    ComplexHyperbolic top(std::complex<double>(1.0, 0.0), sigma * sigma * sigma);
    ComplexHyperbolic bottom(-sigma, sigma * sigma);
    return CHSpinor{top, bottom};
  };
  return {{zeta(roots.sigma1), zeta(roots.sigma2), zeta(roots.sigma3)}};
}

CHSpinor spinor_binet(const SequenceParams& p, long n) {
  require_nonnegative(n);
  const CharacteristicRoots roots = characteristic_roots(p);
  if (!roots.distinct)
    throw RepeatedRootsError("closed form requires distinct characteristic roots");
  const BinetWeights w = binet_weights(p, roots);
  const SpinorBinetWeights z = spinor_binet_weights(roots);
  const auto& s1 = roots.sigma1;
  const auto& s2 = roots.sigma2;
  const auto& s3 = roots.sigma3;
  return (w.phi1 * int_pow(s1, n) / ((s1 - s2) * (s1 - s3))) * z.zeta[0] +
         (w.phi2 * int_pow(s2, n) / ((s2 - s1) * (s2 - s3))) * z.zeta[1] +
         (w.phi3 * int_pow(s3, n) / ((s3 - s1) * (s3 - s2))) * z.zeta[2];
}

CHSpinor egf_closed_form(const SequenceParams& p, double y) {
  const CharacteristicRoots roots = characteristic_roots(p);
  if (!roots.distinct)
    throw RepeatedRootsError("closed form requires distinct characteristic roots");
  const BinetWeights w = binet_weights(p, roots);
  const SpinorBinetWeights z = spinor_binet_weights(roots);
  const auto& s1 = roots.sigma1;
  const auto& s2 = roots.sigma2;
  const auto& s3 = roots.sigma3;
  return (w.phi1 * std::exp(s1 * y) / ((s1 - s2) * (s1 - s3))) * z.zeta[0] +
         (w.phi2 * std::exp(s2 * y) / ((s2 - s1) * (s2 - s3))) * z.zeta[1] +
         (w.phi3 * std::exp(s3 * y) / ((s3 - s1) * (s3 - s2))) * z.zeta[2];
}

CHSpinor egf_series(const SequenceParams& p, double y, long terms) {
  if (terms < 1) throw PreconditionError("series needs at least one term");
  std::vector<Rational> v = term_range(p, terms + 2);
  CHSpinor acc;
  double weight = 1.0;  // y^n / n!
  for (long n = 0; n < terms; ++n) {
    if (n > 0) weight *= y / static_cast<double>(n);
    const CHSpinor phi{{std::complex<double>(v[n].to_double(), 0.0),
                        std::complex<double>(v[n + 3].to_double(), 0.0)},
                       {std::complex<double>(-v[n + 1].to_double(), 0.0),
                        std::complex<double>(v[n + 2].to_double(), 0.0)}};
    acc = acc + std::complex<double>(weight, 0.0) * phi;
  }
  return acc;
}

CHSpinor pgf_closed_form(const SequenceParams& p, double y) {
  return std::complex<double>(std::exp(-y), 0.0) * egf_closed_form(p, y);
}

CHSpinor pgf_series(const SequenceParams& p, double y, long terms) {
  return std::complex<double>(std::exp(-y), 0.0) * egf_series(p, y, terms);
}

namespace {

double slot_error(const ComplexHyperbolic& got, const ComplexHyperbolic& want) {
  return std::max(std::abs(got.re - want.re), std::abs(got.jpart - want.jpart));
}

double slot_scale(const ComplexHyperbolic& x) {
  return std::max(std::abs(x.re), std::abs(x.jpart));
}

bool spinors_close(const CHSpinor& got, const CHSpinor& want, double tol) {
  const double err = std::max(slot_error(got.c1, want.c1), slot_error(got.c2, want.c2));
  const double scale = std::max({1.0, slot_scale(want.c1), slot_scale(want.c2)});
  return err <= tol * scale;
}

}  // namespace

bool egf_check(const SequenceParams& p, const std::vector<double>& y_samples, long terms,
               double tol) {
  for (double y : y_samples)
    if (!spinors_close(egf_closed_form(p, y), egf_series(p, y, terms), tol)) return false;
  return true;
}

bool pgf_check(const SequenceParams& p, const std::vector<double>& y_samples, long terms,
               double tol) {
  for (double y : y_samples)
    if (!spinors_close(pgf_closed_form(p, y), pgf_series(p, y, terms), tol)) return false;
  return true;
}

HSpinor spinor_det_hessenberg(const SequenceParams& p, long n) {
  require_nonnegative(n);
  if (n == 0) return spinor_term(p, 0);
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const auto band = detail::hessenberg_band_matrix(p, n);

  // The leading column is the only spinor-valued one; expand along it. The
  // three cofactors are exact rational determinants of the band minors.
  HSpinor acc;
  for (std::size_t i = 0; i < 3 && i < dim; ++i) {
    std::vector<std::vector<Rational>> minor;
    minor.reserve(dim - 1);
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == i) continue;
      minor.emplace_back(band[row].begin() + 1, band[row].end());
    }
    Rational cofactor = determinant(std::move(minor));
    if (i % 2 == 1) cofactor = -cofactor;
    acc = acc + cofactor * spinor_term(p, static_cast<long>(i));
  }
  return acc;
}

HSpinor spinor_det_cereceda(const SequenceParams& p, long n) {
  require_nonnegative(n);
  if (n >= 3 && p.t.is_zero())
    throw ZeroDenominatorError("reciprocal-entry determinant requires t != 0");

  const HSpinor phi0 = spinor_term(p, 0);
  const HSpinor phi1 = spinor_term(p, 1);
  const HSpinor phi2 = spinor_term(p, 2);

  auto component = [&](const HyperbolicNumber& x0, const HyperbolicNumber& x1,
                       const HyperbolicNumber& x2) {
    if (n >= 2 && x0.on_null_cone())
      throw ZeroDivisorError("component of the initial spinor lies on the null cone");
    const HyperbolicNumber zero(Rational(0), Rational(0));
    const HyperbolicNumber one(Rational(1), Rational(0));
    detail::CerecedaEntries<HyperbolicNumber> e{
        .x0 = x0,
        .x1 = x1,
        .x2 = x2,
        .r = HyperbolicNumber(p.r, Rational(0)),
        .t = HyperbolicNumber(p.t, Rational(0)),
        .inv_x0 = n >= 2 ? x0.inverse() : zero,
        .neg_s_over_t = n >= 3 ? HyperbolicNumber(-(p.s / p.t), Rational(0)) : zero,
        .inv_t = n >= 3 ? HyperbolicNumber(Rational(1) / p.t, Rational(0)) : zero,
        .one = one,
        .zero = zero};
    return determinant(detail::cereceda_matrix(e, n));
  };

  return {component(phi0.c1, phi1.c1, phi2.c1), component(phi0.c2, phi1.c2, phi2.c2)};
}

}  // namespace tribospin
