#pragma once

#include <complex>
#include <vector>

#include "tribospin/rational.hpp"

namespace tribospin {

/// One generalized Tribonacci sequence: V(n) = r V(n-1) + s V(n-2) + t V(n-3)
/// with V(0) = a, V(1) = b, V(2) = c.
struct SequenceParams {
  Rational a, b, c;
  Rational r, s, t;

  friend bool operator==(const SequenceParams& x, const SequenceParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.r == y.r && x.s == y.s && x.t == y.t;
  }
};

/// Exact n-th term by iteration; n >= 0.
Rational term(const SequenceParams& p, long n);

/// V(0..n) inclusive, exact.
std::vector<Rational> term_range(const SequenceParams& p, long n);

/// n-th term through the companion ("S") matrix [[r,s,t],[1,0,0],[0,1,0]]:
/// S^(n-2) applied to the column (V2, V1, V0), top entry. Requires n >= 2.
Rational term_by_matrix(const SequenceParams& p, long n);

/// Roots of x^3 - r x^2 - s x - t = 0 by the Cardano construction
/// (principal cube roots paired so their product matches r^2/9 + s/3),
/// then a guarded Newton polish per root.
struct CharacteristicRoots {
  std::complex<double> sigma1, sigma2, sigma3;
  std::complex<double> xi;       // first cube-root branch
  std::complex<double> gamma;    // second cube-root branch
  std::complex<double> epsilon;  // primitive cube root of unity
  std::complex<double> upsilon;  // discriminant-like radicand under the square root
  bool distinct = false;
};

CharacteristicRoots characteristic_roots(const SequenceParams& p);

/// Weights of the three-root closed form:
/// phi1 = c - (sigma2+sigma3) b + sigma2 sigma3 a, and cyclic.
struct BinetWeights {
  std::complex<double> phi1, phi2, phi3;
};

BinetWeights binet_weights(const SequenceParams& p, const CharacteristicRoots& roots);

/// Three-term closed form V(n) = sum_i phi_i sigma_i^n / prod_{k!=i}(sigma_i - sigma_k).
/// Throws RepeatedRootsError when the roots are not numerically distinct.
std::complex<double> binet_term(const SequenceParams& p, long n);

/// Closed-form partial sums; each equals the brute-force partial sum exactly.
/// sum_first:  sum_{n=0}^{m} V(n),   denominator r+s+t-1
/// sum_even:   sum_{n=0}^{m} V(2n),  denominator (r+s+t-1)(r-s+t+1)
/// sum_odd:    sum_{n=0}^{m} V(2n+1), same denominator as sum_even
/// Throw ZeroDenominatorError naming the vanishing factor.
Rational sum_first(const SequenceParams& p, long m);
Rational sum_even(const SequenceParams& p, long m);
Rational sum_odd(const SequenceParams& p, long m);

enum class Parity { Even, Odd };

/// The s = 1 special-case sums. Requires s = 1 (PreconditionError otherwise)
/// and r + t != 0 (ZeroDenominatorError).
Rational sum_special_s1(const SequenceParams& p, long m, Parity parity);

/// n-th term as the (n+1)x(n+1) determinant with first column V0,V1,V2 and
/// the t,s,r,-1 band; exact, n >= 0.
Rational det_term_hessenberg(const SequenceParams& p, long n);

/// n-th term as the banded determinant with entries r, t, -s/t, 1/t, 1/V0.
/// Requires t != 0 and V0 != 0 (ZeroDenominatorError naming the entry).
Rational det_term_cereceda(const SequenceParams& p, long n);

}  // namespace tribospin
