#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "tribospin/hyperbolic.hpp"
#include "tribospin/sequence.hpp"
#include "tribospin/split_quaternion.hpp"

namespace tribospin {

/// Two-component column of hyperbolic numbers.
struct HSpinor {
  HyperbolicNumber c1, c2;

  HSpinor() = default;
  HSpinor(HyperbolicNumber a, HyperbolicNumber b) : c1(std::move(a)), c2(std::move(b)) {}

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }

  HSpinor operator-() const { return {-c1, -c2}; }

  friend HSpinor operator+(const HSpinor& x, const HSpinor& y) { return {x.c1 + y.c1, x.c2 + y.c2}; }
  friend HSpinor operator-(const HSpinor& x, const HSpinor& y) { return {x.c1 - y.c1, x.c2 - y.c2}; }
  friend HSpinor operator*(const Rational& w, const HSpinor& x) { return {w * x.c1, w * x.c2}; }
  friend HSpinor operator*(const HyperbolicNumber& w, const HSpinor& x) {
    return {w * x.c1, w * x.c2};
  }

  friend bool operator==(const HSpinor& x, const HSpinor& y) { return x.c1 == y.c1 && x.c2 == y.c2; }
  friend bool operator!=(const HSpinor& x, const HSpinor& y) { return !(x == y); }
};

/// Complexified spinor, used only by the float closed forms.
struct CHSpinor {
  ComplexHyperbolic c1, c2;

  friend CHSpinor operator+(const CHSpinor& x, const CHSpinor& y) {
    return {x.c1 + y.c1, x.c2 + y.c2};
  }
  friend CHSpinor operator-(const CHSpinor& x, const CHSpinor& y) {
    return {x.c1 - y.c1, x.c2 - y.c2};
  }
  friend CHSpinor operator*(std::complex<double> w, const CHSpinor& x) {
    return {w * x.c1, w * x.c2};
  }
};

/// The quaternion-to-spinor correspondence:
/// f(q0 + q1 i + q2 j + q3 k) = [q0 + q3 j ; -q1 + q2 j].
/// Linear and injective.
HSpinor f_map(const SplitQuaternion& q);

/// n-th sequence spinor [V(n) + V(n+3) j ; -V(n+1) + V(n+2) j]; equals
/// f_map(gtn_quaternion(p, n)) and satisfies the order-3 recurrence.
HSpinor spinor_term(const SequenceParams& p, long n);

/// Assembles the spinor for a window V(n), V(n+1), V(n+2), V(n+3).
HSpinor spinor_from_window(const Rational& vn, const Rational& vn1, const Rational& vn2,
                           const Rational& vn3);

/// The four conjugations, defined on arbitrary spinors as compositions of the
/// componentwise j-conjugation and the constant matrix C = [[0,1],[-1,0]]:
///   OrdinaryBar      x -> [conj c1 ; conj c2]
///   QuaternionicStar x -> [conj c1 ; -c2]        (image of quaternion conjugation)
///   HyperbolicTilde  x -> j C bar(x)
///   MateCheck        x -> -C bar(x)
enum class ConjugationKind { QuaternionicStar, OrdinaryBar, HyperbolicTilde, MateCheck };

HSpinor conjugate(const HSpinor& x, ConjugationKind kind);

/// Applies C = [[0,1],[-1,0]]: [c1;c2] -> [c2;-c1].
HSpinor apply_c_matrix(const HSpinor& x);

/// Multiplies every component by j.
HSpinor times_j(const HSpinor& x);

/// N(x) = bar(x)^t x; the j-part cancels, and on f-images this equals the
/// split-quaternion norm of the preimage.
HyperbolicNumber spinor_norm(const HSpinor& x);

/// n-th spinor through powers of the companion matrix applied to the initial
/// column [phi2; phi1; phi0]; exact, n >= 0.
HSpinor spinor_term_by_matrix(const SequenceParams& p, long n);

/// Closed-form partial sums of spinors (same coefficient pattern as the
/// scalar sums). Throw ZeroDenominatorError naming the vanishing factor.
HSpinor spinor_sum_first(const SequenceParams& p, long m);
HSpinor spinor_sum_even(const SequenceParams& p, long m);
HSpinor spinor_sum_odd(const SequenceParams& p, long m);

/// s = 1 special-case spinor sums; PreconditionError when s != 1,
/// ZeroDenominatorError when r + t = 0.
HSpinor spinor_sum_special_s1(const SequenceParams& p, long m, Parity parity);

/// Numerator coefficients of the generating function
/// (phi0, phi1 - r phi0, phi2 - r phi1 - s phi0).
std::array<HSpinor, 3> gf_numerator(const SequenceParams& p);

/// Multiplies the truncated series sum_{n<=N} phi_n x^n by
/// (1 - r x - s x^2 - t x^3) and checks, exactly, that the product is the
/// degree-2 numerator with all higher coefficients (through degree N) zero.
bool generating_function_check(const SequenceParams& p, long truncation_degree);

/// Binet columns zeta_i = [1 + sigma_i^3 j ; (-1 + sigma_i j) sigma_i].
struct SpinorBinetWeights {
  std::array<CHSpinor, 3> zeta;
};

SpinorBinetWeights spinor_binet_weights(const CharacteristicRoots& roots);

/// zeta-weighted three-root closed form; RepeatedRootsError on non-distinct
/// roots.
CHSpinor spinor_binet(const SequenceParams& p, long n);

/// Exponential generating function: closed form sum_i zeta_i phi_i
/// e^{sigma_i y} / prod_{k != i}(sigma_i - sigma_k), and the truncated series
/// sum_{n<N} phi_n y^n / n!.
CHSpinor egf_closed_form(const SequenceParams& p, double y);
CHSpinor egf_series(const SequenceParams& p, double y, long terms);

/// Poisson generating function: e^{-y} times the exponential one.
CHSpinor pgf_closed_form(const SequenceParams& p, double y);
CHSpinor pgf_series(const SequenceParams& p, double y, long terms);

/// Compares closed form against the truncated series at each sample,
/// componentwise relative tolerance `tol`.
bool egf_check(const SequenceParams& p, const std::vector<double>& y_samples, long terms,
               double tol = 1e-6);
bool pgf_check(const SequenceParams& p, const std::vector<double>& y_samples, long terms,
               double tol = 1e-6);

/// n-th spinor as the first-column cofactor expansion of the banded
/// determinant with spinor first column phi0, phi1, phi2; exact, n >= 0.
HSpinor spinor_det_hessenberg(const SequenceParams& p, long n);

/// n-th spinor through the reciprocal-entry determinant, evaluated
/// componentwise over the hyperbolic ring (1/phi0 meaning the hyperbolic
/// inverse of that component). Requires t != 0 and both components of phi0
/// off the null cone.
HSpinor spinor_det_cereceda(const SequenceParams& p, long n);

}  // namespace tribospin
