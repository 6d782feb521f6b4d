#pragma once

#include "tribospin/polynomial.hpp"
#include "tribospin/sequence.hpp"
#include "tribospin/spinor.hpp"

namespace tribospin {

/// Sequence parameters with polynomial coefficients and initial data:
/// V(n)(x) = r(x) V(n-1)(x) + s(x) V(n-2)(x) + t(x) V(n-3)(x).
struct PolySequenceParams {
  Polynomial a, b, c;
  Polynomial r, s, t;
};

/// Spinor of polynomials [c1re + c1j j ; c2re + c2j j]; evaluation at any
/// rational point yields an HSpinor.
struct PolyHSpinor {
  Polynomial c1re, c1j, c2re, c2j;

  friend bool operator==(const PolyHSpinor& x, const PolyHSpinor& y) {
    return x.c1re == y.c1re && x.c1j == y.c1j && x.c2re == y.c2re && x.c2j == y.c2j;
  }
};

/// n-th polynomial sequence term, exact; n >= 0.
Polynomial poly_term(const PolySequenceParams& p, long n);

/// n-th polynomial spinor [V(n) + V(n+3) j ; -V(n+1) + V(n+2) j].
PolyHSpinor poly_spinor_term(const PolySequenceParams& p, long n);

/// Evaluation homomorphism helpers.
SequenceParams eval_params(const PolySequenceParams& p, const Rational& x);
HSpinor eval_spinor(const PolyHSpinor& s, const Rational& x);

}  // namespace tribospin
