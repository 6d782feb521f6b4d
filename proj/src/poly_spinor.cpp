#include "tribospin/poly_spinor.hpp"

namespace tribospin {

namespace {

std::vector<Polynomial> poly_term_range(const PolySequenceParams& p, long n) {
  std::vector<Polynomial> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  v.push_back(p.a);
  if (n >= 1) v.push_back(p.b);
  if (n >= 2) v.push_back(p.c);
  for (long i = 3; i <= n; ++i)
    v.push_back(p.r * v[i - 1] + p.s * v[i - 2] + p.t * v[i - 3]);
  return v;
}

}  // namespace

Polynomial poly_term(const PolySequenceParams& p, long n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
  return poly_term_range(p, n).back();
}

PolyHSpinor poly_spinor_term(const PolySequenceParams& p, long n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
  std::vector<Polynomial> v = poly_term_range(p, n + 3);
  return {v[n], v[n + 3], -v[n + 1], v[n + 2]};
}

SequenceParams eval_params(const PolySequenceParams& p, const Rational& x) {
  return {p.a.eval(x), p.b.eval(x), p.c.eval(x), p.r.eval(x), p.s.eval(x), p.t.eval(x)};
}

HSpinor eval_spinor(const PolyHSpinor& s, const Rational& x) {
  return {{s.c1re.eval(x), s.c1j.eval(x)}, {s.c2re.eval(x), s.c2j.eval(x)}};
}

}  // namespace tribospin
