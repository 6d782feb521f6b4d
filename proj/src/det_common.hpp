#pragma once

#include <cstddef>
#include <vector>

#include "tribospin/sequence.hpp"

namespace tribospin::detail {

/// Entries of the reciprocal-entry term determinant, precomputed by the
/// caller in whichever commutative ring it evaluates over. The inverse
/// entries are only read for dimensions where they actually appear
/// (inv_x0 from dim 3, neg_s_over_t from dim 4, inv_t from dim 5).
template <typename Scalar>
struct CerecedaEntries {
  Scalar x0, x1, x2;
  Scalar r, t;
  Scalar inv_x0;
  Scalar neg_s_over_t;
  Scalar inv_t;
  Scalar one, zero;
};

template <typename Scalar>
std::vector<std::vector<Scalar>> cereceda_matrix(const CerecedaEntries<Scalar>& e, long n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim, e.zero));
  m[0][0] = e.x0;
  if (dim > 1) {
    m[0][1] = e.one;
    m[1][0] = e.r * e.x0 - e.x1;
    m[1][1] = e.r;
  }
  if (dim > 2) {
    m[1][2] = e.inv_x0;
    m[2][1] = e.r * e.x1 - e.x2;
    m[2][2] = e.r;
  }
  if (dim > 3) {
    m[2][3] = e.t;
    m[3][1] = e.x0;
    m[3][2] = e.neg_s_over_t;
    m[3][3] = e.r;
  }
  if (dim > 4) m[3][4] = e.t;
  for (std::size_t i = 4; i < dim; ++i) {
    m[i][i - 2] = e.inv_t;
    m[i][i - 1] = e.neg_s_over_t;
    m[i][i] = e.r;
    if (i + 1 < dim) m[i][i + 1] = e.t;
  }
  return m;
}

/// The band-and-superdiagonal matrix of the first determinant theorem with
/// the leading column left at zero; callers place x0, x1, x2 themselves (the
/// spinor path expands along that column instead).
std::vector<std::vector<Rational>> hessenberg_band_matrix(const SequenceParams& p, long n);

}  // namespace tribospin::detail
