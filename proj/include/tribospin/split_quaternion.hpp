#pragma once

#include "tribospin/rational.hpp"
#include "tribospin/sequence.hpp"

namespace tribospin {

/// Split quaternion q0 + q1 i + q2 j + q3 k over exact rationals, with unit
/// rules i^2 = -1, j^2 = k^2 = +1, ij = -ji = k, jk = -kj = -i, ki = -ik = j.
struct SplitQuaternion {
  Rational q0, q1, q2, q3;

  SplitQuaternion() = default;
  SplitQuaternion(Rational a, Rational b, Rational c, Rational d)
      : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)), q3(std::move(d)) {}

  bool is_zero() const { return q0.is_zero() && q1.is_zero() && q2.is_zero() && q3.is_zero(); }

  SplitQuaternion conjugate() const { return {q0, -q1, -q2, -q3}; }

  /// N(q) = q q* = q0^2 + q1^2 - q2^2 - q3^2.
  Rational norm() const { return q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3; }

  SplitQuaternion operator-() const { return {-q0, -q1, -q2, -q3}; }

  friend SplitQuaternion operator+(const SplitQuaternion& q, const SplitQuaternion& p) {
    return {q.q0 + p.q0, q.q1 + p.q1, q.q2 + p.q2, q.q3 + p.q3};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& q, const SplitQuaternion& p) {
    return {q.q0 - p.q0, q.q1 - p.q1, q.q2 - p.q2, q.q3 - p.q3};
  }
  friend SplitQuaternion operator*(const Rational& w, const SplitQuaternion& q) {
    return {w * q.q0, w * q.q1, w * q.q2, w * q.q3};
  }

  /// The 16-term bilinear expansion of the split-quaternion unit rules.
  friend SplitQuaternion operator*(const SplitQuaternion& q, const SplitQuaternion& p) {
    return {q.q0 * p.q0 - q.q1 * p.q1 + q.q2 * p.q2 + q.q3 * p.q3,
            q.q0 * p.q1 + q.q1 * p.q0 - q.q2 * p.q3 + q.q3 * p.q2,
            q.q0 * p.q2 - q.q1 * p.q3 + q.q2 * p.q0 + q.q3 * p.q1,
            q.q0 * p.q3 + q.q1 * p.q2 - q.q2 * p.q1 + q.q3 * p.q0};
  }

  friend bool operator==(const SplitQuaternion& q, const SplitQuaternion& p) {
    return q.q0 == p.q0 && q.q1 == p.q1 && q.q2 == p.q2 && q.q3 == p.q3;
  }
  friend bool operator!=(const SplitQuaternion& q, const SplitQuaternion& p) { return !(q == p); }
};

/// n-th split quaternion with sequence components:
/// V(n) + V(n+1) i + V(n+2) j + V(n+3) k.  n >= 0.
SplitQuaternion gtn_quaternion(const SequenceParams& p, long n);

}  // namespace tribospin
