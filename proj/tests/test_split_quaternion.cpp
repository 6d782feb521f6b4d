#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "tribospin/families.hpp"
#include "tribospin/split_quaternion.hpp"

using namespace tribospin;

namespace {

SplitQuaternion unit(int k) {
  SplitQuaternion q;
  (k == 0 ? q.q0 : k == 1 ? q.q1 : k == 2 ? q.q2 : q.q3) = Rational(1);
  return q;
}

// Structure-constant oracle: multiply basis by basis through the unit table,
// then extend bilinearly. Independent of operator*.
SplitQuaternion oracle_mul(const SplitQuaternion& q, const SplitQuaternion& p) {
  // table[a][b] = (coefficient, basis index) for e_a e_b
  static const std::pair<int, int> table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {1, 0}, {-1, 1}},
      {{1, 3}, {1, 2}, {1, 1}, {1, 0}},
  };
  const std::array<Rational, 4> qc{q.q0, q.q1, q.q2, q.q3};
  const std::array<Rational, 4> pc{p.q0, p.q1, p.q2, p.q3};
  std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto [sign, idx] = table[a][b];
      out[idx] += Rational(sign) * qc[a] * pc[b];
    }
  return {out[0], out[1], out[2], out[3]};
}

struct QuatGen {
  std::mt19937 rng;
  std::uniform_int_distribution<long> num{-9, 9};
  std::uniform_int_distribution<long> den{1, 4};
  explicit QuatGen(unsigned seed) : rng(seed) {}
  Rational rat() { return Rational(num(rng), den(rng)); }
  SplitQuaternion operator()() { return {rat(), rat(), rat(), rat()}; }
};

}  // namespace

TEST_CASE("unit rules: i2=-1, j2=k2=1, ij=k, jk=-i, ki=j and anticommutation") {
  const SplitQuaternion one = unit(0), i = unit(1), j = unit(2), k = unit(3);

  CHECK(i * i == -one);
  CHECK(j * j == one);
  CHECK(k * k == one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == -i);
  CHECK(k * j == i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * j * k == one);
  CHECK(one * i == i);
}

TEST_CASE("product agrees with the structure-constant oracle") {
  QuatGen gen(41);
  for (int n = 0; n < 400; ++n) {
    SplitQuaternion q = gen(), p = gen();
    CHECK(q * p == oracle_mul(q, p));
  }

  const SplitQuaternion q{Rational(1), Rational(2), Rational(3), Rational(4)};
  const SplitQuaternion p{Rational(2), Rational(1), Rational(0), Rational(0)};
  CHECK(q * p == oracle_mul(q, p));
}

TEST_CASE("conjugate and norm") {
  const SplitQuaternion q{Rational(1), Rational(2), Rational(3), Rational(4)};
  CHECK(q.norm() == Rational(-20));  // 1 + 4 - 9 - 16
  CHECK(SplitQuaternion{Rational(1), Rational(0), Rational(0), Rational(0)}.norm() == Rational(1));

  QuatGen gen(43);
  for (int n = 0; n < 300; ++n) {
    SplitQuaternion x = gen(), y = gen();
    // q q* is a scalar equal to N(q)
    SplitQuaternion qq = x * x.conjugate();
    CHECK(qq.q1 == Rational(0));
    CHECK(qq.q2 == Rational(0));
    CHECK(qq.q3 == Rational(0));
    CHECK(qq.q0 == x.norm());
    // norm is multiplicative
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("scalar part of a pure-vector product matches the 16-term expansion") {
  QuatGen gen(47);
  for (int n = 0; n < 200; ++n) {
    SplitQuaternion x = gen(), y = gen();
    x.q0 = Rational(0);
    y.q0 = Rational(0);
    CHECK((x * y).q0 == -x.q1 * y.q1 + x.q2 * y.q2 + x.q3 * y.q3);
  }
}

TEST_CASE("sequence quaternions") {
  const SequenceParams trib = family_lookup("tribonacci").params;
  CHECK(gtn_quaternion(trib, 1) ==
        SplitQuaternion{Rational(1), Rational(1), Rational(2), Rational(4)});

  SUBCASE("initial value matches a + b i + c j + (rc+sb+ta) k") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> coef(-8, 8);
    for (int it = 0; it < 50; ++it) {
      SequenceParams p{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)),
                       Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
      const SplitQuaternion expected{
          p.a, p.b, p.c, p.r * p.c + p.s * p.b + p.t * p.a};
      CHECK(gtn_quaternion(p, 0) == expected);
    }
  }

  SUBCASE("conjugate negates the vector components") {
    const SplitQuaternion v3 = gtn_quaternion(trib, 3);
    CHECK(v3.conjugate() ==
          SplitQuaternion{term(trib, 3), -term(trib, 4), -term(trib, 5), -term(trib, 6)});
  }

  SUBCASE("quaternion recurrence holds for every family") {
    for (const FamilyDescriptor* f : concrete_families()) {
      const SequenceParams& p = f->params;
      for (long n = 3; n <= 100; n += 13) {
        const SplitQuaternion expected = p.r * gtn_quaternion(p, n - 1) +
                                         p.s * gtn_quaternion(p, n - 2) +
                                         p.t * gtn_quaternion(p, n - 3);
        CHECK(gtn_quaternion(p, n) == expected);
      }
    }
  }
}
