#include <algorithm>
#include <random>

#include "braidcalc/families.hpp"
#include "braidcalc/rewrite.hpp"
#include "braidcalc/witt.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

const Scalar q = Scalar::z();

LaurentPoly mono(long k, const Scalar& c = 1) { return LaurentPoly::monomial(k, c); }

std::vector<LaurentPoly> random_polys(unsigned seed, int n = 10) {
  std::mt19937 rng(seed);
  std::vector<LaurentPoly> out;
  for (int i = 0; i < n; ++i) out.push_back(random_polynomial(rng, 1 + i % 6));
  return out;
}

// Sum of sign(s) e_s(k) e_s(l) e_s(m) over permutations s.
Tensor antisymmetrizer(long k, long l, long m) {
  std::vector<int> idx{0, 1, 2};
  const long v[3] = {k, l, m};
  Tensor out;
  do {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inv += idx[i] > idx[j];
    out.add(Word{static_cast<int>(v[idx[0]]), static_cast<int>(v[idx[1]]), static_cast<int>(v[idx[2]])},
            inv % 2 ? -1 : 1);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_CASE("q-derivative") {
  CHECK(q_derivative(mono(3)) == mono(2, 1 + q + q * q));
  CHECK(q_derivative(mono(0, 5)).is_zero());
  CHECK(q_derivative(mono(-1)) == mono(-2, Scalar(-1) / q));
  CHECK(q_integer(-2, q) == (q.pow(-2) - 1) / (q - 1));
  CHECK(q_integer(4, 1) == Scalar(4));
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly f = random_laurent(rng, 4);
    LaurentPoly quotient = (f.dilate(q) - f).divide(mono(1, q - 1));
    CHECK(q_derivative(f) == quotient);
  }
}

TEST_CASE("modified Leibniz rule") {
  std::mt19937 rng(8);
  for (int i = 0; i < 10; ++i) {
    LaurentPoly f = random_laurent(rng, 3), g = random_laurent(rng, 3);
    CHECK(q_derivative(f * g) == q_derivative(f) * g + f.dilate(q) * q_derivative(g));
  }
}

TEST_CASE("difference derivatives") {
  Scalar h = Scalar::z();
  CHECK(h_derivative(mono(2), h) == mono(1, 2) + mono(0, h));
  CHECK(h_derivative(mono(1), h) == mono(0));
  CHECK_THROWS_AS(h_derivative(mono(1), 0), Error);
  CHECK_THROWS_AS(h_derivative(mono(-1), h), Error);
  CHECK(qh_derivative(mono(1), Rational(3, 2)) == mono(0));
  CHECK(qh_derivative(mono(2), 0) == q_derivative(mono(2)));
  CHECK(qh_derivative(mono(2), Rational(1, 3), 1) == h_derivative(mono(2), Rational(1, 3)));
  CHECK_THROWS_AS(qh_derivative(mono(2), 0, 1), Error);
  CHECK(tilde_q_derivative(mono(2)) == mono(1, q + q.inverse()));
  CHECK(tilde_q_derivative(mono(2)) == mono(1, (q.pow(2) - q.pow(-2)) / (q - q.inverse())));
  CHECK(tilde_h_derivative(mono(3), h) == mono(2, 3) + mono(0, h * h));
}

TEST_CASE("permutation relations as operators") {
  auto fs = random_polys(21);
  CHECK(q_permutation_check(fs).passed());
  CHECK(h_permutation_check(fs, Rational(3, 2)).passed());
  CHECK(h_permutation_check(fs, Scalar::z()).passed());
  CHECK(qh_permutation_check(fs, Rational(3, 2)).passed());
  CHECK(qh_conjugation_check(fs, Rational(3, 2)).passed());
  CHECK(qh_conjugation_check(fs, Rational(-2)).passed());
  CHECK(qh_permutation_check(fs, 0).passed());
}

TEST_CASE("Witt operators") {
  CHECK(witt_apply(0, mono(2)) == mono(2, 1 + q));
  CHECK(witt_apply(2, mono(-1)) == mono(1, Scalar(-1) / q));
  for (long k = -2; k <= 2; ++k) CHECK(witt_apply(k, mono(0)).is_zero());
  CHECK(witt_relation_check(1, 2, 5).passed());
  CHECK(witt_relation_check(0, 0, 5).passed());
  CHECK_FALSE(witt_relation_check(1, 2, 5, 0).passed());
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) CHECK(witt_relation_check(m, n, 5).passed());
}

TEST_CASE("q-Witt bracket") {
  CHECK(qwitt_bracket(witt_e(0), witt_e(0)).empty());
  CHECK(qwitt_bracket(witt_e(1), witt_e(2)) == witt_e(3, q * q));
  CHECK(qwitt_jacobiator(1, 2, 3).empty());
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> idx(-5, 5);
  for (int i = 0; i < 20; ++i) {
    long k = idx(rng), l = idx(rng), m = idx(rng);
    WittElement a = qwitt_bracket(witt_e(k), witt_e(l)), b = qwitt_bracket(witt_e(l), witt_e(k));
    for (auto& [i2, c] : b) c = -c;
    CHECK(a == b);
    CHECK(qwitt_jacobiator(k, l, m).empty());
  }
}

TEST_CASE("the element Z") {
  CHECK(witt_Z(1, 2, 4) == witt_Z_right(1, 2, 4));
  CHECK(witt_Z(-2, 3, 5) == witt_Z_right(-2, 3, 5));
  CHECK(witt_Z(2, 2, 2).is_zero());
  CHECK(witt_Z(1, 2, 4, qwitt(1)) == antisymmetrizer(1, 2, 4));
  WittStructure s = qwitt();
  CHECK(witt_alpha_12(witt_Z(1, 2, 4), s));
  CHECK(witt_alpha_23(witt_Z(1, 2, 4), s));
  CHECK(witt_in_I(Tensor({1, 2}, q * q) - Tensor({2, 1}, q.pow(3)), s));
  CHECK_FALSE(witt_in_I(Tensor({1, 2}) - Tensor({2, 1}), s));
  CHECK_FALSE(witt_in_I(Tensor({1, 1}), s));
}

TEST_CASE("q-Witt Jacobi-PP failure") {
  ConditionReport r = witt_pp_check(1, 2, 4);
  CHECK(r.failed());
  // Oracle: the coefficient element on {e_6 e_1, e_1 e_6}.
  long k = 1, l = 2, m = 4;
  Scalar gap = q_integer(m + 1) - q_integer(l + 1);
  Tensor coeff = Tensor({6, 1}, q.pow(l + 1) * q.pow(m + 1) * gap) - Tensor({1, 6}, q.pow(2 * (k + 1)) * gap);
  CHECK(r.witness == coeff);
  CHECK(witt_pp_check(1, 2, 4, qwitt(1)).passed());
  CHECK(witt_indices_distinct(1, 2, -3));
  CHECK(witt_pp_check(1, 2, -3).failed());
  CHECK(witt_pp_check(1, 2, 3).status == Status::inconclusive);
  CHECK(witt_pp_check(0, 1, 2).status == Status::inconclusive);

  int admissible = 0;
  for (long a = -3; a <= 5; ++a)
    for (long b = -3; b <= 5; ++b)
      for (long c = -3; c <= 5; ++c) {
        if (!witt_indices_distinct(a, b, c)) continue;
        ++admissible;
        INFO(a << "," << b << "," << c);
        CHECK(witt_pp_check(a, b, c).failed());
        CHECK(witt_pp_check(a, b, c, qwitt(1)).passed());
      }
  CHECK(admissible > 0);
}

TEST_CASE("truncated q-Witt presentation") {
  AlgebraPresentation p = witt_presentation(1, 6);
  CHECK(p.generators.size() == 6);
  CHECK(p.relations.size() == 15);
  CHECK_FALSE(pbw_check(p, 3).pass);
  CHECK(pbw_check(witt_presentation(1, 6, qwitt(1)), 3).graded == std::vector<long>{1, 6, 21, 56});
}

TEST_CASE("hbar-Witt") {
  BracketData trivial = hwitt_data(4, 1);
  for (const Tensor& a : trivial.alpha) CHECK(a.is_zero());
  CHECK(witt_pp_check(1, 2, 4, hwitt()).failed());
  CHECK(witt_pp_check(1, 2, 4, hwitt(1)).passed());
  WittStructure s = hwitt();
  for (long k = -3; k <= 3; ++k)
    for (long l = -3; l <= 3; ++l) CHECK(s.bracket(k, l) == -s.bracket(l, k));
  CHECK_THROWS_AS(hwitt_data(2), Error);
}

TEST_CASE("Jackson sl(2)") {
  for (const auto& r : jackson_sl2_suite()) {
    INFO(r.id << " " << r.detail);
    CHECK(r.passed());
  }
  // x^3 under the first relation.
  LaurentPoly f = mono(3);
  CHECK(witt_apply(-1, witt_apply(0, f)) - witt_apply(0, witt_apply(-1, f)).scaled(q) == witt_apply(-1, f));
  // e_-1 = x, e_0 = y, e_1 = z in the sl2-like family.
  AlgebraPresentation fam = sl2_like(q, q, q.pow(-2), 1, 1, -(q.inverse() + q.pow(-2)));
  Subspace a(-1), b(-1);
  for (const auto& r : fam.relations) a.insert(r.full());
  for (const auto& r : jackson_sl2().relations) b.insert(r.full());
  CHECK(a == b);
  CHECK(graded_dims(jackson_sl2(1), 4) == std::vector<long>{1, 3, 6, 10, 15});
  CHECK(pbw_check(jackson_sl2(1), 4).pass);
}
