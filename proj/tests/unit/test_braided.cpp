#include "braidcalc/braided.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

const Scalar q = Scalar::z();

bool all_passed(const std::vector<ConditionReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

}  // namespace

TEST_CASE("braiding axioms") {
  for (int m : {1, 2, 3}) {
    Braiding h = standard_hecke(m);
    CHECK(check_braid(h).passed());
    CHECK(check_hecke(h).passed());
    CHECK_FALSE(check_involutive(h).passed());
  }
  CHECK(standard_hecke(1).R(0, 0) == q);
  for (int m : {1, 2, 3}) {
    CHECK(check_involutive(flip(m)).passed());
    CHECK(check_braid(flip(m)).passed());
  }
  Braiding s = super_flip(1, 1);
  CHECK(check_involutive(s).passed());
  CHECK(check_braid(s).passed());
  CHECK(s.R(3, 3) == Scalar(-1));
}

TEST_CASE("embed and partial trace") {
  Matrix P = flip_matrix(2);
  // P_13 P_13 = I on three sites.
  Matrix p13 = embed(P, 2, {0, 2}, 3);
  CHECK(p13 * p13 == Matrix::identity(8));
  // Tr_2 P_12 = I.
  CHECK(partial_trace(P, 2, 1, 2) == Matrix::identity(2));
  // Sites given in reverse order: P_21 = P_12.
  CHECK(embed(P, 2, {1, 0}, 2) == P);
}

TEST_CASE("skew inverse of the flip") {
  SkewInverseData s = skew_inverse(flip(2));
  CHECK(s.Psi == flip_matrix(2));
  CHECK(s.B == Matrix::identity(2));
  CHECK(s.C == Matrix::identity(2));
  CHECK(all_passed(check_skew_inverse(flip(2), s)));
}

TEST_CASE("skew inverse of Hecke symmetries") {
  for (int m : {1, 2, 3}) {
    Braiding h = standard_hecke(m);
    SkewInverseData s = skew_inverse(h);
    auto reports = check_skew_inverse(h, s);
    for (const auto& r : reports) {
      INFO(r.id << " " << r.detail);
      CHECK(r.passed());
    }
  }
  SkewInverseData s2 = skew_inverse(standard_hecke(2));
  CHECK(s2.B.trace() == q.pow(-1) + q.pow(-3));
  CHECK(s2.B * s2.C == Matrix::scalar(2, q.pow(-4)));
  SkewInverseData s1 = skew_inverse(standard_hecke(1));
  CHECK(s1.Psi(0, 0) == q.inverse());
  CHECK(s1.B(0, 0) == q.inverse());
}

TEST_CASE("psi-hat identities") {
  for (int m : {1, 2}) {
    Braiding h = standard_hecke(m);
    CHECK(check_psi_hat(h, skew_inverse(h)).passed());
  }
  CHECK(check_psi_hat(flip(2), skew_inverse(flip(2))).passed());
  Braiding h1 = standard_hecke(1);
  CHECK(psi_hat(h1, skew_inverse(h1))(0, 0) == q);
}

TEST_CASE("modified reflection equation algebra") {
  CHECK(mre_presentation(standard_hecke(1), 1).relations.empty());
  CHECK(mre_presentation(flip(1), 1).relations.empty());
  Braiding h = standard_hecke(2);
  AlgebraPresentation p = mre_presentation(h, 1);
  CHECK(p.relations.size() == 6);
  DimReport rep = pbw_check(p, 3);
  CHECK(rep.quadratic == std::vector<long>{1, 4, 10, 20});
  CHECK(rep.graded == std::vector<long>{1, 4, 10, 20});
  CHECK(rep.pass);
  CHECK(graded_dims(mre_presentation(h, 0), 3) == std::vector<long>{1, 4, 10, 20});
}

TEST_CASE("flip mRE is the gl(m) enveloping algebra") {
  for (int m : {1, 2}) {
    Scalar hbar = Rational(3, 2);
    Subspace a(-1), b(-1);
    for (const auto& r : mre_presentation(flip(m), hbar).relations) a.insert(r.full());
    for (const auto& r : gl_presentation(m, hbar).relations) b.insert(r.full());
    CHECK(a == b);
  }
}

TEST_CASE("braided Weyl algebra at the flip gives the coproduct rules") {
  for (int m : {1, 2}) {
    WeylPresentation bw = braided_weyl(flip(m), 1);
    WeylPresentation gl = gl_weyl(m, 1, GlRules::coproduct);
    CHECK(bw.rules == gl.rules);
    WeylPresentation verb = gl_weyl(m, 1, GlRules::verbatim);
    if (m == 2) CHECK_FALSE(bw.rules == verb.rules);
  }
}

TEST_CASE("braided derivative action") {
  SUBCASE("m = 1") {
    Braiding h = standard_hecke(1);
    WeylPresentation w = braided_weyl(h, 1);
    CHECK(apply_derivative(w, {0}, Tensor({0})) == Tensor::constant(q.inverse()));
    CHECK(check_action_on_generators(w, skew_inverse(h)).passed());
  }
  SUBCASE("m = 2") {
    Braiding h = standard_hecke(2);
    WeylPresentation w = braided_weyl(h, 1);
    SkewInverseData s = skew_inverse(h);
    CHECK(check_action_on_generators(w, s).passed());
    CHECK(apply_derivative(w, {0}, Tensor({0})) == Tensor::constant(s.B(0, 0)));
    ConditionReport rep = check_representation(w, 2);
    INFO(rep.detail);
    CHECK(rep.passed());
    CHECK(check_representation_spot(w, 10, 1, 7).passed());
  }
  SUBCASE("classical") {
    WeylPresentation w = braided_weyl(flip(2), 0);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
        Tensor want = (i == l && k == j) ? Tensor::constant(1) : Tensor();
        CHECK(apply_derivative(w, {a}, Tensor({b})) == want);
      }
  }
}

TEST_CASE("exterior algebra") {
  Braiding h1 = standard_hecke(1);
  AlgebraPresentation l1 = ext_algebra(h1, skew_inverse(h1));
  REQUIRE(l1.relations.size() == 1);
  CHECK(l1.relations[0].quadratic == Tensor({0, 0}));
  Braiding h2 = standard_hecke(2);
  AlgebraPresentation l2 = ext_algebra(h2, skew_inverse(h2));
  CHECK(l2.relations.size() == 10);
  CHECK(graded_dims(l2, 4) == std::vector<long>{1, 4, 6, 4, 1});
  AlgebraPresentation lf = ext_algebra(flip(2), skew_inverse(flip(2)));
  CHECK(graded_dims(lf, 4) == std::vector<long>{1, 4, 6, 4, 1});
}

TEST_CASE("de Rham operator") {
  SUBCASE("m = 1") {
    BraidedCalculus c(standard_hecke(1), 1);
    DifferentialForm n = BraidedCalculus::function(Tensor({0}));
    DifferentialForm dn = c.d(n);
    DifferentialForm want;
    want.parts[Word{0}] = Tensor::constant(q.inverse());
    CHECK(dn == want);
    CHECK(c.d(dn).is_zero());
    CHECK(c.d(BraidedCalculus::function(Tensor::constant(1))).is_zero());
    CHECK(c.d(c.d(BraidedCalculus::function(Tensor({0, 0})))).is_zero());
  }
  SUBCASE("m = 2") {
    BraidedCalculus c(standard_hecke(2), 1);
    for (int a = 0; a < 4; ++a) {
      CHECK_FALSE(c.d(BraidedCalculus::function(Tensor({a}))).is_zero());
      CHECK(c.d(c.d(BraidedCalculus::function(Tensor({a})))).is_zero());
    }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        DifferentialForm f = BraidedCalculus::function(Tensor({a, b}));
        DifferentialForm dd = c.d(c.d(f));
        INFO(c.to_string(dd));
        CHECK(dd.is_zero());
      }
  }
}

TEST_CASE("duality, Q operators and coevaluation") {
  for (const Braiding& b : {flip(2), standard_hecke(2)}) {
    SkewInverseData s = skew_inverse(b);
    CHECK(duality_check(b, s).passed());
    ConditionReport qq = qq_check(b);
    INFO(qq.detail);
    CHECK(qq.passed());
    CHECK(qq.detail == "dims 6 + 10");
    CHECK(coevaluation_check(b, s).passed());
    CHECK(orthogonality_check(b, s).passed());
  }
  Braiding h = standard_hecke(2);
  CHECK_FALSE(duality_check(h, skew_inverse(h), false).passed());
}

TEST_CASE("coproduct on generators") {
  for (int m : {1, 2, 3}) CHECK(coproduct_check(m).passed());
}

TEST_CASE("not skew-invertible") {
  Braiding z{2, Matrix(4, 4), BraidingKind::involutive, "zero"};
  CHECK_THROWS_WITH_AS(skew_inverse(z), "not skew-invertible", Error);
}
