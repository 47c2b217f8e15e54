#include "braidcalc/families.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

enum { X = 0, Y = 1, Z = 2 };

Tensor sq(int u) { return Tensor({u, u}); }
Tensor sym(int u, int v, const Scalar& c = 1) { return Tensor({u, v}) + Tensor({v, u}, c); }

bool pp(BracketData d) {
  auto r = check_pp(d);
  return r.first.passed() && r.second.passed();
}

const std::vector<Rational> small = {1, 2, 3};

}  // namespace

TEST_CASE("family data") {
  BracketData d = family_data(sl2_like(1, 1, 1, 1, 1, 1));
  CHECK(d.I.dim() == 3);
  CHECK(d.alpha_of(Tensor({X, Y}) - Tensor({Y, X})) == Tensor({X}));
  BracketData s = family_data(su2_like(Scalar::z(), Scalar::z(), Scalar::z()), su2_iplus(Scalar::z()));
  CHECK(s.Iplus->dim() == 6);
  CHECK(s.alpha_of(Tensor({Y, Z}) - Tensor({Z, Y}, Scalar::z())) == Tensor({X}));
}

TEST_CASE("sl2-like PP iff b = a and l = k") {
  std::vector<std::vector<Rational>> grid;
  for (const Rational& a : small)
    for (const Rational& b : small)
      for (const Rational& k : {Rational(1), Rational(2)})
        for (const Rational& l : {Rational(1), Rational(2)}) grid.push_back({a, b, k, l});
  ClaimScan scan = verify_sl2_pp(grid, 1, 1);
  CHECK(scan.points.size() == 36);
  CHECK(scan.mismatches().empty());
  int passing = 0;
  for (const auto& g : scan.points) passing += g.actual;
  CHECK(passing == 6);
}

TEST_CASE("su2-like PP iff a = b = c") {
  std::vector<std::vector<Rational>> grid;
  for (const Rational& a : small)
    for (const Rational& b : small)
      for (const Rational& c : small) grid.push_back({a, b, c});
  ClaimScan scan = verify_su2_pp(grid);
  CHECK(scan.points.size() == 27);
  CHECK(scan.mismatches().empty());
  CHECK(pp(family_data(su2_like(Scalar::z(), Scalar::z(), Scalar::z()))));
}

TEST_CASE("su2-like strong Jacobi depends on x^2 + y^2 + z^2") {
  AlgebraPresentation p = su2_like(1, 1, 1);
  BracketData conforming = family_data(p, su2_iplus(1));
  CHECK(check_complement(conforming).passed());
  CHECK(check_strong(conforming).passed());

  BracketData alt = family_data(
      p, span_xyz({sq(X) + sq(Y) + sq(Z), sq(X) - sq(Y), sq(Y) - sq(Z), sym(X, Y), sym(Y, Z), sym(Z, X)}));
  CHECK(check_strong(alt).passed());

  BracketData bad1 =
      family_data(p, span_xyz({sq(X) + Tensor({X, Y}), sq(Y), sq(Z), sym(X, Y), sym(Y, Z), sym(Z, X)}));
  REQUIRE(check_complement(bad1).passed());
  CHECK_FALSE(check_strong(bad1).passed());
  BracketData bad2 =
      family_data(p, span_xyz({sq(X), sq(Y), sq(Z) + Tensor({Z, X}), sym(X, Y), sym(Y, Z), sym(Z, X)}));
  REQUIRE(check_complement(bad2).passed());
  CHECK_FALSE(check_strong(bad2).passed());
}

TEST_CASE("almost-Lie su2-like family") {
  struct Case {
    Rational alpha, a, p;
  };
  for (const Case& c : {Case{1, 1, 2}, Case{2, Rational(1, 8), Rational(17, 4)},
                        Case{Rational(3, 2), Rational(8, 27), Rational(97, 36)}}) {
    AlmostLieFamily f = almost_lie_su2(c.alpha);
    CHECK(f.a == c.a);
    CHECK(f.p == c.p);
    // p = alpha gamma, a alpha^2 p = gamma, gamma = a + alpha
    CHECK(f.p == f.alpha * f.gamma);
    CHECK(f.a * f.alpha * f.alpha * f.p == f.gamma);
    CHECK(check_complement(f.data).passed());
    CHECK(check_almost_lie(f.data, f.p).passed());
    CHECK_FALSE(check_almost_lie(f.data, Scalar(Rational(f.p + 1))).passed());
    std::optional<Scalar> p = solve_p(f.data);
    REQUIRE(p);
    CHECK(*p == Scalar(c.p));
  }
  CHECK_THROWS_AS(almost_lie_su2(0), Error);
}

TEST_CASE("almost-Lie sl2-like scan") {
  CHECK(almost_lie_sl2_scan({}).empty());
  std::vector<std::vector<Rational>> grid;
  for (const Rational& a : {Rational(1), Rational(2)})
    for (const Rational& b : {Rational(1), Rational(2)})
      for (const Rational& al : {Rational(1), Rational(2)})
        for (const Rational& be : {Rational(1), Rational(2)}) grid.push_back({a, b, al, be});
  auto scan = almost_lie_sl2_scan(grid);
  REQUIRE(scan.size() == 16);
  int passing = 0;
  for (const auto& s : scan) {
    if (!s.pass) continue;
    ++passing;
    CHECK(s.a == 1);
    CHECK(s.b == 1);
    CHECK(s.alpha == 1);
    CHECK(s.beta == 1);
    REQUIRE(s.p);
    CHECK(*s.p == Scalar(2));
  }
  CHECK(passing == 1);
}

TEST_CASE("End(V) data for involutive symmetries") {
  BracketData d = involutive_end_data(flip(2));
  CHECK(d.I.dim() == 6);
  CHECK(pp(d));
  CHECK(check_complement(d).passed());
  CHECK(check_strong(d).passed());
  std::optional<Scalar> p = solve_p(d);
  REQUIRE(p);
  CHECK(*p == Scalar(1));
  CHECK(check_almost_lie(d, 1).passed());
  CHECK_FALSE(check_almost_lie(d, 2).passed());

  CHECK(pp(involutive_end_data(super_flip(1, 1))));
  CHECK_THROWS_AS(involutive_end_data(standard_hecke(2)), Error);
  CHECK_THROWS_AS(hecke_end_data(flip(2)), Error);
}

TEST_CASE("End(V) data for a Hecke symmetry") {
  BracketData d = hecke_end_data(standard_hecke(2));
  CHECK(pp(d));
  CHECK(check_complement(d).passed());
  // Strong Jacobi is only reported.
  ConditionReport strong = check_strong(d);
  MESSAGE("hecke strong Jacobi: " << strong.detail);
}
