#pragma once

// Three-generator quadratic-linear families
//   xy - a yx = l1,  yz - b zy = l2,  zx - c xz = l3
// and the End(V) data built from the modified reflection equation algebra.

#include <optional>
#include <string>
#include <vector>

#include "braidcalc/braided.hpp"
#include "braidcalc/jacobi.hpp"

namespace braidcalc {

// l1 = kx, l2 = lz, l3 = my.
AlgebraPresentation sl2_like(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& k, const Scalar& l,
                             const Scalar& m);
// l1 = kz, l2 = lx, l3 = my.
AlgebraPresentation su2_like(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& k = 1,
                             const Scalar& l = 1, const Scalar& m = 1);

// span(x^2, y^2, z^2, xy + al yx, yz + al zy, zx + al xz)
Subspace su2_iplus(const Scalar& alpha);
// span(x^2, y^2, z^2, xy + al yx, yz + be zy, zx + be xz)
Subspace sl2_iplus(const Scalar& alpha, const Scalar& beta);
// Degree-2 subspace from explicit vectors over x, y, z.
Subspace span_xyz(const std::vector<Tensor>& vectors);

BracketData family_data(const AlgebraPresentation& p, std::optional<Subspace> iplus = std::nullopt);

struct GridPoint {
  std::vector<Rational> params;
  bool expected = false;
  bool actual = false;
};

struct ClaimScan {
  std::vector<GridPoint> points;
  std::vector<GridPoint> mismatches() const;
};

// Each point is (a, b, k, l) with c, m fixed; PP expected iff b = a and l = k.
ClaimScan verify_sl2_pp(const std::vector<std::vector<Rational>>& grid, const Scalar& c, const Scalar& m);
// Each point is (a, b, c); PP expected iff a = b = c.
ClaimScan verify_su2_pp(const std::vector<std::vector<Rational>>& grid);

struct AlmostLieFamily {
  Rational alpha, a, gamma, p;
  BracketData data;
};
// a = alpha^-3, gamma = alpha + alpha^-3, p = alpha^2 + alpha^-2.
AlmostLieFamily almost_lie_su2(const Rational& alpha);

struct AlmostLieScanPoint {
  Rational a, b, alpha, beta;
  std::optional<Scalar> p;
  bool pass = false;
};
// Points (a, b, alpha, beta) on sl2_like(a, b, 1, 1, 1, 1) with sl2_iplus.
std::vector<AlmostLieScanPoint> almost_lie_sl2_scan(const std::vector<std::vector<Rational>>& grid);

// End(V) data from mre_presentation(R, 1): I, alpha from its relations and
// I+ = span of the entries of R N1 R N1 + N1 R N1 R^-1. action_scale is 2,
// since the End(V) bracket X o Y - o R(X, Y) is twice the algebra bracket.
BracketData involutive_end_data(const Braiding& R);
BracketData hecke_end_data(const Braiding& R);

}  // namespace braidcalc
