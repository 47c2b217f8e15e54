#include "braidcalc/families.hpp"

namespace braidcalc {

namespace {

enum { X = 0, Y = 1, Z = 2 };

Relation make_relation(int u, int v, const Scalar& coef, int lin, const Scalar& lcoef) {
  Relation r;
  r.quadratic = Tensor({u, v}) - Tensor({v, u}, coef);
  r.linear = Tensor({lin}, -lcoef);
  return r;
}

AlgebraPresentation three_generator(const std::string& name, const std::vector<Relation>& rels) {
  AlgebraPresentation p;
  p.name = name;
  p.generators = {"x", "y", "z"};
  p.relations = rels;
  p.validate();
  return p;
}

bool all_pass(const std::pair<ConditionReport, ConditionReport>& r) { return r.first.passed() && r.second.passed(); }

}  // namespace

AlgebraPresentation sl2_like(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& k, const Scalar& l,
                             const Scalar& m) {
  return three_generator("sl2-like", {make_relation(X, Y, a, X, k), make_relation(Y, Z, b, Z, l),
                                      make_relation(Z, X, c, Y, m)});
}

AlgebraPresentation su2_like(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& k, const Scalar& l,
                             const Scalar& m) {
  return three_generator("su2-like", {make_relation(X, Y, a, Z, k), make_relation(Y, Z, b, X, l),
                                      make_relation(Z, X, c, Y, m)});
}

Subspace span_xyz(const std::vector<Tensor>& vectors) { return echelonize(vectors, 2); }

Subspace su2_iplus(const Scalar& alpha) { return sl2_iplus(alpha, alpha); }

Subspace sl2_iplus(const Scalar& alpha, const Scalar& beta) {
  return span_xyz({Tensor({X, X}), Tensor({Y, Y}), Tensor({Z, Z}), Tensor({X, Y}) + Tensor({Y, X}, alpha),
                   Tensor({Y, Z}) + Tensor({Z, Y}, beta), Tensor({Z, X}) + Tensor({X, Z}, beta)});
}

BracketData family_data(const AlgebraPresentation& p, std::optional<Subspace> iplus) {
  BracketData d = bracket_from_presentation(p);
  d.Iplus = std::move(iplus);
  return d;
}

std::vector<GridPoint> ClaimScan::mismatches() const {
  std::vector<GridPoint> out;
  for (const auto& g : points)
    if (g.expected != g.actual) out.push_back(g);
  return out;
}

ClaimScan verify_sl2_pp(const std::vector<std::vector<Rational>>& grid, const Scalar& c, const Scalar& m) {
  ClaimScan scan;
  for (const auto& pt : grid) {
    if (pt.size() != 4) throw Error("verify_sl2_pp: points are (a, b, k, l)");
    BracketData d = family_data(sl2_like(pt[0], pt[1], c, pt[2], pt[3], m));
    scan.points.push_back({pt, pt[0] == pt[1] && pt[2] == pt[3], all_pass(check_pp(d))});
  }
  return scan;
}

ClaimScan verify_su2_pp(const std::vector<std::vector<Rational>>& grid) {
  ClaimScan scan;
  for (const auto& pt : grid) {
    if (pt.size() != 3) throw Error("verify_su2_pp: points are (a, b, c)");
    BracketData d = family_data(su2_like(pt[0], pt[1], pt[2]));
    scan.points.push_back({pt, pt[0] == pt[1] && pt[1] == pt[2], all_pass(check_pp(d))});
  }
  return scan;
}

AlmostLieFamily almost_lie_su2(const Rational& alpha) {
  if (alpha == 0) throw Error("almost_lie_su2: alpha must be nonzero");
  Rational a3 = 1 / (alpha * alpha * alpha);
  AlmostLieFamily f;
  f.alpha = alpha;
  f.a = a3;
  f.gamma = alpha + a3;
  f.p = alpha * alpha + 1 / (alpha * alpha);
  f.data = family_data(su2_like(f.a, f.a, f.a), su2_iplus(alpha));
  return f;
}

std::vector<AlmostLieScanPoint> almost_lie_sl2_scan(const std::vector<std::vector<Rational>>& grid) {
  std::vector<AlmostLieScanPoint> out;
  for (const auto& pt : grid) {
    if (pt.size() != 4) throw Error("almost_lie_sl2_scan: points are (a, b, alpha, beta)");
    AlmostLieScanPoint s{pt[0], pt[1], pt[2], pt[3], std::nullopt, false};
    BracketData d = family_data(sl2_like(pt[0], pt[1], 1, 1, 1, 1), sl2_iplus(pt[2], pt[3]));
    if (check_complement(d).passed()) {
      s.p = solve_p(d);
      s.pass = s.p && check_almost_lie(d, *s.p).passed();
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {
BracketData end_data(const Braiding& R) {
  BracketData d = bracket_from_presentation(mre_presentation(R, 1));
  d.Iplus = mre_symmetric_complement(R);
  d.action_scale = 2;
  return d;
}
}  // namespace

BracketData involutive_end_data(const Braiding& R) {
  if (R.kind != BraidingKind::involutive || !check_involutive(R).passed())
    throw Error("involutive_end_data: braiding '" + R.name + "' is not involutive");
  return end_data(R);
}

BracketData hecke_end_data(const Braiding& R) {
  if (R.kind != BraidingKind::hecke || !check_hecke(R).passed())
    throw Error("hecke_end_data: braiding '" + R.name + "' is not a Hecke symmetry");
  return end_data(R);
}

}  // namespace braidcalc
