#include "braidcalc/families.hpp"
#include "braidcalc/jacobi.hpp"
#include "braidcalc/weyl.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

// Three generators with [x, y] = z, [y, z] = x, [z, x] = y.
AlgebraPresentation so3() { return su2_like(1, 1, 1); }

// xy - yx = 1 on two letters.
AlgebraPresentation heisenberg(const Scalar& c) {
  AlgebraPresentation p;
  p.name = "heisenberg";
  p.generators = {"x", "y"};
  p.relations.push_back({Tensor({0, 1}) - Tensor({1, 0}), Tensor(), -c});
  return p;
}

bool both(const std::pair<ConditionReport, ConditionReport>& r) { return r.first.passed() && r.second.passed(); }

bool all(const std::vector<ConditionReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

}  // namespace

TEST_CASE("bracket data from a presentation") {
  BracketData d = bracket_from_presentation(so3());
  CHECK(d.alphabet_size == 3);
  CHECK(d.I.dim() == 3);
  CHECK_FALSE(d.beta);
  CHECK(d.alpha_of(Tensor({1, 0}) - Tensor({0, 1})) == Tensor({2}, -1));
  CHECK_FALSE(d.alpha_of(Tensor({0, 0})));
  CHECK(d.i3().dim() == 1);
  BracketData h = bracket_from_presentation(heisenberg(1));
  REQUIRE(h.beta);
  CHECK(h.beta_of(Tensor({0, 1}) - Tensor({1, 0})) == Scalar(1));
}

TEST_CASE("alpha on the outer factors") {
  BracketData d = bracket_from_presentation(so3());
  Tensor t = (Tensor({0, 1}) - Tensor({1, 0})) * Tensor({2});
  CHECK(alpha_12(d, t) == Tensor({2, 2}));
  CHECK(alpha_23(d, Tensor({2}) * (Tensor({0, 1}) - Tensor({1, 0}))) == Tensor({2, 2}));
  CHECK_FALSE(alpha_12(d, Tensor({0, 1, 2})));
}

TEST_CASE("PP and BG conditions") {
  BracketData lie = bracket_from_presentation(so3());
  CHECK(both(check_pp(lie)));
  CHECK(all(check_bg(lie)));
  BracketData gl2 = bracket_from_presentation(gl_presentation(2, 1));
  CHECK(both(check_pp(gl2)));
  BracketData broken = bracket_from_presentation(su2_like(1, 2, 3));
  CHECK_FALSE(both(check_pp(broken)));
  BracketData weyl = bracket_from_presentation(heisenberg(1));
  CHECK(all(check_bg(weyl)));
}

TEST_CASE("strong Jacobi and the Chevalley differential") {
  BracketData d = family_data(so3(), su2_iplus(1));
  ExtendedBracket b = extend_by_zero(d);
  CHECK(b.at(0, 0).is_zero());
  CHECK(b.at(0, 1) == Tensor({2}, Rational(1, 2)));
  CHECK(b.at(1, 0) == Tensor({2}, Rational(-1, 2)));
  CHECK(check_strong(d).passed());
  ConditionReport ch = chevalley_d_squared(d, 3);
  INFO(ch.detail);
  CHECK(ch.passed());

  BracketData missing = bracket_from_presentation(so3());
  CHECK_FALSE(check_complement(missing).passed());
  BracketData overlap = family_data(so3(), su2_iplus(-1));
  CHECK_FALSE(check_complement(overlap).passed());
  CHECK_THROWS_AS(extend_by_zero(overlap), Error);
}

TEST_CASE("left and right operators") {
  BracketData d = family_data(so3(), su2_iplus(1));
  ExtendedBracket b = extend_by_zero(d);
  Matrix lx = left_operator(b, 0), rx = right_operator(b, 0);
  CHECK(lx == rx * Matrix::scalar(3, -1));
  CHECK(check_almost_lie(d, 2).passed());
  CHECK_FALSE(check_almost_lie(d, 1).passed());
  CHECK(solve_p(d) == Scalar(2));
}
