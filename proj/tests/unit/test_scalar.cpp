#include <random>

#include "braidcalc/scalar.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&] {
    Poly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p += Poly::monomial(Rational(coef(rng), 1 + (coef(rng) & 1)), i);
    return p;
  };
  Poly den = poly();
  if (den.is_zero()) den = Poly(Rational(1));
  return Scalar::fraction(poly(), den);
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  Scalar z = Scalar::z();
  CHECK((z - 1) * (z + 1) == z * z - 1);
  CHECK((z * z - 1) / (z - 1) == z + 1);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK(scalar_arith(z, z, ArithOp::sub).is_zero());
}

TEST_CASE("canonical form") {
  Scalar z = Scalar::z();
  Scalar a = (z * z - 1) / (2 * z - 2);
  CHECK(a.den() == Poly(Rational(1)));
  CHECK(a == (z + 1) / 2);
  Scalar b = Scalar(3) / (3 * z * z);
  CHECK(b.den().leading() == 1);
  CHECK(b.is_laurent());
  CHECK(b == z.pow(-2));
}

TEST_CASE("qnum and qnum_sym") {
  Scalar z = Scalar::z();
  CHECK(qnum(0).is_zero());
  CHECK(qnum(3) == 1 + z + z * z);
  CHECK(qnum(-1) == -z.inverse());
  CHECK(qnum_sym(1) == Scalar(1));
  CHECK(qnum_sym(2) == z + z.inverse());
  CHECK(qnum_sym(0).is_zero());
  for (int m = -10; m <= 10; ++m) CHECK(qnum(m).eval_at(1) == m);
  for (int m = 1; m <= 6; ++m) CHECK(qnum_sym(m) == z.pow(1 - m) * qnum(2 * m) / qnum(2));
}

TEST_CASE("eval_at") {
  Scalar z = Scalar::z();
  CHECK(((z * z + 1) / z).eval_at(2) == Rational(5, 2));
  CHECK(qnum(3).eval_at(1) == 3);
  CHECK_THROWS_AS((Scalar(1) / (z - 1)).eval_at(1), PoleError);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("printing") {
  Scalar z = Scalar::z();
  CHECK((z * z - Scalar(Rational(3, 2)) * z + 1).to_string() == "q^2 - 3/2*q + 1");
  CHECK((z + z.inverse()).to_string() == "q + q^-1");
  CHECK((Scalar(1) / (z - 1)).to_string() == "1/(q - 1)");
  CHECK(Scalar(-2).to_string() == "-2");
  CHECK(Scalar().to_string() == "0");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS(parse_rational("x"));
}
