#include <random>

#include "braidcalc/presentation.hpp"
#include "doctest.h"

using namespace braidcalc;

namespace {

const char* kJackson = R"json({
  "name": "jackson",
  "generators": ["em", "e0", "e1"],
  "relations": [
    {"quadratic": [{"word": ["em", "e0"], "coeff": "1"}, {"word": ["e0", "em"], "coeff": "-q"}],
     "linear": [{"word": ["em"], "coeff": "-1"}]},
    {"quadratic": [{"word": ["em", "e1"], "coeff": "1"}, {"word": ["e1", "em"], "coeff": "-q^2"}],
     "linear": [{"word": ["e0"], "coeff": "-(1+q)"}]},
    {"quadratic": [{"word": ["e0", "e1"], "coeff": "1"}, {"word": ["e1", "e0"], "coeff": "-q"}],
     "linear": [{"word": ["e1"], "coeff": "-1"}]}
  ]
})json";

}  // namespace

TEST_CASE("parse_scalar_expr examples") {
  Scalar q = Scalar::z();
  CHECK(parse_scalar_expr("q^2 + 1/q") == (q.pow(3) + 1) / q);
  CHECK(parse_scalar_expr("-(q-1/q)") == (1 - q * q) / q);
  ExprEnv env;
  env.parameters["a"] = Scalar(Rational(3, 2));
  CHECK(parse_scalar_expr("a*q", env) == Scalar(Rational(3, 2)) * q);
  CHECK(parse_scalar_expr("2^-2") == Scalar(Rational(1, 4)));
  CHECK(parse_scalar_expr("-q^2") == -(q * q));
  CHECK(parse_scalar_expr("1.5") == Scalar(Rational(3, 2)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_scalar_expr("1 + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_scalar_expr("b + 1"), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("1/(q-q)"), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("(1"), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr(""), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("0^-1"), ParseError);
}

TEST_CASE("random token streams never escape as non-Error exceptions") {
  const char* tokens[] = {"q", "1", "2.5", "+", "-", "*", "/", "^", "(", ")", "a", " ", "0", "^-2", "."};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 14), len(1, 8);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += tokens[pick(rng)];
    try {
      parse_scalar_expr(s);
      ++parsed;
    } catch (const Error&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 2000);
  CHECK(parsed > 0);
}

TEST_CASE("printed scalars reparse") {
  Scalar q = Scalar::z();
  for (Scalar s : {q + q.inverse(), (q * q + 1) / (q - 1), Scalar(Rational(-3, 2)) * q, q / (q * q + 2),
                   (q - 1) / (2 * q + 1), -q.pow(-3)}) {
    CHECK(parse_scalar_expr(s.to_string()) == s);
  }
}

TEST_CASE("algebra file parsing") {
  auto p = parse_algebra_json(kJackson);
  CHECK(p.size() == 3);
  CHECK(p.relations.size() == 3);
  CHECK(p.quadratic_space().dim() == 3);
  CHECK(p.relations[1].linear == Tensor(Word{1}, -(1 + Scalar::z())));
  auto again = parse_algebra_json(serialize_algebra(p));
  CHECK(again == p);
  CHECK(serialize_algebra(again) == serialize_algebra(p));
}

TEST_CASE("algebra file errors") {
  CHECK_THROWS(parse_algebra_json(R"({"name":"x","generators":["x"],"relations":[
      {"quadratic":[{"word":["x","y"],"coeff":"1"}]}]})"));
  CHECK_THROWS(parse_algebra_json(R"({"name":"x","generators":["x"],"extra":1})"));
  CHECK_THROWS(parse_algebra_json(R"({"name":"x","generators":["x"],"relations":[
      {"quadratic":[{"word":["x"],"coeff":"1"}]}]})"));
  CHECK_THROWS(parse_algebra_json("{not json"));
  CHECK_THROWS(parse_algebra_json(R"({"name":"x","generators":["x"],"relations":[
      {"quadratic":[{"word":["x","x"],"coeff":"q-q"}]}]})"));
}

TEST_CASE("parameters specialize at parse time") {
  auto p = parse_algebra_json(R"({"name":"p","parameters":{"a":"3/2"},"generators":["x","y"],
      "relations":[{"quadratic":[{"word":["x","y"],"coeff":"1"},{"word":["y","x"],"coeff":"-a"}]}]})");
  CHECK(p.relations[0].quadratic.coeff(Word{1, 0}) == Scalar(Rational(-3, 2)));
  CHECK(parse_algebra_json(serialize_algebra(p)) == p);
}
