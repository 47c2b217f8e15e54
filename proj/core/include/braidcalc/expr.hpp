#pragma once

// Scalar expression parser.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' signed-integer)?
//   base   := rational-literal | identifier | '(' expr ')' | '-' factor
//
// Literals are integers or decimals. Identifiers resolve to the symbolic
// variable or a bound parameter.

#include <map>
#include <string>
#include <string_view>

#include "braidcalc/scalar.hpp"

namespace braidcalc {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ExprEnv {
  std::string symbol = "q";
  std::map<std::string, Scalar> parameters;
};

Scalar parse_scalar_expr(std::string_view text, const ExprEnv& env = {});

}  // namespace braidcalc
