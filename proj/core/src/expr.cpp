#include "braidcalc/expr.hpp"

#include <cctype>

namespace braidcalc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprEnv& env) : s_(text), env_(env) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  std::string_view s_;
  const ExprEnv& env_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    Scalar b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t digits = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (digits == pos_) fail("expected integer exponent");
      if (pos_ - digits > 6) throw ParseError("exponent too large", start);
      int e = std::stoi(std::string(s_.substr(digits, pos_ - digits)));
      if (neg) {
        if (b.is_zero()) throw ParseError("division by zero", start);
        e = -e;
      }
      return b.pow(e);
    }
    return b;
  }

  Scalar base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      std::string_view lit = s_.substr(start, pos_ - start);
      if (lit == ".") throw ParseError("malformed number", start);
      return Scalar(parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == env_.symbol) return Scalar::z();
      auto it = env_.parameters.find(id);
      if (it == env_.parameters.end()) throw ParseError("unbound identifier '" + id + "'", start);
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Scalar parse_scalar_expr(std::string_view text, const ExprEnv& env) { return Parser(text, env).run(); }

}  // namespace braidcalc
