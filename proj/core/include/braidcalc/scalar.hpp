#pragma once

// Exact arithmetic over Q and the univariate rational function field Q(z).
//
// A Scalar is kept in a canonical form (coprime numerator and monic
// denominator), so two Scalars are equal exactly when their representations
// are equal. The single symbolic variable z stands for q, t or hbar depending
// on the caller.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
// Accepts "3", "-3/4" and decimal forms like "1.25".
Rational parse_rational(std::string_view text);

/// Dense polynomial in z with rational coefficients, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  static Poly monomial(Rational c, int exponent);
  static Poly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monomial() const;
  // Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const Rational& coeff(int exponent) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  // Multiply by z^k; negative k requires valuation() >= -k.
  Poly shifted(int k) const;
  Poly monic() const;

  Rational eval(const Rational& at) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  // Quotient and remainder; throws DivisionByZero on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Exact quotient; the caller guarantees b divides a.
  friend Poly exact_div(const Poly& a, const Poly& b);
  // Monic gcd (zero iff both inputs are zero).
  friend Poly gcd(const Poly& a, const Poly& b);

  std::string to_string(std::string_view var) const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
  Scalar(Rational v);  // NOLINT
  explicit Scalar(Poly p);
  static Scalar fraction(Poly num, Poly den);
  // The symbolic variable z.
  static Scalar z();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  Rational constant() const;
  bool is_laurent() const { return den_.is_monomial(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const = default;

  Scalar inverse() const;
  Scalar pow(int e) const;
  // Exact evaluation at a rational point; throws PoleError at a pole.
  Rational eval_at(const Rational& point) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  Poly num_;
  Poly den_{Rational(1)};
  void normalize();
};

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// (z^m - 1)/(z - 1), defined for every integer m.
Scalar qnum(int m);
/// (z^m - z^-m)/(z - z^-1).
Scalar qnum_sym(int m);

}  // namespace braidcalc
