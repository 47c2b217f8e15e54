#include "braidcalc/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace braidcalc {

namespace {
// Function-local so that namespace-scope Scalars in other translation units
// can be initialized safely.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("invalid rational literal '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw DivisionByZero();
    return r;
  }
  std::string intpart = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.empty() && intpart.empty()) throw Error("invalid rational literal '" + s + "'");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("invalid rational literal '" + s + "'");
  std::string digits = intpart + frac;
  if (digits.empty() || digits == "-" || digits == "+") throw Error("invalid rational literal '" + s + "'");
  if (digits[0] == '+') digits.erase(0, 1);
  mpz_class numer;
  if (numer.set_str(digits, 10) != 0) throw Error("invalid rational literal '" + s + "'");
  mpz_class denom = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
  Rational r(numer, denom);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(Rational c) {
  c.canonicalize();
  if (c != 0) coeffs_.push_back(std::move(c));
}

Poly Poly::monomial(Rational c, int exponent) {
  Poly p;
  c.canonicalize();
  if (c == 0) return p;
  if (exponent < 0) throw Error("negative exponent in Poly::monomial");
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, zero_q());
  p.coeffs_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

const Rational& Poly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return zero_q();
  return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rational& Poly::leading() const { return coeffs_.empty() ? zero_q() : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_q());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_q());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, zero_q());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), zero_q());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  if (valuation() < -k) throw Error("Poly::shifted: not divisible by z^" + std::to_string(-k));
  r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return scaled(inv);
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly rem(a);
  Poly quo;
  int db = b.degree();
  if (rem.degree() < db) return {quo, rem};
  quo.coeffs_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, zero_q());
  Rational inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Rational c = rem.leading() * inv;
    quo.coeffs_[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) rem.coeffs_[static_cast<std::size_t>(i + shift)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a.scaled(1 / b.leading());
  return divmod(a, b).first;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

std::string coeff_prefix(const Rational& c, bool has_var) {
  // Absolute value prefix for a term; sign handled by the caller.
  Rational a = abs(c);
  if (!has_var) return to_string(a);
  if (a == 1) return "";
  return to_string(a) + "*";
}

std::string var_power(std::string_view var, int e) {
  if (e == 0) return "";
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Renders sum c_e * var^(e + offset) in descending exponent order.
std::string render_terms(const Poly& p, std::string_view var, int offset) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const Rational& c = p.coeff(e);
    if (c == 0) continue;
    int ex = e + offset;
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += coeff_prefix(c, ex != 0);
    out += var_power(var, ex);
    first = false;
  }
  return out;
}

}  // namespace

std::string Poly::to_string(std::string_view var) const { return render_terms(*this, var, 0); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long v) : num_(Rational(v)) {}
Scalar::Scalar(Rational v) : num_(std::move(v)) {}
Scalar::Scalar(Poly p) : num_(std::move(p)) {}

Scalar Scalar::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

Scalar Scalar::z() { return Scalar(Poly::variable()); }

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    int d = den_.degree();
    Rational c = den_.leading();
    int v = std::min(num_.valuation(), d);
    if (v > 0) num_ = num_.shifted(-v);
    if (c != 1) num_ = num_.scaled(1 / c);
    den_ = Poly::monomial(Rational(1), d - v);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Rational& lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational Scalar::constant() const { return num_.leading() / den_.leading(); }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Poly(Rational(1));
    return *this;
  }
  if (den_.is_monomial() && o.den_.is_monomial()) {
    int a = den_.degree(), b = o.den_.degree();
    int m = std::max(a, b);
    num_ = num_.shifted(m - a) + o.num_.shifted(m - b);
    den_ = Poly::monomial(Rational(1), m);
    normalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly d1 = exact_div(den_, g);
  Poly d2 = exact_div(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_monomial() && o.den_.is_monomial()) {
    num_ = num_ * o.num_;
    den_ = Poly::monomial(Rational(1), den_.degree() + o.den_.degree());
    normalize();
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  const Rational lc = d.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar::fraction(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1L);
  Scalar base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational Scalar::eval_at(const Rational& point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw PoleError("pole of " + to_string() + " at " + braidcalc::to_string(point));
  return num_.eval(point) / d;
}

std::string Scalar::to_string(std::string_view var) const {
  if (den_.is_constant()) return render_terms(num_, var, 0);
  if (den_.is_monomial()) return render_terms(num_, var, -den_.degree());
  std::string n = render_terms(num_, var, 0);
  bool n_simple = num_.is_monomial() && num_.leading() > 0 && num_.leading() == 1;
  if (!n_simple) n = "(" + n + ")";
  return n + "/(" + render_terms(den_, var, 0) + ")";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

Scalar qnum(int m) {
  // (z^m - 1)/(z - 1) as a Laurent polynomial.
  if (m == 0) return Scalar();
  Scalar s;
  if (m > 0) {
    for (int k = 0; k < m; ++k) s += Scalar::z().pow(k);
  } else {
    for (int k = m; k < 0; ++k) s -= Scalar::z().pow(k);
  }
  return s;
}

Scalar qnum_sym(int m) {
  if (m == 0) return Scalar();
  Scalar z = Scalar::z();
  return (z.pow(m) - z.pow(-m)) / (z - z.inverse());
}

}  // namespace braidcalc
