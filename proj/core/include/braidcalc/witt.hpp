#pragma once

// Difference derivatives on K[x, x^-1], the Witt-type operators
// e_k = x^(k+1) d_q, the q-Witt bracket and its Jacobi-PP test, the
// hbar-Witt variant and the Jackson sl(2) algebra.
//
// Witt tensors use the index k itself as the letter of e_k, so letters may
// be negative.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidcalc/condition.hpp"
#include "braidcalc/jacobi.hpp"
#include "braidcalc/presentation.hpp"

namespace braidcalc {

/// Finite sum of c_k x^k, k in Z, with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long k, const Scalar& c = 1);
  static LaurentPoly x() { return monomial(1); }
  static LaurentPoly constant(const Scalar& c) { return monomial(0, c); }

  const std::map<long, Scalar>& terms() const { return terms_; }
  Scalar coeff(long k) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
  long max_exponent() const;

  void add(long k, const Scalar& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Scalar& c) const;
  // Multiply by x^k.
  LaurentPoly shifted(long k) const;
  bool operator==(const LaurentPoly& o) const = default;

  // f(s x)
  LaurentPoly dilate(const Scalar& s) const;
  // f(s x + b); polynomials only when b != 0.
  LaurentPoly affine(const Scalar& s, const Scalar& b) const;
  // Exact quotient by a polynomial; throws Error on a nonzero remainder.
  LaurentPoly divide(const LaurentPoly& d) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  std::map<long, Scalar> terms_;
};

// k_q = (q^k - 1)/(q - 1) for any integer k and any value of q.
Scalar q_integer(long k, const Scalar& q = Scalar::z());

// (f(qx) - f(x)) / ((q - 1) x)
LaurentPoly q_derivative(const LaurentPoly& f, const Scalar& q = Scalar::z());
// (f(x + h) - f(x)) / h on polynomials.
LaurentPoly h_derivative(const LaurentPoly& f, const Scalar& h);
// (f(qx + h) - f(x)) / ((q - 1) x + h) on polynomials.
LaurentPoly qh_derivative(const LaurentPoly& f, const Scalar& h, const Scalar& q = Scalar::z());
// (f(qx) - f(q^-1 x)) / ((q - q^-1) x)
LaurentPoly tilde_q_derivative(const LaurentPoly& f, const Scalar& q = Scalar::z());
// (f(x + h) - f(x - h)) / (2h) on polynomials.
LaurentPoly tilde_h_derivative(const LaurentPoly& f, const Scalar& h);

// Random polynomial of degree <= max_degree with small integer coefficients.
LaurentPoly random_polynomial(std::mt19937& rng, int max_degree);
LaurentPoly random_laurent(std::mt19937& rng, int radius);

// Permutation relations as operator identities on the given inputs:
//   "perm.q"   d_q x - q x d_q = 1
//   "perm.h"   d_h x - x d_h = 1 + h d_h
//   "perm.qh"  d_qh x - q x d_qh = 1 + h d_qh
ConditionReport q_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& q = Scalar::z());
ConditionReport h_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& h);
ConditionReport qh_permutation_check(const std::vector<LaurentPoly>& fs, const Scalar& h,
                                     const Scalar& q = Scalar::z());
// d_qh = S_c d_q S_-c with (S_c f)(x) = f(x + c), c = h/(q - 1), and the d_q
// relation rewritten in the shifted generator is the d_qh relation.
ConditionReport qh_conjugation_check(const std::vector<LaurentPoly>& fs, const Scalar& h,
                                     const Scalar& q = Scalar::z());

// e_k(f) = x^(k+1) d_q(f)
LaurentPoly witt_apply(long k, const LaurentPoly& f, const Scalar& q = Scalar::z());
// q^(m+s) e_m e_n - q^(n+s) e_n e_m - ((n+1)_q - (m+1)_q) e_(m+n) on x^j,
// |j| <= bound, with s = 1 for the actual relation.
ConditionReport witt_relation_check(long m, long n, long bound, int shift = 1, const Scalar& q = Scalar::z());

using WittElement = std::map<long, Scalar>;

/// The Witt-type structure w_k e_k e_l - w_l e_l e_k = f(k, l) e_(k+l).
struct WittStructure {
  enum class Kind { q, h } kind = Kind::q;
  Scalar param = Scalar::z();

  Scalar weight(long k) const;
  Scalar bracket(long k, long l) const;
  std::string name() const { return kind == Kind::q ? "qwitt" : "hwitt"; }
};
// w_k = q^(k+1), f(k, l) = (l+1)_q - (k+1)_q.
WittStructure qwitt(const Scalar& q = Scalar::z());
// w_k = t^k, f(k, l) = t^l - t^k (t = exp(i hbar), 1/hbar absorbed).
WittStructure hwitt(const Scalar& t = Scalar::z());

WittElement witt_bracket(const WittElement& a, const WittElement& b, const WittStructure& s = qwitt());
WittElement qwitt_bracket(const WittElement& a, const WittElement& b, const Scalar& q = Scalar::z());
WittElement witt_e(long k, const Scalar& c = 1);
// (1 + q^k)[e_k, [e_l, e_m]] + cyclic
WittElement qwitt_jacobiator(long k, long l, long m, const Scalar& q = Scalar::z());

LetterNamer witt_namer();

// w_l w_m (w_l e_l e_m - w_m e_m e_l) e_k + cyclic, in I (x) U.
Tensor witt_Z(long k, long l, long m, const WittStructure& s = qwitt());
// w_m^2 e_m (w_k e_k e_l - w_l e_l e_k) + cyclic, in U (x) I.
Tensor witt_Z_right(long k, long l, long m, const WittStructure& s = qwitt());

// Support-local membership in I = span(w_a e_a e_b - w_b e_b e_a) and the
// bracket on it; nullopt when t is not in I.
bool witt_in_I(const Tensor& t, const WittStructure& s);
std::optional<Tensor> witt_alpha(const Tensor& t, const WittStructure& s);
std::optional<Tensor> witt_alpha_12(const Tensor& t, const WittStructure& s);
std::optional<Tensor> witt_alpha_23(const Tensor& t, const WittStructure& s);

// PP condition 1 on Z(k, l, m): ([,]_12 - [,]_23) Z must lie in I. The
// verdict is inconclusive unless k, l, m, k+l, k+m, l+m are pairwise
// distinct. On failure the witness is the difference restricted to the first
// offending pair {k, l+m}, {l, m+k}, {m, k+l}.
ConditionReport witt_pp_check(long k, long l, long m, const WittStructure& s = qwitt());
bool witt_indices_distinct(long k, long l, long m);

// Every triple in [lo, hi]^3 with pairwise distinct index sums fails
// condition 1 at symbolic q and passes at q = 1.
ConditionReport qwitt_pp_scan(long lo, long hi);
// witt_relation_check for all m, n in [lo, hi].
ConditionReport witt_relation_scan(long lo, long hi, long bound);
// q-skew-symmetry and the q-Jacobi relation on random triples in
// [-radius, radius].
ConditionReport qwitt_identities_check(int samples, unsigned seed, long radius = 5);

// Quadratic-linear presentation on e_lo..e_hi. Linear terms e_(k+l) outside
// the range are dropped, which is the quotient by the span of those e_j when
// the range is an upper segment of the positive indices.
AlgebraPresentation witt_presentation(long lo, long hi, const WittStructure& s = qwitt());
// hbar-Witt data on e_1..e_K.
BracketData hwitt_data(long K, const Scalar& t = Scalar::z());

// e_-1 e_0 - q e_0 e_-1 = e_-1, e_-1 e_1 - q^2 e_1 e_-1 = (1+q) e_0,
// e_0 e_1 - q e_1 e_0 = e_1.
AlgebraPresentation jackson_sl2(const Scalar& q = Scalar::z());
// The relations with e_k = x^(k+1) d_q on x^s, |s| <= bound.
ConditionReport jackson_operator_check(long bound = 6, const Scalar& q = Scalar::z());
// Operator check, Jacobi-PP, and PBW dims through degree 4.
std::vector<ConditionReport> jackson_sl2_suite(const Scalar& q = Scalar::z());

}  // namespace braidcalc
