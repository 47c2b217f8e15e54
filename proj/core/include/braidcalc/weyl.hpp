#pragma once

// Weyl-type algebras: a coordinate algebra A, a derivative algebra B and
// permutation rules "b a -> ..." that move derivatives to the right. The
// action of a derivative word on an element of A is normal ordering followed
// by the counit of B.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcalc/condition.hpp"
#include "braidcalc/jacobi.hpp"
#include "braidcalc/rewrite.hpp"

namespace braidcalc {

// Letters of the combined alphabet: A's generators first, then B's.
struct WeylPresentation {
  AlgebraPresentation A;
  AlgebraPresentation B;
  // rules[{b, a}] (B index, A index) = replacement of the word "b a" over the
  // combined alphabet.
  std::map<std::pair<int, int>, Tensor> rules;

  int na() const { return A.size(); }
  int nb() const { return B.size(); }
  int b_letter(int j) const { return na() + j; }
  bool is_b(int letter) const { return letter >= na(); }
  std::vector<std::string> names() const;
  LetterNamer namer() const { return index_namer(names()); }
  // The whole algebra as one quadratic-linear-constant presentation.
  AlgebraPresentation combined() const;
  // Throws Error on a missing rule or an undeclared letter.
  void validate() const;
};

/// Memoizing normal-order engine for one presentation.
class WeylEngine {
 public:
  explicit WeylEngine(WeylPresentation w);
  const WeylPresentation& presentation() const { return w_; }

  // Every output word lists A-letters before B-letters.
  Tensor normal_order(const Word& mixed);
  Tensor normal_order(const Tensor& mixed);
  // dword over B indices, f over A indices; result over A indices.
  Tensor apply(const Word& dword, const Tensor& f);
  // f reduced modulo the relations of A (completed to the given degree).
  Tensor reduce_a(const Tensor& f);

 private:
  WeylPresentation w_;
  std::map<Word, Tensor, WordLess> memo_;
  std::optional<RewriteSystem> a_rules_;
};

Tensor normal_order(const WeylPresentation& w, const Word& mixed);
Tensor apply_derivative(const WeylPresentation& w, const Word& dword, const Tensor& f);

// (1) every B-generator kills every relation of A modulo A; (2) every
// relation of B acts as zero on A-words of length <= max_degree.
ConditionReport check_representation(const WeylPresentation& w, int max_degree = 3);
// For `samples` random triples (relation r of A, A-words u, v) with
// |u| + |v| <= extra, every B-generator maps u r v to zero modulo A.
ConditionReport check_representation_spot(const WeylPresentation& w, int samples, int extra, unsigned seed);

// Drops the given B-generators (sets them to zero): they leave B and every
// rule term containing them is discarded.
WeylPresentation kill_derivatives(const WeylPresentation& w, const std::vector<int>& b_indices);

BracketData weyl_bracket_data(const WeylPresentation& w);

/// Structure constants: c[i][j][k] = c_{i,j}^k with [x_i, x_j] = c x_k, and
/// b[p][i][k] = b^p_{i,k} with [d^p, x_i] = b^p_{i,k} d^k + delta.
struct StructureConstants {
  int n = 0;
  std::vector<Scalar> c, b;
  Scalar& C(int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  Scalar& Bc(int p, int i, int k) { return b[static_cast<std::size_t>((p * n + i) * n + k)]; }
  const Scalar& C(int i, int j, int k) const { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const Scalar& Bc(int p, int i, int k) const { return b[static_cast<std::size_t>((p * n + i) * n + k)]; }
  explicit StructureConstants(int size = 0);
};

// c_{ij}^k b_{kl}^p = b_{ik}^p b_{jl}^k - b_{jk}^p b_{il}^k and
// c_{ij}^p = b_{ij}^p - b_{ji}^p for all indices.
ConditionReport check_weyl_jacobi(const StructureConstants& s);

// gl(m)_hbar. Generators n_i^j, derivatives d_i^j (letter i*m + j).
enum class GlRules { coproduct, verbatim };
AlgebraPresentation gl_presentation(int m, const Scalar& hbar);
WeylPresentation gl_weyl(int m, const Scalar& hbar, GlRules rules = GlRules::coproduct);
// The circle-product Leibniz rule on an A-word.
Tensor gl_circle_action(int m, const Scalar& hbar, int i, int j, const Word& word);

struct GlComparison {
  Word deriv;  // single derivative letter
  Word word;
  Tensor coproduct, circle, verbatim;
  bool coproduct_eq_circle() const { return coproduct == circle; }
  bool verbatim_eq_coproduct() const { return verbatim == coproduct; }
};
std::vector<GlComparison> compare_gl_actions(int m, const std::vector<Word>& sample, const Scalar& hbar);

// u(2)_hbar with generators t, x, y, z and derivatives dt, dx, dy, dz.
WeylPresentation u2_weyl(const Scalar& hbar);
StructureConstants u2_constants(const Scalar& hbar);

// Two-dimensional commutative algebra {t, x} with
//   dt t - t dt = 1 + a1 dt + b1 dx,  dt x - x dt = a2 dt + b2 dx,
//   dx t - t dx = c1 dt + d1 dx,      dx x - x dx = 1 + c2 dt + d2 dx.
struct Family2d {
  Scalar a1, b1, c1, d1, a2, b2, c2, d2;
  std::vector<Scalar> values() const { return {a1, b1, c1, d1, a2, b2, c2, d2}; }
};
WeylPresentation weyl_2d(const Family2d& f);
// All tuples over the grid whose Weyl data passes check_bg.
std::vector<Family2d> scan_2d_weyl_families(const std::vector<Scalar>& grid);

// d_q x - q x d_q = 1 on one generator.
WeylPresentation jackson_weyl();

/// Polynomial in one variable with coefficients in Q(i).
class GaussPoly {
 public:
  struct Coeff {
    Rational re, im;
  };
  GaussPoly() = default;
  static GaussPoly from_rational(const std::vector<Rational>& coeffs);
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  // f(v + s) for a shift s in Q(i).
  GaussPoly shifted(const Coeff& s) const;
  GaussPoly operator+(const GaussPoly& o) const;
  GaussPoly operator-(const GaussPoly& o) const;
  GaussPoly times(const Coeff& s) const;
  GaussPoly operator*(const GaussPoly& o) const;
  bool is_real() const;
  std::vector<Rational> real_part() const;

 private:
  std::vector<Coeff> c_;
  void trim();
};

// The shift operators A(f) and B(f) of the su(2) derivative formula.
GaussPoly shift_a(const GaussPoly& f, const Rational& hbar);
GaussPoly shift_b(const GaussPoly& f, const Rational& hbar);

enum class Axis { x, y, z };
// d^axis applied to the ordered product f1(u) f2(v) f3(w), where (u, v, w)
// is the cyclic order starting at the axis. Result over the u(2) alphabet
// (t = 0, x = 1, y = 2, z = 3). Throws Error on an imaginary residue.
Tensor su2_derivative(Axis axis, const std::vector<Rational>& f1, const std::vector<Rational>& f2,
                      const std::vector<Rational>& f3, const Rational& hbar);

// su2_derivative against the u(2) action on random ordered monomials of
// degree <= max_degree: equal modulo the relations and free of t.
ConditionReport su2_closed_form_check(int samples, unsigned seed, const Rational& hbar, int max_degree = 4);

}  // namespace braidcalc
