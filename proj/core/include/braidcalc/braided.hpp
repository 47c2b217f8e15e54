#pragma once

// Braidings on V (x) V, the skew-inverse operator, the modified reflection
// equation algebra, its Weyl algebra, the exterior algebra and the de Rham
// operator.
//
// Conventions: V (x) V has basis e_i (x) e_k at index i*m + k, and
// R(i*m + k, j*m + l) = R_{ik}^{jl}. Operators on k sites use the same
// row-major multi-index, site 0 most significant. Matrix generators
// n_i^j, d_i^j and om_i^j all use the letter i*m + j in their own alphabets.

#include <optional>
#include <string>
#include <vector>

#include "braidcalc/condition.hpp"
#include "braidcalc/matrix.hpp"
#include "braidcalc/presentation.hpp"
#include "braidcalc/rewrite.hpp"
#include "braidcalc/weyl.hpp"

namespace braidcalc {

enum class BraidingKind { hecke, involutive };

struct Braiding {
  int m = 0;
  Matrix R;
  BraidingKind kind = BraidingKind::involutive;
  std::string name;
};

Braiding standard_hecke(int m);
Braiding flip(int m);
// gl(p|n) flip: e_i (x) e_k -> (-1)^{|i||k|} e_k (x) e_i, |i| = 1 for i >= p.
Braiding super_flip(int p, int n);
Matrix flip_matrix(int m);

// op acts on the listed sites of a k-site space.
Matrix embed(const Matrix& op, int m, const std::vector<int>& sites, int k);
// Trace over one site of a k-site operator.
Matrix partial_trace(const Matrix& op, int m, int site, int k);

ConditionReport check_braid(const Braiding& b);
ConditionReport check_hecke(const Braiding& b);
ConditionReport check_involutive(const Braiding& b);

struct SkewInverseData {
  Matrix Psi;  // on V (x) V
  Matrix B;    // Tr_1 Psi_12
  Matrix C;    // Tr_2 Psi_12
};

// Throws Error("not skew-invertible") when Tr_2 R_12 Psi_23 = P_13 has no
// solution. The returned data is not yet verified.
SkewInverseData skew_inverse(const Braiding& b);
// def.psi (both traces), BCR, B C = q^-2m I, Tr B = Tr C = q^-m m_q. The
// last two apply to Hecke braidings only.
std::vector<ConditionReport> check_skew_inverse(const Braiding& b, const SkewInverseData& s);

// Psi-hat = Psi_21 + (q - q^-1) q^2m B_1 C_2 (the correction only for Hecke
// braidings, where q is the symbolic variable).
Matrix psi_hat(const Braiding& b, const SkewInverseData& s, bool with_correction = true);
ConditionReport check_psi_hat(const Braiding& b, const SkewInverseData& s);

std::vector<std::string> matrix_generator_names(const std::string& base, int m);

// R N1 R N1 - N1 R N1 R = hbar (R N1 - N1 R), one relation per row of the
// echelonized matrix entries.
AlgebraPresentation mre_presentation(const Braiding& b, const Scalar& hbar);
// R^-1 D1 R^-1 D1 - D1 R^-1 D1 R^-1 = 0 on the letters d_i^j.
AlgebraPresentation derivative_presentation(const Braiding& b);
// D1 R N1 R - R N1 R^-1 D1 = R + hbar D1 R, solved for the products d n.
WeylPresentation braided_weyl(const Braiding& b, const Scalar& hbar);
// d_i^j(n_k^p) = delta_i^p B_k^j on all generator pairs.
ConditionReport check_action_on_generators(const WeylPresentation& w, const SkewInverseData& s);

// Relations R Om1 PsiHat Om1 + Om1 PsiHat Om1 R^-1 = 0 on the letters om_i^j.
AlgebraPresentation ext_algebra(const Braiding& b, const SkewInverseData& s, bool with_correction = true);
// Entries of R N1 R N1 + N1 R N1 R^-1 on the n-letters.
Subspace mre_symmetric_complement(const Braiding& b);

/// A form: omega-word -> coefficient in the mRE algebra.
struct DifferentialForm {
  std::map<Word, Tensor, WordLess> parts;
  bool is_zero() const { return parts.empty(); }
  bool operator==(const DifferentialForm& o) const = default;
};

/// The braided Weyl algebra together with the exterior algebra and the de
/// Rham operator d(om (x) f) = om Om_i^j (x) d_j^i(f).
class BraidedCalculus {
 public:
  BraidedCalculus(Braiding b, const Scalar& hbar);

  const Braiding& braiding() const { return b_; }
  const SkewInverseData& skew() const { return s_; }
  const WeylPresentation& weyl() const { return engine_.presentation(); }
  const AlgebraPresentation& lambda() const { return lambda_; }
  WeylEngine& engine() { return engine_; }

  static DifferentialForm function(const Tensor& f);
  DifferentialForm reduce(const DifferentialForm& w);
  DifferentialForm d(const DifferentialForm& w);
  std::string to_string(const DifferentialForm& w) const;

 private:
  Braiding b_;
  SkewInverseData s_;
  WeylEngine engine_;
  AlgebraPresentation lambda_;
  RewriteSystem lambda_rules_;
};

// <X_12, X*_34> = P_13 P_24 with X = R^-1 D1 R^-1 D1 and X* = Om1 PsiHat Om1 R,
// using <d_i^j, om_k^p> = delta_i^p delta_k^j.
ConditionReport duality_check(const Braiding& b, const SkewInverseData& s, bool with_correction = true);

struct QQData {
  Matrix Q, Qp;          // on the d-words of length 2, acting on row vectors
  Subspace I, Iplus;     // rows of X - Q(X) and X + Q'(X)
};
QQData qq_operators(const Braiding& b);
ConditionReport qq_check(const Braiding& b);

// The element sum u^a u^b (x) u_b u_a vanishes in Lambda^2 (x) Sym^2.
ConditionReport coevaluation_check(const Braiding& b, const SkewInverseData& s);
// The orthogonal complement of the derivative relations is the span of the
// exterior relations.
ConditionReport orthogonality_check(const Braiding& b, const SkewInverseData& s);
// Counit and coassociativity of Delta(N) = N (x) 1 + 1 (x) N - (q - q^-1) N (x) N
// on generators.
ConditionReport coproduct_check(int m);

}  // namespace braidcalc
