#pragma once

// Jacobi-type conditions for a bracket alpha: I -> U (and optional
// beta: I -> K) on a quadratic-linear(-constant) algebra.

#include <optional>
#include <string>
#include <vector>

#include "braidcalc/condition.hpp"
#include "braidcalc/matrix.hpp"
#include "braidcalc/presentation.hpp"

namespace braidcalc {

struct BracketData {
  int alphabet_size = 0;
  std::vector<std::string> names;
  Subspace I;                              // degree 2, reduced echelon
  std::vector<Tensor> alpha;               // alpha(I.basis()[i]), degree 1
  std::optional<std::vector<Scalar>> beta; // beta(I.basis()[i])
  std::optional<Subspace> Iplus;           // complement of I in U (x) U
  std::optional<Subspace> I3;              // cached I^(3)
  // The almost-Lie operators are p * action_scale * [u, v].
  Scalar action_scale = 1;

  LetterNamer namer() const { return index_namer(names); }
  // alpha on an element of I; nullopt when t is not in I.
  std::optional<Tensor> alpha_of(const Tensor& t) const;
  std::optional<Scalar> beta_of(const Tensor& t) const;
  const Subspace& i3();
  // The relations "row - alpha(row) - beta(row)" over the basis of I.
  std::vector<Tensor> relations() const;
};

// I from the quadratic parts, alpha = -linear, beta = -constant (beta is set
// only when some constant part is nonzero).
BracketData bracket_from_presentation(const AlgebraPresentation& p);

// Applies alpha to letters (1,2) (resp. (k-1,k)) of every word of t, which
// must lie in I (x) U^(k-2) (resp. U^(k-2) (x) I). Returns nullopt otherwise.
std::optional<Tensor> alpha_12(const BracketData& d, const Tensor& t);
std::optional<Tensor> alpha_23(const BracketData& d, const Tensor& t);

// PP condition 1 and 2 on I^(3).
std::pair<ConditionReport, ConditionReport> check_pp(BracketData& d);
// Conditions (a), (b), (c) with beta (zero when absent).
std::vector<ConditionReport> check_bg(BracketData& d);

/// The bracket on all of U (x) U, zero on Iplus.
struct ExtendedBracket {
  int n = 0;
  std::vector<Tensor> table;  // table[a * n + b] = [e_a, e_b]
  const Tensor& at(int a, int b) const { return table[static_cast<std::size_t>(a * n + b)]; }
  Tensor apply(const Tensor& t) const;  // degree-2 input
  // Apply to letters (1,2) of each word of any length >= 2.
  Tensor apply_12(const Tensor& t) const;
  Tensor apply_23(const Tensor& t) const;  // letters (k-1, k)
};

// Throws Error with a dimension diagnostic if I + Iplus is not all of U (x) U
// or the sum is not direct.
ExtendedBracket extend_by_zero(const BracketData& d);
ConditionReport check_complement(const BracketData& d);

ConditionReport check_strong(BracketData& d);
// d = alpha_12 on I^(k), k = 3..max_k. Inconclusive unless strong Jacobi holds.
// The detail records whether d(I^(k)) lies in I^(k-1).
ConditionReport chevalley_d_squared(BracketData& d, int max_k);

// Left and right representation conditions at normalizing factor p.
ConditionReport check_almost_lie(const BracketData& d, const Scalar& p);
std::optional<Scalar> solve_p(const BracketData& d);

// Operator of left multiplication by letter u (without p and scale):
// column v holds [u, v].
Matrix left_operator(const ExtendedBracket& b, int u);
Matrix right_operator(const ExtendedBracket& b, int u);

}  // namespace braidcalc
