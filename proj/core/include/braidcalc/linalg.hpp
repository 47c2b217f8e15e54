#pragma once

// Words, tensors and subspaces of homogeneous components of a free tensor
// algebra. Words are ordered degree-lexicographically: shorter words first,
// then lexicographically by letter index.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcalc/matrix.hpp"
#include "braidcalc/scalar.hpp"

namespace braidcalc {

using Word = std::vector<int>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);

// Maps a letter to its printed name.
using LetterNamer = std::function<std::string(int)>;
LetterNamer index_namer(const std::vector<std::string>& names);

class Tensor {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  Tensor() = default;
  Tensor(const Word& w, const Scalar& c = Scalar(1));
  static Tensor constant(const Scalar& c) { return Tensor(Word{}, c); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  // Greatest word; the tensor must be nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
  // Common word length, or nullopt when empty or mixed.
  std::optional<int> degree() const;
  int max_degree() const;
  // Homogeneous component of the given length.
  Tensor component(int degree) const;

  void add(const Word& w, const Scalar& c);
  void add_scaled(const Tensor& t, const Scalar& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor operator-() const;
  Tensor scaled(const Scalar& c) const;
  // Concatenation product.
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  bool operator==(const Tensor& o) const = default;

  // Apply a scalar map to each coefficient, dropping zeros.
  Tensor map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  // Highest word first, e.g. "2n + 1" or "(q + 1) x y - z".
  std::string to_string(const LetterNamer& name, std::string_view var = "q") const;

 private:
  Terms terms_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);
std::vector<Word> all_words(int alphabet_size, int length);

/// Reduced echelon basis of a subspace of the degree-k component. Rows are
/// sorted by pivot (greatest word, coefficient 1), and every pivot is absent
/// from the other rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Tensor>& basis() const { return rows_; }
  const Word& pivot(std::size_t i) const { return rows_[i].leading_word(); }
  // Index of the row with this pivot, or -1.
  int pivot_index(const Word& w) const;

  // Remainder of t modulo the subspace (zero iff t is a member).
  Tensor reduce(const Tensor& t) const;
  // Coordinates of a member t in terms of basis(); nullopt for non-members.
  std::optional<std::vector<Scalar>> coordinates(const Tensor& t) const;
  bool contains(const Tensor& t) const { return reduce(t).is_zero(); }
  // Inserts t; returns false when t was already in the span.
  bool insert(const Tensor& t);

  bool operator==(const Subspace& o) const { return degree_ == o.degree_ && rows_ == o.rows_; }

  // Internal: adopt rows already in reduced echelon form.
  static Subspace from_reduced(int degree, std::vector<Tensor> rows);

 private:
  int degree_ = 0;
  std::vector<Tensor> rows_;
  std::map<Word, std::size_t, WordLess> pivots_;
  void reindex();
};

// Throws Error on inhomogeneous input or a vector of another degree.
Subspace echelonize(const std::vector<Tensor>& vectors, int degree);
bool member(const Subspace& s, const Tensor& t);
Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// U^{left} (x) s (x) U^{right} over an alphabet of the given size.
Subspace embed(const Subspace& s, int alphabet_size, int left, int right);
// I^(k): intersection of U^i (x) I (x) U^{k-2-i} for i = 0..k-2.
Subspace iterated_intersection(const Subspace& I, int alphabet_size, int k);

// Pairing of generators with dual letters: <gen, dual>.
using LetterPairing = std::function<Scalar(int gen, int dual)>;
// <x1..xk, y1..yk> = prod_i <x_i, y_{k+1-i}>.
Scalar dual_pairing(const Tensor& t, const Tensor& s, const LetterPairing& pair);
// Subspace of span(dual words of degree s.degree()) orthogonal to s.
Subspace orthogonal_complement(const Subspace& s, const std::vector<int>& dual_letters, const LetterPairing& pair);

/// Linear map on a subspace, stored as one image per basis row.
struct LinMap {
  Subspace domain;
  std::vector<Tensor> images;
  // Throws Error when t lies outside the domain.
  Tensor apply(const Tensor& t) const;
};

}  // namespace braidcalc
