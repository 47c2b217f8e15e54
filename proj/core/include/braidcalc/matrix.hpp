#pragma once

// Dense matrices over Q(z). Sizes in this library stay small (at most a few
// hundred rows), so plain Gaussian elimination is adequate.

#include <optional>
#include <string>
#include <vector>

#include "braidcalc/scalar.hpp"

namespace braidcalc {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix scalar(int n, const Scalar& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const = default;
  bool is_zero() const;
  Scalar trace() const;

  // Reduced row echelon form; pivot columns are appended to *pivots if given.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Throws Error("singular matrix") when not invertible.
  Matrix inverse() const;
  // Some X with (*this) X = b, or nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;
  // Basis of {v : (*this) v = 0}, one column vector per entry.
  std::vector<std::vector<Scalar>> nullspace() const;
  // Evaluate every entry at z = point.
  Matrix eval_at(const Rational& point) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace braidcalc
