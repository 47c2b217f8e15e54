#include "braidcalc/matrix.hpp"

#include <algorithm>
#include <utility>

namespace braidcalc {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(int n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(int n, const Scalar& s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix size mismatch in *");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& x : r.data_)
    if (!x.is_zero()) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m(*this);
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    // Prefer a constant pivot: cheaper elimination over Q(z).
    int pick = -1;
    for (int r = row; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      if (pick < 0) pick = r;
      if (m(r, col).is_constant()) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    if (pick != row)
      for (int c = 0; c < cols_; ++c) std::swap(m(pick, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < cols_; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < cols_; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  int n = rows_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar(1);
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) throw Error("singular matrix");
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = red(i, n + j);
  return r;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw Error("matrix size mismatch in solve");
  Matrix aug(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols_; ++j) aug(i, cols_ + j) = b(i, j);
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  Matrix x(cols_, b.cols_);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    int pc = piv[r];
    if (pc >= cols_) return std::nullopt;
    for (int j = 0; j < b.cols_; ++j) x(pc, j) = red(static_cast<int>(r), cols_ + j);
  }
  return x;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  std::vector<int> piv;
  Matrix red = rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(free)] = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[static_cast<std::size_t>(piv[r])] = -red(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::eval_at(const Rational& point) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = Scalar(data_[i].eval_at(point));
  return r;
}

std::string Matrix::to_string(std::string_view var) const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string(var);
    }
    s += "]\n";
  }
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

}  // namespace braidcalc
