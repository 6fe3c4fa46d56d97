#pragma once
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"

namespace fanmat::la {

// dense row-major matrix over an exact scalar type (Int or Rat)
template <class T>
class MatrixT {
public:
  MatrixT() = default;
  MatrixT(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

  MatrixT(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(Errc::dimension, "ragged initializer");
      for (long x : row) data_.emplace_back(x);
    }
  }

  static MatrixT identity(std::size_t n) {
    MatrixT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const MatrixT&) const = default;

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  // row a += c * row b
  void addmul_row(std::size_t a, const T& c, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
  }

  // col a += c * col b
  void addmul_col(std::size_t a, const T& c, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
  }

  MatrixT transposed() const {
    MatrixT t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatrixT operator*(const MatrixT& o) const {
    if (cols_ != o.rows_) fail(Errc::dimension, "matrix product shape mismatch");
    MatrixT p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  bool is_zero() const {
    for (const T& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  // rows [0, k) as a new matrix
  MatrixT top_rows(std::size_t k) const {
    MatrixT m(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  MatrixT select_cols(const std::vector<int>& idx) const {
    MatrixT m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  void append_row(const std::vector<T>& v) {
    if (v.size() != cols_) fail(Errc::dimension, "appended row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  static MatrixT vstack(const MatrixT& a, const MatrixT& b) {
    if (a.cols_ != b.cols_) fail(Errc::dimension, "vstack column mismatch");
    MatrixT m(a.rows_ + b.rows_, a.cols_);
    m.data_ = a.data_;
    m.data_.insert(m.data_.end(), b.data_.begin(), b.data_.end());
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = MatrixT<Int>;
using RatMatrix = MatrixT<Rat>;

// lexicographic row comparison, used to canonicalize row order
template <class T>
int compare_vec(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

}  // namespace fanmat::la
