#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hlat/errors.hpp"

namespace hlat {

/// Dense row-major matrix over an arbitrary ring. Entries need not be
/// default-constructible (cyclic elements carry their modulus), so every
/// matrix is built from an explicit fill value.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  /// Entry-wise image under f.
  template <class F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& e : data_) out.push_back(f(e));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix data size mismatch");
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Product over any ring with +, *; `zero` seeds each accumulator.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
  Matrix<T> r(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = zero;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

}  // namespace hlat
