#pragma once

// Dense row-major matrix over an exact scalar type.

#include "cgexact/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cgexact {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t size) {
    Matrix id(size, size);
    for (std::size_t d = 0; d < size; ++d) id(d, d) = 1;
    return id;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t e = 0; e < data_.size(); ++e) data_[e] += other.data_[e];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other);
    for (std::size_t e = 0; e < data_.size(); ++e) data_[e] -= other.data_[e];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const T& x = a(r, t);
        if (x == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(t, c);
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

private:
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DomainError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Rank by Gaussian elimination over the rationals.
std::size_t rank(RationalMatrix a);

/// Determinant by Gaussian elimination over the rationals. Requires a square matrix.
Rational determinant(RationalMatrix a);

}  // namespace cgexact
