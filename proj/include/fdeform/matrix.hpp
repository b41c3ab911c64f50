#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fdeform/scalar.hpp"

namespace fdeform {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  /// Inverse of flatten(): row-major coordinates to a rows x cols matrix.
  static Matrix unflatten(const Vector& coords, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector flatten() const { return data_; }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Principal submatrix on the given index set (in the given order).
  Matrix principal(const std::vector<std::size_t>& idx) const;

  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Matrix substitute(const Bindings& at) const;
  bool is_zero() const;
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  Matrix operator-() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Nested scalar strings, one row per line, columns aligned.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix direct_sum(const Matrix& a, const Matrix& b);

bool is_zero_vector(const Vector& v);

}  // namespace fdeform
