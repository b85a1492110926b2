#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "btnorm/rational.hpp"

namespace btnorm {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, size_t height);
  static Matrix diagonal(const Vector& diag);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vector column(size_t c) const;
  std::vector<Vector> columns() const;
  void set_column(size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;

  /// Throws Error(singular) when not invertible.
  Matrix inverse() const;
  std::optional<Matrix> try_inverse() const;
  Rational determinant() const;
  size_t rank() const;

  /// Column c -= factor * column src.
  void column_axpy(size_t c, const Rational& factor, size_t src);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  Vector data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Horizontal concatenation.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Row-major text "a,b;c,d". Throws Error(malformed).
Matrix parse_matrix(std::string_view rows);

/// Vectors separated by ';', each comma-separated; they become the columns of
/// the result and must all have length `height`. The empty string yields a
/// height x 0 matrix.
Matrix parse_vector_list(std::string_view vectors, size_t height);

}  // namespace btnorm
