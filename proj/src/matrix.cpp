#include "btnorm/matrix.hpp"

#include <string>
#include <utility>

#include "btnorm/error.hpp"

namespace btnorm {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  size_t width = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), width);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) fail(Errc::dimension_mismatch, "ragged matrix rows");
    for (size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, size_t height) {
  Matrix m(height, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) fail(Errc::dimension_mismatch, "column length does not match dimension");
    for (size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  Matrix m(diag.size(), diag.size());
  for (size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::column(size_t c) const {
  Vector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::set_column(size_t c, const Vector& v) {
  for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(r, k);
      if (x == 0) continue;
      for (size_t c = 0; c < rhs.cols_; ++c) out(r, c) += x * rhs(k, c);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) fail(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  Vector out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::dimension_mismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::dimension_mismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (!is_square()) return std::nullopt;
  size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational scale = 1 / a(col, col);
    for (size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  if (!is_square()) fail(Errc::dimension_mismatch, "inverse of a non-square matrix");
  auto inv = try_inverse();
  if (!inv) fail(Errc::singular, "matrix is singular");
  return *std::move(inv);
}

Rational Matrix::determinant() const {
  if (!is_square()) fail(Errc::dimension_mismatch, "determinant of a non-square matrix");
  size_t n = rows_;
  Matrix a = *this;
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

size_t Matrix::rank() const {
  Matrix a = *this;
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (size_t c = 0; c < cols_; ++c) std::swap(a(pivot, c), a(rank, c));
    for (size_t r = rank + 1; r < rows_; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(rank, col);
      for (size_t c = col; c < cols_; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

void Matrix::column_axpy(size_t c, const Rational& factor, size_t src) {
  for (size_t r = 0; r < rows_; ++r) (*this)(r, c) -= factor * (*this)(r, src);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace {

std::vector<Vector> split_vectors(std::string_view text) {
  std::vector<Vector> out;
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return out;
  size_t start = 0;
  while (true) {
    size_t semi = text.find(';', start);
    out.push_back(parse_vector(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

Matrix parse_matrix(std::string_view rows) {
  auto parsed = split_vectors(rows);
  for (const auto& r : parsed) {
    if (r.size() != parsed.front().size()) fail(Errc::malformed, "matrix rows have different lengths");
  }
  return Matrix::from_rows(parsed);
}

Matrix parse_vector_list(std::string_view vectors, size_t height) {
  auto parsed = split_vectors(vectors);
  for (const auto& v : parsed) {
    if (v.size() != height) fail(Errc::malformed, "vector of length " + std::to_string(v.size()) + " where " + std::to_string(height) + " was expected");
  }
  return Matrix::from_columns(parsed, height);
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(Errc::dimension_mismatch, "hconcat height mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace btnorm
