#include "fdeform/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdeform {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("matrix shape mismatch in ") + op);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()) {
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(const Vector& coords, std::size_t rows, std::size_t cols) {
  if (coords.size() != rows * cols) throw std::invalid_argument("unflatten: coordinate count mismatch");
  Matrix m(rows, cols);
  m.data_ = coords;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Matrix Matrix::principal(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(idx[r], idx[c]);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

Matrix Matrix::substitute(const Bindings& at) const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.substitute(at);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "addition");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtraction");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x = s * x;
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

std::string Matrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::vector<std::size_t> width(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      cells[r * cols_ + c] = (*this)(r, c).to_string();
      width[c] = std::max(width[c], cells[r * cols_ + c].size());
    }
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::string& s = cells[r * cols_ + c];
      out += std::string(width[c] - s.size(), ' ') + s;
      out += c + 1 < cols_ ? "  " : " ";
    }
    out += "]\n";
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace fdeform
