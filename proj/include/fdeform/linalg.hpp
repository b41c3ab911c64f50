#pragma once

// Exact dense linear algebra over the scalar tower. Symbolic entries are
// treated as elements of the field of rational functions, so ranks and
// nullspaces are generic in the symbols; specialize first (Matrix::substitute)
// to study a particular parameter value.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdeform/matrix.hpp"

namespace fdeform {

struct EchelonForm {
  Matrix echelon;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan reduced row-echelon form.
EchelonForm rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A list of linearly independent coordinate vectors together with the
/// dimension of the ambient space.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  /// Throws std::invalid_argument unless `vectors` are independent and of
  /// length ambient_dim.
  SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }
  bool is_full() const { return vectors_.size() == ambient_dim_; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t k) const { return vectors_[k]; }

  bool contains(const Vector& v) const;
  /// Basis vectors as matrix columns (ambient_dim x dim).
  Matrix as_columns() const { return Matrix::from_columns(ambient_dim_, vectors_); }

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
};

/// Independent subset of `vectors` spanning the same space (first-come order).
SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
SubspaceBasis column_space(const Matrix& m);

/// Kernel basis; each vector is cleared of denominators (see primitive()).
SubspaceBasis nullspace(const Matrix& m);

/// Fraction-free (Bareiss) determinant.
Scalar determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Solves a·x = b for x. `a` must have full column rank (std::invalid_argument
/// otherwise); returns nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Rescales a nonzero vector by a rational function so that every entry is a
/// polynomial, the entries share no common factor found by poly_gcd, the
/// numeric coefficients are coprime integers (Gaussian integers), and the
/// leading coefficient of the first nonzero entry is positive.
Vector primitive(const Vector& v);

/// Generic invertibility of a square matrix with polynomial entries. The zero
/// locus is reported as the multiplicity of the factor z in det together with
/// whether the cofactor is a nonzero constant.
struct InvertibilityReport {
  Scalar det;
  bool generically_invertible = false;
  unsigned zeta_multiplicity = 0;
  bool unit_cofactor = false;

  std::string zero_locus() const;
};

InvertibilityReport invertibility(const Matrix& m);

struct SylvesterPair {
  Matrix a;  // n x n, acts on the right of X
  Matrix b;  // m x m, acts on the left of X
};

/// Basis of { X (m x n) : X·a_i = b_i·X for all i }, each basis element a
/// row-major flattened X. Throws std::invalid_argument on inconsistent sizes.
SubspaceBasis solve_sylvester_family(const std::vector<SylvesterPair>& pairs);

}  // namespace fdeform
