#pragma once

// Reference computations that share no code path with the library's
// algorithms: cofactor expansion, the displayed regular-representation
// matrices, and a direct word evaluator built on them.

#include "fdeform/algebra.hpp"
#include "fdeform/matrix.hpp"
#include "fdeform/scalar.hpp"

namespace fdeform::testing {

inline Scalar cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, j = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, j++) = m(r, k);
      }
    const Scalar term = m(0, c) * cofactor_determinant(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

// Regular representation in the basis (1, c+, c, n), typed in by hand.
inline Matrix displayed_rho_one() { return Matrix::identity(4); }

inline Matrix displayed_rho_cdag() {
  return {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
}

inline Matrix displayed_rho_c(const Scalar& z = Scalar::zeta()) {
  return {{0, z, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, z}, {0, -1, 0, 0}};
}

inline Matrix displayed_rho_n(const Scalar& z = Scalar::zeta()) {
  return {{0, 0, 0, 0}, {0, z, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, z}};
}

// The regular representation is faithful, so a word is determined by its
// image applied to the unit vector: w = ρ(w)·1.
inline NormalElement evaluate_word(const Word& w, const Scalar& z = Scalar::zeta()) {
  Vector v(4);
  v[0] = Scalar(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    v = (*it == Generator::C ? displayed_rho_c(z) : displayed_rho_cdag()) * v;
  return NormalElement({v[0], v[1], v[2], v[3]});
}

}  // namespace fdeform::testing
