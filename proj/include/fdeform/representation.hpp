#pragma once

#include <cstddef>

#include "fdeform/algebra.hpp"
#include "fdeform/linalg.hpp"
#include "fdeform/matrix.hpp"

namespace fdeform {

/// Matrices for the generators c, c⁺ and the unit at a fixed ζ (numeric or
/// the symbol "z"). The unit's image is stored explicitly because it may be
/// zero (trivial representation); it must be idempotent. ρ(n) = ρ(c⁺)ρ(c).
class Representation {
 public:
  /// Throws std::invalid_argument on shape mismatch or non-idempotent `one`.
  Representation(Matrix c, Matrix cdag, Matrix one, Scalar zeta);
  /// ρ(1) = identity.
  static Representation unital(Matrix c, Matrix cdag, Scalar zeta);

  std::size_t dim() const { return c_.rows(); }
  const Matrix& c() const { return c_; }
  const Matrix& cdag() const { return cdag_; }
  const Matrix& one() const { return one_; }
  Matrix n() const { return cdag_ * c_; }
  const Scalar& zeta() const { return zeta_; }
  bool is_symbolic() const { return !zeta_.is_constant(); }

  Matrix image(BasisIndex b) const;
  Matrix image(const NormalElement& x) const;

  /// Specializes ζ (when symbolic) and every matrix entry.
  Representation at_zeta(const Scalar& zeta) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Matrix c_;
  Matrix cdag_;
  Matrix one_;
  Scalar zeta_;
};

/// Left-multiplication representation on the algebra itself in the basis
/// (1, c⁺, c, n): column j of ρ(x) holds the coordinates of x·(basis j).
Representation regular_representation(const Scalar& zeta = Scalar::zeta());

/// Direct sum; both summands must share ζ.
Representation direct_sum(const Representation& a, const Representation& b);
/// ρ'(x) = t⁻¹ ρ(x) t. Throws std::invalid_argument if t is singular.
Representation conjugate(const Representation& rep, const Matrix& t);

struct RelationResidues {
  Matrix c_squared;
  Matrix cdag_squared;
  /// ρ(c)ρ(c⁺) + ρ(c⁺)ρ(c) − ζ·ρ(1)
  Matrix anticommutator;

  bool passes() const { return c_squared.is_zero() && cdag_squared.is_zero() && anticommutator.is_zero(); }
};

RelationResidues verify_relations(const Representation& rep);

/// ρ(x)ρ(y) = ρ(xy) on all 16 pairs of basis elements.
bool verify_homomorphism(const Representation& rep);

/// { a : a₁ρ(1) + a₂ρ(c⁺) + a₃ρ(c) + a₄ρ(n) = 0 } inside the 4-dim coefficient space.
SubspaceBasis representation_kernel(const Representation& rep);
inline bool is_faithful(const Representation& rep) { return representation_kernel(rep).is_zero(); }

/// span{ρ(1)v, ρ(c⁺)v, ρ(c)v, ρ(n)v}.
SubspaceBasis cyclic_subspace(const Representation& rep, const Vector& v);

/// ρ(g)W ⊆ W for g in {c, c⁺, 1}.
bool is_stable(const Representation& rep, const SubspaceBasis& w);
/// Action on a stable subspace in the coordinates of its basis. Throws
/// std::invalid_argument if w is not stable.
Representation restrict_to(const Representation& rep, const SubspaceBasis& w);

}  // namespace fdeform
