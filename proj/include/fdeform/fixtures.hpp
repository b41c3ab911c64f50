#pragma once

// Named representations and matrices of the single-fermion algebra.

#include <cstddef>
#include <string_view>
#include <variant>

#include "fdeform/representation.hpp"

namespace fdeform::fixtures {

/// All generators and the unit act as zero.
Representation rho_trivial(std::size_t dim, const Scalar& zeta = Scalar(0));
/// Two-dimensional unitary representation of the ζ = 1 (Clifford) algebra.
Representation rho_star();
/// One-, two- and three-dimensional nonfaithful representations at ζ = 0.
Representation rho1_empty();
Representation rho2_empty();
Representation rho3_empty();

Matrix mu();
Matrix nu();
Matrix nu_plus();

/// `matrix` equals `cleared_by` times the displayed matrix.
struct ClearedMatrix {
  Matrix matrix;
  Scalar cleared_by;
};

/// Hermitian intertwiner for the regular representation, multiplied by z to
/// remove its 1/z entries.
ClearedMatrix eta_standard();
/// Similarity splitting the regular representation into 2x2 blocks; det = z.
Matrix s_standard();
/// The block-diagonal form S⁻¹ρ_ζS, symbolic unless specialized.
Representation rho_block_form(const Scalar& zeta = Scalar::zeta());

using Fixture = std::variant<Representation, Matrix, ClearedMatrix>;

/// Names: rho_trivial(d), rho_star, rho1_empty, rho2_empty, rho3_empty,
/// eta_standard, s_standard, mu, nu, nu_plus. Throws RepresentationError
/// (UnknownFixture) otherwise.
Fixture by_name(std::string_view name);

}  // namespace fdeform::fixtures
