#include "fdeform/representation.hpp"

#include <stdexcept>

#include "fdeform/errors.hpp"

namespace fdeform {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFaithful:
      return "NotFaithful";
    case ErrorKind::FrameDegenerate:
      return "FrameDegenerate";
    case ErrorKind::RestrictionMismatch:
      return "RestrictionMismatch";
    case ErrorKind::SingularS:
      return "SingularS";
    case ErrorKind::ZetaZero:
      return "ZetaZero";
    case ErrorKind::RetriesExhausted:
      return "RetriesExhausted";
    case ErrorKind::UnknownFixture:
      return "UnknownFixture";
  }
  return "Unknown";
}

Representation::Representation(Matrix c, Matrix cdag, Matrix one, Scalar zeta)
    : c_(std::move(c)), cdag_(std::move(cdag)), one_(std::move(one)), zeta_(std::move(zeta)) {
  const std::size_t d = c_.rows();
  for (const Matrix* m : {&c_, &cdag_, &one_})
    if (m->rows() != d || m->cols() != d) throw std::invalid_argument("representation matrices must be dim x dim");
  if (one_ * one_ != one_) throw std::invalid_argument("image of the unit must be idempotent");
}

Representation Representation::unital(Matrix c, Matrix cdag, Scalar zeta) {
  const std::size_t d = c.rows();
  return {std::move(c), std::move(cdag), Matrix::identity(d), std::move(zeta)};
}

Matrix Representation::image(BasisIndex b) const {
  switch (b) {
    case BasisIndex::One:
      return one_;
    case BasisIndex::CDag:
      return cdag_;
    case BasisIndex::C:
      return c_;
    case BasisIndex::N:
      return n();
  }
  return {};
}

Matrix Representation::image(const NormalElement& x) const {
  Matrix out(dim(), dim());
  for (BasisIndex b : kBasis)
    if (!x[b].is_zero()) out = out + x[b] * image(b);
  return out;
}

Representation Representation::at_zeta(const Scalar& zeta) const {
  if (!is_symbolic()) {
    if (zeta != zeta_) throw std::invalid_argument("representation is already specialized at another zeta");
    return *this;
  }
  const Bindings at{{"z", zeta}};
  return {c_.substitute(at), cdag_.substitute(at), one_.substitute(at), zeta};
}

Representation regular_representation(const Scalar& zeta) {
  const FermionAlgebra algebra(zeta);
  const StructureTensor& table = algebra.structure_constants();
  auto left_mult = [&](BasisIndex x) {
    Matrix m(4, 4);
    for (BasisIndex j : kBasis)
      for (BasisIndex k : kBasis) m(index_of(k), index_of(j)) = table(x, j, k);
    return m;
  };
  return {left_mult(BasisIndex::C), left_mult(BasisIndex::CDag), left_mult(BasisIndex::One), zeta};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.zeta() != b.zeta()) throw std::invalid_argument("direct sum of representations at different zeta");
  return {direct_sum(a.c(), b.c()), direct_sum(a.cdag(), b.cdag()), direct_sum(a.one(), b.one()), a.zeta()};
}

Representation conjugate(const Representation& rep, const Matrix& t) {
  auto t_inv = inverse(t);
  if (!t_inv) throw std::invalid_argument("conjugating matrix is singular");
  return {*t_inv * rep.c() * t, *t_inv * rep.cdag() * t, *t_inv * rep.one() * t, rep.zeta()};
}

RelationResidues verify_relations(const Representation& rep) {
  const Matrix& c = rep.c();
  const Matrix& cd = rep.cdag();
  return {c * c, cd * cd, c * cd + cd * c - rep.zeta() * rep.one()};
}

bool verify_homomorphism(const Representation& rep) {
  const FermionAlgebra algebra(rep.zeta());
  const StructureTensor& table = algebra.structure_constants();
  for (BasisIndex i : kBasis)
    for (BasisIndex j : kBasis)
      if (rep.image(i) * rep.image(j) != rep.image(table.product(i, j))) return false;
  return true;
}

SubspaceBasis representation_kernel(const Representation& rep) {
  std::vector<Vector> columns;
  columns.reserve(4);
  for (BasisIndex b : kBasis) columns.push_back(rep.image(b).flatten());
  return nullspace(Matrix::from_columns(rep.dim() * rep.dim(), columns));
}

SubspaceBasis cyclic_subspace(const Representation& rep, const Vector& v) {
  if (v.size() != rep.dim()) throw std::invalid_argument("vector length does not match representation");
  std::vector<Vector> images;
  for (BasisIndex b : kBasis) {
    Vector w = rep.image(b) * v;
    if (!is_zero_vector(w)) images.push_back(std::move(w));
  }
  return span(rep.dim(), images);
}

bool is_stable(const Representation& rep, const SubspaceBasis& w) {
  for (const Vector& v : w.vectors())
    for (const Matrix* g : {&rep.c(), &rep.cdag(), &rep.one()})
      if (!w.contains(*g * v)) return false;
  return true;
}

Representation restrict_to(const Representation& rep, const SubspaceBasis& w) {
  const Matrix frame = w.as_columns();
  auto act = [&](const Matrix& g) {
    auto r = solve(frame, g * frame);
    if (!r) throw std::invalid_argument("subspace is not stable under the representation");
    return *r;
  };
  return {act(rep.c()), act(rep.cdag()), act(rep.one()), rep.zeta()};
}

}  // namespace fdeform
