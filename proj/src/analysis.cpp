#include "fdeform/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fdeform/errors.hpp"
#include "fdeform/fixtures.hpp"

namespace fdeform {

// ---------------------------------------------------- regular subrepresentation

EmbeddingWitness extract_regular_subrep(const Representation& rep) {
  const Matrix n = rep.n();
  const std::size_t d = rep.dim();
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < d && !pick; ++i)
    if (!is_zero_vector(n.column(i))) pick = i;
  if (!pick) throw RepresentationError(ErrorKind::NotFaithful, "rho(n) = 0, so the representation is not faithful");

  EmbeddingWitness w{*pick, Vector(d), Matrix(), rep};
  w.v1[*pick] = Scalar(1);
  w.frame = Matrix::from_columns(d, {w.v1, rep.cdag() * w.v1, rep.c() * w.v1, n * w.v1});
  if (rank(w.frame) < 4)
    throw RepresentationError(ErrorKind::FrameDegenerate,
                              "frame built from e_" + std::to_string(*pick) + " is linearly dependent");

  auto act = [&](const Matrix& g) {
    auto r = solve(w.frame, g * w.frame);
    if (!r) throw RepresentationError(ErrorKind::RestrictionMismatch, "frame span is not stable");
    return *r;
  };
  w.restricted = Representation(act(rep.c()), act(rep.cdag()), act(rep.one()), rep.zeta());
  if (w.restricted != regular_representation(rep.zeta()))
    throw RepresentationError(ErrorKind::RestrictionMismatch,
                              "restricted action differs from the regular representation");
  return w;
}

Scalar generic_independence_certificate() {
  const Representation rho0 = regular_representation(Scalar(0));
  const Vector v = {Scalar::symbol("v1"), Scalar::symbol("v2"), Scalar::symbol("v3"), Scalar::symbol("v4")};
  return determinant(Matrix::from_columns(4, {v, rho0.cdag() * v, rho0.c() * v, rho0.n() * v}));
}

// ---------------------------------------------------------- invariant subspace

std::optional<SubspaceBasis> find_invariant_subspace_grassmann(const Representation& rep) {
  if (!rep.zeta().is_zero()) throw std::invalid_argument("invariant subspace cascade requires zeta = 0");
  const std::size_t d = rep.dim();
  for (const Matrix& m : {rep.n(), rep.c(), rep.cdag()}) {
    SubspaceBasis w = column_space(m);
    if (!w.is_zero() && !w.is_full() && is_stable(rep, w)) return w;
  }
  if (d < 2) return std::nullopt;
  // Every generator acts as zero here, so any line is stable.
  Vector e1(d);
  e1[0] = Scalar(1);
  SubspaceBasis line(d, {e1});
  if (is_stable(rep, line)) return line;
  return std::nullopt;
}

// ------------------------------------------------- invertible element search

Scalar generic_determinant(const std::vector<Matrix>& basis, std::size_t dim) {
  Matrix generic(dim, dim);
  for (std::size_t j = 0; j < basis.size(); ++j)
    generic = generic + Scalar::symbol("t" + std::to_string(j + 1)) * basis[j];
  return determinant(generic);
}

namespace {

Matrix combine(const std::vector<Matrix>& basis, const std::vector<long>& coeffs) {
  Matrix m(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (coeffs[j] != 0) m = m + Scalar(coeffs[j]) * basis[j];
  return m;
}

// 0, 1, -1, 2, -2, ...
long signed_digit(std::size_t k) {
  const long h = static_cast<long>((k + 1) / 2);
  return k % 2 == 1 ? h : -h;
}

// Calls visit(coeffs) for each point of {signed_digit(0..radix-1)}^k in
// mixed-radix order, skipping the origin; stops when visit returns true.
template <class Visit>
bool sweep_grid(std::size_t k, std::size_t radix, Visit&& visit) {
  std::vector<std::size_t> digits(k, 0);
  std::vector<long> coeffs(k, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && ++digits[pos] == radix) digits[pos++] = 0;
    if (pos == k) return false;
    for (std::size_t j = 0; j < k; ++j) coeffs[j] = signed_digit(digits[j]);
    if (visit(coeffs)) return true;
  }
}

}  // namespace

std::optional<InvertibleElement> find_invertible_element(const std::vector<Matrix>& basis) {
  if (basis.empty()) return std::nullopt;
  for (const Matrix& b : basis) {
    Scalar det = determinant(b);
    if (!det.is_zero()) return InvertibleElement{b, det};
  }
  const std::size_t k = basis.size();
  std::optional<InvertibleElement> found;
  if (k >= 2 && k <= kMaxSweepDim) {
    sweep_grid(k, 5, [&](const std::vector<long>& coeffs) {
      if (std::count_if(coeffs.begin(), coeffs.end(), [](long c) { return c != 0; }) < 2) return false;
      Matrix m = combine(basis, coeffs);
      Scalar det = determinant(m);
      if (det.is_zero()) return false;
      found = InvertibleElement{std::move(m), std::move(det)};
      return true;
    });
    if (found) return found;
  }

  const Scalar generic = generic_determinant(basis, basis.front().rows());
  if (generic.is_zero()) return std::nullopt;
  // A polynomial of degree D in each variable has a non-root on any grid
  // with D + 1 values per variable.
  unsigned max_degree = 0;
  const Poly poly = *generic.as_poly();
  for (std::size_t j = 0; j < k; ++j) max_degree = std::max(max_degree, poly.degree_in("t" + std::to_string(j + 1)));
  sweep_grid(k, max_degree + 1, [&](const std::vector<long>& coeffs) {
    Bindings at;
    for (std::size_t j = 0; j < k; ++j) at.emplace("t" + std::to_string(j + 1), Scalar(coeffs[j]));
    if (generic.substitute(at).is_zero()) return false;
    Matrix m = combine(basis, coeffs);
    found = InvertibleElement{m, determinant(m)};
    return true;
  });
  return found;
}

// ---------------------------------------------------------------- equivalence

std::optional<SimilarityWitness> solve_equivalence(const Representation& rep_a, const Representation& rep_b) {
  if (rep_a.dim() != rep_b.dim()) return std::nullopt;
  const std::size_t d = rep_a.dim();
  const SubspaceBasis space = solve_sylvester_family({{rep_b.c(), rep_a.c()},
                                                      {rep_b.cdag(), rep_a.cdag()},
                                                      {rep_b.one(), rep_a.one()}});
  std::vector<Matrix> basis;
  for (const Vector& v : space.vectors()) basis.push_back(Matrix::unflatten(v, d, d));
  auto found = find_invertible_element(basis);
  if (!found) return std::nullopt;
  return SimilarityWitness{std::move(found->element), std::move(found->det)};
}

// ----------------------------------------------------------- pseudo-unitarity

namespace {

// Real basis of d x d Hermitian matrices: E_rr, then for r < c the pair
// E_rc + E_cr and i(E_rc − E_cr), in row-major order of (r, c).
std::vector<Matrix> hermitian_basis(std::size_t d) {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c) {
      if (r == c) {
        Matrix m(d, d);
        m(r, r) = Scalar(1);
        out.push_back(std::move(m));
        continue;
      }
      Matrix sym(d, d);
      sym(r, c) = Scalar(1);
      sym(c, r) = Scalar(1);
      out.push_back(std::move(sym));
      Matrix anti(d, d);
      anti(r, c) = Scalar::i();
      anti(c, r) = -Scalar::i();
      out.push_back(std::move(anti));
    }
  return out;
}

}  // namespace

bool EtaSolutionSpace::contains(const Matrix& eta) const {
  if (eta != eta.adjoint()) return false;
  const std::size_t cells = eta.rows() * eta.cols();
  std::vector<Vector> flat;
  for (const Matrix& b : basis) flat.push_back(b.flatten());
  return SubspaceBasis(cells, std::move(flat)).contains(eta.flatten());
}

EtaSolutionSpace solve_pseudo_unitary(const Representation& rep) {
  const std::size_t d = rep.dim();
  const Matrix& lhs = rep.cdag();
  const Matrix rhs = rep.c().adjoint();
  const std::vector<Matrix> herm = hermitian_basis(d);

  // η = Σ p_k H_k with real p_k; split η·ρ(c⁺) − ρ(c)†·η = 0 into real and
  // imaginary parts of each entry.
  Matrix system(2 * d * d, herm.size());
  for (std::size_t k = 0; k < herm.size(); ++k) {
    const Matrix residue = herm[k] * lhs - rhs * herm[k];
    for (std::size_t cell = 0; cell < d * d; ++cell) {
      const Scalar& s = residue(cell / d, cell % d);
      system(2 * cell, k) = s.real_part();
      system(2 * cell + 1, k) = s.imag_part();
    }
  }

  EtaSolutionSpace out;
  const SubspaceBasis solutions = nullspace(system);
  for (const Vector& p : solutions.vectors()) {
    Matrix eta(d, d);
    for (std::size_t k = 0; k < herm.size(); ++k)
      if (!p[k].is_zero()) eta = eta + p[k] * herm[k];
    out.basis.push_back(std::move(eta));
  }
  for (std::size_t j = 0; j < out.basis.size(); ++j) out.symbols.push_back("t" + std::to_string(j + 1));
  out.generic_det = generic_determinant(out.basis, d);
  if (auto inv = find_invertible_element(out.basis)) out.invertible_example = std::move(inv->element);
  return out;
}

// -------------------------------------------------------------- decomposition

std::vector<std::vector<std::size_t>> block_partition(const std::vector<const Matrix*>& mats) {
  const std::size_t d = mats.empty() ? 0 : mats.front()->rows();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Matrix* m : mats)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (!(*m)(r, c).is_zero()) {
          std::size_t a = find(r);
          std::size_t b = find(c);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::ptrdiff_t> slot(d, -1);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return blocks;
}

Decomposition conjugate_and_decompose(const Representation& rep, const Matrix& s) {
  const Matrix s_at = rep.is_symbolic() ? s : s.substitute({{"z", rep.zeta()}});
  InvertibilityReport report = invertibility(s_at);
  if (!report.generically_invertible)
    throw RepresentationError(ErrorKind::SingularS, "det S = 0 at zeta = " + rep.zeta().to_string());
  const Matrix s_inv = *inverse(s_at);
  Representation conj(s_inv * rep.c() * s_at, s_inv * rep.cdag() * s_at, s_inv * rep.one() * s_at, rep.zeta());
  auto blocks = block_partition({&conj.c(), &conj.cdag(), &conj.one()});
  std::vector<Representation> parts;
  for (const auto& idx : blocks)
    parts.emplace_back(conj.c().principal(idx), conj.cdag().principal(idx), conj.one().principal(idx), rep.zeta());
  return {std::move(conj), std::move(blocks), std::move(parts), std::move(report)};
}

// ----------------------------------------------------------------- rescaling

Representation absorb_deformation(const Representation& rep) {
  if (rep.is_symbolic()) throw std::invalid_argument("absorb_deformation needs a numeric zeta");
  if (rep.zeta().is_zero())
    throw RepresentationError(ErrorKind::ZetaZero, "the deformation cannot be absorbed at zeta = 0");
  return {rep.c(), (Scalar(1) / rep.zeta()) * rep.cdag(), rep.one(), Scalar(1)};
}

// --------------------------------------------------------- unitary obstruction

ObstructionCertificate unitary_obstruction(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unitary_obstruction needs a square matrix");
  const Matrix m_dag = m.adjoint();
  ObstructionCertificate cert{m, m * m_dag + m_dag * m, Scalar(), Scalar()};
  cert.trace_value = cert.anticomm.trace();
  for (const Scalar& s : m.flatten()) cert.frobenius_sum += s.abs2();
  return cert;
}

// ------------------------------------------------------ random faithful reps

Representation random_faithful_rep(std::uint64_t seed, ExtraSummand extra, std::size_t dim_pad) {
  Representation base = regular_representation(Scalar(0));
  switch (extra) {
    case ExtraSummand::None:
      break;
    case ExtraSummand::Rho1Empty:
      base = direct_sum(base, fixtures::rho1_empty());
      break;
    case ExtraSummand::Rho2Empty:
      base = direct_sum(base, fixtures::rho2_empty());
      break;
    case ExtraSummand::Rho3Empty:
      base = direct_sum(base, fixtures::rho3_empty());
      break;
  }
  for (std::size_t k = 0; k < dim_pad; ++k) base = direct_sum(base, fixtures::rho1_empty());

  const std::size_t d = base.dim();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kConjugatorRetries; ++attempt) {
    Matrix t(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) t(r, c) = Scalar(static_cast<long>(rng() % 5) - 2);
    if (!determinant(t).is_zero()) return conjugate(base, t);
  }
  throw RepresentationError(ErrorKind::RetriesExhausted, "no invertible conjugator drawn");
}

}  // namespace fdeform
