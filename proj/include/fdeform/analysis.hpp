#pragma once

// Structural questions about representations of the single-fermion algebra:
// regular subrepresentations, invariant subspaces, equivalence, Hermitian
// intertwiners (pseudo-unitarity), block decomposition and the unitary
// obstruction at ζ = 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdeform/linalg.hpp"
#include "fdeform/representation.hpp"

namespace fdeform {

/// A copy of the regular representation inside `rep`, spanned by the frame
/// (v₁, ρ(c⁺)v₁, ρ(c)v₁, ρ(n)v₁).
struct EmbeddingWitness {
  std::size_t v1_index = 0;  // v₁ = e_{v1_index}
  Vector v1;
  Matrix frame;  // dim x 4, frame vectors as columns
  Representation restricted;
};

/// Picks v₁ as the first standard basis vector with ρ(n)v₁ ≠ 0, checks the
/// frame is independent and that the restricted action is exactly the
/// regular representation at rep's ζ.
/// Throws RepresentationError: NotFaithful (ρ(n) = 0), FrameDegenerate,
/// RestrictionMismatch.
EmbeddingWitness extract_regular_subrep(const Representation& rep);

/// det[v, ρ₀(c⁺)v, ρ₀(c)v, ρ₀(n)v] for the symbolic vector v = (v1, v2, v3, v4).
Scalar generic_independence_certificate();

/// Stable subspace cascade for ζ = 0: Im ρ(n), Im ρ(c), Im ρ(c⁺) (first one
/// that is proper and nonzero), then a line when every generator vanishes.
/// Returns nullopt for one-dimensional inputs. Throws std::invalid_argument
/// unless rep.zeta() == 0.
std::optional<SubspaceBasis> find_invariant_subspace_grassmann(const Representation& rep);

/// An invertible element of span(basis), found by a deterministic sweep:
/// single basis elements, then integer combinations with coefficients in
/// [-2, 2] (spaces of dimension ≤ kMaxSweepDim), then the generic
/// determinant det(Σ tⱼ basisⱼ) searched on an integer grid large enough to
/// contain a non-root. Combination coefficients are always real integers.
struct InvertibleElement {
  Matrix element;
  Scalar det;
};

inline constexpr std::size_t kMaxSweepDim = 5;

std::optional<InvertibleElement> find_invertible_element(const std::vector<Matrix>& basis);

/// det(Σ tⱼ basisⱼ) with symbols t1, t2, ...; zero matrix of size `dim` when
/// the basis is empty.
Scalar generic_determinant(const std::vector<Matrix>& basis, std::size_t dim);

struct SimilarityWitness {
  Matrix s;
  Scalar det_s;
};

/// Invertible S with S·ρ_B(x) = ρ_A(x)·S for x in {c, c⁺, 1}, i.e.
/// ρ_B = S⁻¹ρ_A S. nullopt when none exists.
std::optional<SimilarityWitness> solve_equivalence(const Representation& rep_a, const Representation& rep_b);

/// Hermitian solutions of η·ρ(c⁺) = ρ(c)†·η as a real vector space.
struct EtaSolutionSpace {
  std::vector<Matrix> basis;
  std::vector<std::string> symbols;  // t1, t2, ... used by generic_det
  Scalar generic_det;
  std::optional<Matrix> invertible_example;

  bool admits_invertible() const { return !generic_det.is_zero(); }
  /// Hermitian and inside the span of the basis.
  bool contains(const Matrix& eta) const;
};

EtaSolutionSpace solve_pseudo_unitary(const Representation& rep);

struct Decomposition {
  Representation conjugated;
  /// Finest index partition making every generator block diagonal; blocks and
  /// indices ascending, 0-based.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Representation> block_reps;
  InvertibilityReport s_report;
};

/// ρ'(x) = s⁻¹ρ(x)s together with its block structure. A symbolic `s` is
/// specialized at rep's ζ first. Throws RepresentationError (SingularS) when
/// det s vanishes there.
Decomposition conjugate_and_decompose(const Representation& rep, const Matrix& s);

/// Finest block partition of a set of square matrices of equal size.
std::vector<std::vector<std::size_t>> block_partition(const std::vector<const Matrix*>& mats);

/// c⁺ → c⁺/ζ, ζ → 1. Throws RepresentationError (ZetaZero) for ζ = 0 and
/// std::invalid_argument for symbolic ζ.
Representation absorb_deformation(const Representation& rep);

struct ObstructionCertificate {
  Matrix m;
  Matrix anticomm;  // m·m† + m†·m
  Scalar trace_value;
  Scalar frobenius_sum;  // Σ |m_ij|²
};

ObstructionCertificate unitary_obstruction(const Matrix& m);

enum class ExtraSummand { None, Rho1Empty, Rho2Empty, Rho3Empty };

inline constexpr int kConjugatorRetries = 64;

/// T⁻¹(ρ₀ ⊕ extra ⊕ dim_pad copies of the 1-dim representation)T with T an
/// integer matrix, entries in [-2, 2], redrawn until invertible (at most
/// kConjugatorRetries draws, then RetriesExhausted). Deterministic in seed.
Representation random_faithful_rep(std::uint64_t seed, ExtraSummand extra, std::size_t dim_pad = 0);

}  // namespace fdeform
