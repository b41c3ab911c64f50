#pragma once

// The single-fermion algebra with relations
//
//   c·c = 0,   c⁺·c⁺ = 0,   c·c⁺ + c⁺·c = ζ·1
//
// presented by the rewrite rules cc → 0, c⁺c⁺ → 0, cc⁺ → ζ·1 − c⁺c. The
// normal words are 1, c⁺, c and n := c⁺c, in that (fixed) basis order.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fdeform/scalar.hpp"

namespace fdeform {

enum class Generator { C, CDag };

using Word = std::vector<Generator>;

/// Letters "c" (c) and "C" (c⁺); "cC" is c·c⁺. The empty string is the unit.
Word parse_word(std::string_view text);
std::string word_to_string(const Word& w);

enum class BasisIndex : std::size_t { One = 0, CDag = 1, C = 2, N = 3 };

inline constexpr std::array<BasisIndex, 4> kBasis = {BasisIndex::One, BasisIndex::CDag, BasisIndex::C,
                                                     BasisIndex::N};

constexpr std::size_t index_of(BasisIndex b) { return static_cast<std::size_t>(b); }
std::string_view basis_name(BasisIndex b);
/// The normal word representing a basis element.
Word basis_word(BasisIndex b);

/// Coefficient vector over (1, c⁺, c, n).
class NormalElement {
 public:
  NormalElement() = default;
  explicit NormalElement(std::array<Scalar, 4> coeffs) : coeffs_(std::move(coeffs)) {}
  static NormalElement basis(BasisIndex b);

  const Scalar& operator[](BasisIndex b) const { return coeffs_[index_of(b)]; }
  Scalar& operator[](BasisIndex b) { return coeffs_[index_of(b)]; }
  const std::array<Scalar, 4>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  NormalElement substitute(const Bindings& at) const;

  friend NormalElement operator+(const NormalElement& a, const NormalElement& b);
  friend NormalElement operator-(const NormalElement& a, const NormalElement& b);
  friend NormalElement operator*(const Scalar& s, const NormalElement& a);
  friend bool operator==(const NormalElement&, const NormalElement&) = default;

  /// "(c1, c2, c3, c4)" in basis order.
  std::string to_string() const;

 private:
  std::array<Scalar, 4> coeffs_{};
};

/// products(i, j) = (basis i)·(basis j); operator()(i, j, k) is the
/// coefficient of basis k in that product.
class StructureTensor {
 public:
  const NormalElement& product(BasisIndex i, BasisIndex j) const { return table_[index_of(i)][index_of(j)]; }
  const Scalar& operator()(BasisIndex i, BasisIndex j, BasisIndex k) const { return product(i, j)[k]; }

 private:
  friend class FermionAlgebra;
  std::array<std::array<NormalElement, 4>, 4> table_{};
};

enum class RewriteStrategy { Leftmost, Rightmost };

class FermionAlgebra {
 public:
  using Combination = std::map<Word, Scalar>;

  /// Symbolic in ζ (the symbol "z") unless a numeric value is given.
  explicit FermionAlgebra(Scalar zeta = Scalar::zeta());

  const Scalar& zeta() const { return zeta_; }

  NormalElement reduce(const Word& w, RewriteStrategy strategy = RewriteStrategy::Leftmost) const;
  NormalElement reduce(const Combination& comb, RewriteStrategy strategy = RewriteStrategy::Leftmost) const;
  /// One rewrite step at letter position `pos` (the redex occupies pos, pos+1).
  Combination rewrite_at(const Word& w, std::size_t pos) const;

  NormalElement multiply(const NormalElement& a, const NormalElement& b) const;
  const StructureTensor& structure_constants() const { return table_; }

 private:
  Scalar zeta_;
  StructureTensor table_;
};

/// Is the two-letter factor at `pos` the left side of a rewrite rule?
bool is_redex(const Word& w, std::size_t pos);

struct Ambiguity {
  Word overlap;
  NormalElement left_first;
  NormalElement right_first;
  bool resolved() const { return left_first == right_first; }
};

struct ConfluenceReport {
  std::vector<Ambiguity> overlaps;
  std::size_t triples_checked = 0;
  std::vector<std::array<BasisIndex, 3>> non_associative;

  std::vector<Ambiguity> unresolved() const;
  bool passes() const { return unresolved().empty() && non_associative.empty(); }
};

/// Resolves every overlap between rule left sides both ways and checks
/// associativity of multiply on all 64 basis triples.
ConfluenceReport check_confluence(const FermionAlgebra& algebra);

}  // namespace fdeform
