#include "fdeform/algebra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fdeform {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch == 'c') {
      w.push_back(Generator::C);
    } else if (ch == 'C') {
      w.push_back(Generator::CDag);
    } else {
      throw std::invalid_argument("word letters must be 'c' or 'C', got '" + std::string(1, ch) + "'");
    }
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (Generator g : w) s += g == Generator::C ? 'c' : 'C';
  return s;
}

std::string_view basis_name(BasisIndex b) {
  switch (b) {
    case BasisIndex::One:
      return "1";
    case BasisIndex::CDag:
      return "c+";
    case BasisIndex::C:
      return "c";
    case BasisIndex::N:
      return "n";
  }
  return "?";
}

Word basis_word(BasisIndex b) {
  switch (b) {
    case BasisIndex::One:
      return {};
    case BasisIndex::CDag:
      return {Generator::CDag};
    case BasisIndex::C:
      return {Generator::C};
    case BasisIndex::N:
      return {Generator::CDag, Generator::C};
  }
  return {};
}

// ----------------------------------------------------------- NormalElement

NormalElement NormalElement::basis(BasisIndex b) {
  NormalElement e;
  e[b] = Scalar(1);
  return e;
}

bool NormalElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

NormalElement NormalElement::substitute(const Bindings& at) const {
  NormalElement out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = coeffs_[k].substitute(at);
  return out;
}

NormalElement operator+(const NormalElement& a, const NormalElement& b) {
  NormalElement out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

NormalElement operator-(const NormalElement& a, const NormalElement& b) {
  NormalElement out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

NormalElement operator*(const Scalar& s, const NormalElement& a) {
  NormalElement out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = s * a.coeffs_[k];
  return out;
}

std::string NormalElement::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k > 0) s += ", ";
    s += coeffs_[k].to_string();
  }
  return s + ")";
}

// ------------------------------------------------------------- rewriting

bool is_redex(const Word& w, std::size_t pos) {
  if (pos + 1 >= w.size()) return false;
  // cc, c⁺c⁺ and cc⁺ are rule left sides; c⁺c is normal.
  return !(w[pos] == Generator::CDag && w[pos + 1] == Generator::C);
}

namespace {

std::optional<std::size_t> find_redex(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::Leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (is_redex(w, p)) return p;
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;)
      if (is_redex(w, p)) return p;
  }
  return std::nullopt;
}

BasisIndex normal_word_index(const Word& w) {
  if (w.empty()) return BasisIndex::One;
  if (w.size() == 1) return w[0] == Generator::C ? BasisIndex::C : BasisIndex::CDag;
  if (w.size() == 2 && w[0] == Generator::CDag && w[1] == Generator::C) return BasisIndex::N;
  throw std::logic_error("word '" + word_to_string(w) + "' is not in normal form");
}

}  // namespace

FermionAlgebra::FermionAlgebra(Scalar zeta) : zeta_(std::move(zeta)) {
  for (BasisIndex i : kBasis)
    for (BasisIndex j : kBasis) {
      Word w = basis_word(i);
      Word rhs = basis_word(j);
      w.insert(w.end(), rhs.begin(), rhs.end());
      table_.table_[index_of(i)][index_of(j)] = reduce(w);
    }
}

FermionAlgebra::Combination FermionAlgebra::rewrite_at(const Word& w, std::size_t pos) const {
  if (!is_redex(w, pos)) throw std::invalid_argument("no redex at the requested position");
  Combination out;
  if (w[pos] == w[pos + 1]) return out;  // c² = c⁺² = 0
  Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
  Word unit = prefix;
  unit.insert(unit.end(), suffix.begin(), suffix.end());
  Word swapped = prefix;
  swapped.push_back(Generator::CDag);
  swapped.push_back(Generator::C);
  swapped.insert(swapped.end(), suffix.begin(), suffix.end());
  if (!zeta_.is_zero()) out[unit] += zeta_;
  out[swapped] += Scalar(-1);
  return out;
}

NormalElement FermionAlgebra::reduce(const Word& w, RewriteStrategy strategy) const {
  return reduce(Combination{{w, Scalar(1)}}, strategy);
}

NormalElement FermionAlgebra::reduce(const Combination& comb, RewriteStrategy strategy) const {
  Combination pending = comb;
  NormalElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& coeff = node.mapped();
    if (coeff.is_zero()) continue;
    auto pos = find_redex(w, strategy);
    if (!pos) {
      out[normal_word_index(w)] += coeff;
      continue;
    }
    for (const auto& [next, c] : rewrite_at(w, *pos)) pending[next] += coeff * c;
  }
  return out;
}

NormalElement FermionAlgebra::multiply(const NormalElement& a, const NormalElement& b) const {
  NormalElement out;
  for (BasisIndex i : kBasis) {
    if (a[i].is_zero()) continue;
    for (BasisIndex j : kBasis) {
      if (b[j].is_zero()) continue;
      out = out + (a[i] * b[j]) * table_.product(i, j);
    }
  }
  return out;
}

// ----------------------------------------------------------- confluence

std::vector<Ambiguity> ConfluenceReport::unresolved() const {
  std::vector<Ambiguity> out;
  std::copy_if(overlaps.begin(), overlaps.end(), std::back_inserter(out),
               [](const Ambiguity& a) { return !a.resolved(); });
  return out;
}

ConfluenceReport check_confluence(const FermionAlgebra& algebra) {
  ConfluenceReport report;
  const std::vector<Word> lhs = {parse_word("cc"), parse_word("CC"), parse_word("cC")};
  for (const Word& l1 : lhs)
    for (const Word& l2 : lhs) {
      if (l1[1] != l2[0]) continue;
      Word overlap = {l1[0], l1[1], l2[1]};
      Ambiguity a;
      a.overlap = overlap;
      a.left_first = algebra.reduce(algebra.rewrite_at(overlap, 0));
      a.right_first = algebra.reduce(algebra.rewrite_at(overlap, 1));
      report.overlaps.push_back(std::move(a));
    }

  for (BasisIndex i : kBasis)
    for (BasisIndex j : kBasis)
      for (BasisIndex k : kBasis) {
        const NormalElement x = NormalElement::basis(i);
        const NormalElement y = NormalElement::basis(j);
        const NormalElement z = NormalElement::basis(k);
        if (algebra.multiply(algebra.multiply(x, y), z) != algebra.multiply(x, algebra.multiply(y, z)))
          report.non_associative.push_back({i, j, k});
        ++report.triples_checked;
      }
  return report;
}

}  // namespace fdeform
