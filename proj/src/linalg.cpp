#include "fdeform/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fdeform {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Lower tiers first keeps symbolic elimination as small as possible.
std::optional<std::size_t> choose_pivot(const Matrix& m, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col).is_zero()) continue;
    if (!best || m(r, col).tier() < m(*best, col).tier()) best = r;
  }
  return best;
}

}  // namespace

EchelonForm rref(const Matrix& input) {
  EchelonForm out{input, {}, 0};
  Matrix& m = out.echelon;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = choose_pivot(m, c, r);
    if (!p) continue;
    swap_rows(m, *p, r);
    const Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_)
    if (v.size() != ambient_dim_) throw std::invalid_argument("subspace vector has wrong length");
  if (!vectors_.empty() && rank(as_columns()) != vectors_.size())
    throw std::invalid_argument("subspace basis vectors are linearly dependent");
}

bool SubspaceBasis::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong length for subspace");
  if (is_zero_vector(v)) return true;
  std::vector<Vector> cols = vectors_;
  cols.push_back(v);
  return rank(Matrix::from_columns(ambient_dim_, cols)) == vectors_.size();
}

SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return SubspaceBasis(ambient_dim);
  EchelonForm e = rref(Matrix::from_columns(ambient_dim, vectors));
  std::vector<Vector> picked;
  picked.reserve(e.pivots.size());
  for (std::size_t p : e.pivots) picked.push_back(vectors[p]);
  return SubspaceBasis(ambient_dim, std::move(picked));
}

SubspaceBasis column_space(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

SubspaceBasis nullspace(const Matrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.echelon(i, f);
    basis.push_back(primitive(v));
  }
  return SubspaceBasis(m.cols(), std::move(basis));
}

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix m = input;
  bool negate = false;
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      auto p = choose_pivot(m, k, k + 1);
      if (!p) return Scalar(0);
      swap_rows(m, *p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  EchelonForm e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.echelon.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  EchelonForm e = rref(aug);
  std::size_t a_rank = 0;
  while (a_rank < e.pivots.size() && e.pivots[a_rank] < n) ++a_rank;
  if (a_rank < n) throw std::invalid_argument("solve: coefficient matrix lacks full column rank");
  if (e.rank > n) return std::nullopt;
  return e.echelon.block(0, n, n, b.cols());
}

Vector primitive(const Vector& v) {
  if (is_zero_vector(v)) return v;
  // Common denominator.
  Poly common(1);
  for (const auto& s : v) {
    if (s.tier() != Scalar::Tier::Fraction) continue;
    const Poly d = s.as_fraction().den();
    Poly g = poly_gcd(common, d);
    common = common * *d.exact_divide(g);
  }
  Vector w(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k] * Scalar(common);

  // Common polynomial factor.
  Poly content;
  bool all_poly = true;
  for (const auto& s : w) {
    auto p = s.as_poly();
    if (!p) {
      all_poly = false;
      break;
    }
    content = poly_gcd(content, *p);
  }
  if (!all_poly) return w;
  if (!content.is_constant())
    for (auto& s : w) s = Scalar(*s.as_poly()->exact_divide(content));

  // Integer-coprime numeric coefficients.
  mpz_class den_lcm = 1;
  for (const auto& s : w) {
    const Poly p = *s.as_poly();
    for (const auto& [m, c] : p.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().denominator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im().denominator().get_mpz_t());
    }
  }
  mpz_class num_gcd = 0;
  for (const auto& s : w) {
    const Poly p = *s.as_poly();
    for (const auto& [m, c] : p.terms()) {
      mpz_class re = c.re().numerator() * (den_lcm / c.re().denominator());
      mpz_class im = c.im().numerator() * (den_lcm / c.im().denominator());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), re.get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), im.get_mpz_t());
    }
  }
  Rational factor(mpq_class(den_lcm, num_gcd));

  // Sign convention.
  for (const auto& s : w) {
    if (s.is_zero()) continue;
    const Gaussian lead = s.as_poly()->leading().second;
    if (lead.re().sign() < 0 || (lead.re().is_zero() && lead.im().sign() < 0)) factor = -factor;
    break;
  }
  for (auto& s : w) s *= Scalar(factor);
  return w;
}

InvertibilityReport invertibility(const Matrix& m) {
  InvertibilityReport rep;
  rep.det = determinant(m);
  rep.generically_invertible = !rep.det.is_zero();
  if (!rep.generically_invertible) return rep;
  if (auto p = rep.det.as_poly()) {
    Monomial content = p->monomial_content();
    rep.zeta_multiplicity = content.degree_in("z");
    Poly cofactor = p->divided_by_monomial(Monomial::variable("z", rep.zeta_multiplicity));
    rep.unit_cofactor = cofactor.is_constant();
  }
  return rep;
}

std::string InvertibilityReport::zero_locus() const {
  if (!generically_invertible) return "everywhere";
  if (zeta_multiplicity == 0 && unit_cofactor) return "nowhere";
  if (unit_cofactor) return "z = 0 (multiplicity " + std::to_string(zeta_multiplicity) + ")";
  return "det = " + det.to_string() + " = 0";
}

SubspaceBasis solve_sylvester_family(const std::vector<SylvesterPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("solve_sylvester_family: no equations given");
  const std::size_t n = pairs.front().a.rows();
  const std::size_t m = pairs.front().b.rows();
  for (const auto& [a, b] : pairs) {
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != m)
      throw std::invalid_argument("solve_sylvester_family: dimension mismatch");
  }
  // Unknown X(r, c) sits at coordinate r * n + c.
  const std::size_t unknowns = m * n;
  Matrix system(pairs.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        // (X·a)(r, c) - (b·X)(r, c)
        for (std::size_t k = 0; k < n; ++k)
          if (!a(k, c).is_zero()) system(row, r * n + k) += a(k, c);
        for (std::size_t k = 0; k < m; ++k)
          if (!b(r, k).is_zero()) system(row, k * n + c) -= b(r, k);
      }
  }
  return nullspace(system);
}

}  // namespace fdeform
