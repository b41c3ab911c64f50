#pragma once

// Exact scalar tower used by every matrix in the library:
//
//   Rational  ⊂  Gaussian  ⊂  Poly  ⊂  RationalFunction
//
// `Scalar` is a tagged union over the four tiers. Every value is stored in
// the lowest tier able to represent it, so equality within a tier is
// structural and zero-testing is decidable. All symbols (the deformation
// parameter "z" and auxiliary symbols such as "v1", "t3") are real.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fdeform {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional leading '-', q > 0).
  static Rational parse(std::string_view text);

  const mpq_class& gmp() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  mpq_class value_{0};
};

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return {re_, -im_}; }
  /// |a|^2, always a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

  /// "a", "bi" or "a+bi" with rational parts.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

/// Canonical variable order: "z" first, then natural order on the remaining
/// names ("t2" < "t10" < "v1").
bool variable_less(std::string_view a, std::string_view b);

/// A power product of named variables. Exponents are positive; the factor
/// list is sorted by `variable_less`.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned power = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned degree_in(std::string_view var) const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic monomial order with "z" the most significant variable.
  static int compare(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

/// Sparse multivariate polynomial with Gaussian rational coefficients.
/// Invariant: no zero coefficient is stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Gaussian, MonomialLess>;

  Poly() = default;
  Poly(Gaussian constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Gaussian(constant)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(std::string name);
  static Poly term(Gaussian coeff, Monomial mono);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Requires is_constant().
  Gaussian constant() const;
  std::set<std::string> variables() const;
  unsigned degree() const;
  unsigned degree_in(std::string_view var) const;
  /// Greatest term in the monomial order. Requires !is_zero().
  const std::pair<const Monomial, Gaussian>& leading() const { return *terms_.rbegin(); }

  Poly conj() const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Gaussian& c) const;
  Poly times_monomial(const Monomial& m) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
  std::optional<Poly> exact_divide(const Poly& divisor) const;
  /// Greatest common monomial factor of all terms (one for the zero polynomial).
  Monomial monomial_content() const;
  /// Requires every term divisible by m.
  Poly divided_by_monomial(const Monomial& m) const;

  /// Terms in increasing monomial order, e.g. "1 - z + z^2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Gaussian& c);
  Terms terms_;
};

/// Monic gcd when at least one operand is univariate (or constant);
/// otherwise the monic common monomial factor. The result always
/// divides both operands exactly.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Quotient num/den with den != 0, kept in a normalized form: common monomial
/// and univariate gcd factors removed, den monic. Equality is decided by
/// cross-multiplication.
class RationalFunction {
 public:
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction conj() const { return {num_.conj(), den_.conj()}; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

class Scalar;
using Bindings = std::map<std::string, Scalar, std::less<>>;

class Scalar {
 public:
  enum class Tier { Rational = 0, Gaussian = 1, Poly = 2, Fraction = 3 };

  Scalar() : value_(fdeform::Rational(0)) {}
  Scalar(long v) : value_(fdeform::Rational(v)) {}                       // NOLINT
  Scalar(int v) : value_(fdeform::Rational(static_cast<long>(v))) {}     // NOLINT
  Scalar(fdeform::Rational v) : value_(std::move(v)) {}                  // NOLINT
  Scalar(const fdeform::Gaussian& v);                                    // NOLINT
  Scalar(const fdeform::Poly& v);                                        // NOLINT
  Scalar(const RationalFunction& v);                                     // NOLINT

  static Scalar symbol(std::string name);
  /// The deformation parameter, serialized as "z".
  static Scalar zeta() { return symbol("z"); }
  static Scalar i() { return fdeform::Gaussian::i(); }
  static Scalar ratio(long num, long den) { return fdeform::Rational(num, den); }

  /// Inverse of to_string(): sums, products, quotients, integer powers,
  /// parentheses, rational literals, "i" and identifiers.
  static Scalar parse(std::string_view text);

  Tier tier() const { return static_cast<Tier>(value_.index()); }
  bool is_zero() const;
  bool is_one() const;
  /// True when no symbol occurs (tier Rational or Gaussian).
  bool is_constant() const { return tier() <= Tier::Gaussian; }
  std::set<std::string> variables() const;

  std::optional<fdeform::Rational> as_rational() const;
  std::optional<fdeform::Gaussian> as_gaussian() const;
  std::optional<fdeform::Poly> as_poly() const;
  /// Numerator/denominator view valid for every tier.
  RationalFunction as_fraction() const;

  Scalar conj() const;
  Scalar real_part() const;
  Scalar imag_part() const;
  /// s * conj(s).
  Scalar abs2() const { return *this * conj(); }

  /// Substitutes bound symbols; unbound symbols remain. Throws
  /// std::domain_error if a denominator vanishes.
  Scalar substitute(const Bindings& at) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws std::domain_error on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  using Storage = std::variant<fdeform::Rational, fdeform::Gaussian, fdeform::Poly, RationalFunction>;
  explicit Scalar(Storage s) : value_(std::move(s)) {}
  static Scalar canonical(const RationalFunction& f);
  static Scalar canonical(const fdeform::Poly& p);
  static Scalar canonical(const fdeform::Gaussian& g);

  Storage value_;
};

}  // namespace fdeform
