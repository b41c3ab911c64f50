#include "fdeform/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fdeform {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::string_view num = digits();
  std::string_view den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
  }
  if (num.empty() || den.empty() || pos != text.size()) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

// ---------------------------------------------------------------- Gaussian

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}
Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Gaussian::to_string() const {
  auto imag = [](const Rational& v) {
    if (v == Rational(1)) return std::string("i");
    if (v == Rational(-1)) return std::string("-i");
    return v.to_string() + "i";
  };
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag(im_);
  std::string out = re_.to_string();
  if (im_.sign() > 0) out += "+";
  return out + imag(im_);
}

// ---------------------------------------------------------------- Monomial

namespace {

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  if (a == b) return false;
  if (a == "z") return true;
  if (b == "z") return false;
  auto [pa, na] = split_suffix(a);
  auto [pb, nb] = split_suffix(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

Monomial Monomial::variable(std::string name, unsigned power) {
  Monomial m;
  if (power > 0) m.factors_.emplace_back(std::move(name), power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::degree_in(std::string_view var) const {
  for (const auto& f : factors_)
    if (f.first == var) return f.second;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.degree_in(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (const auto& f : other.factors_) {
    unsigned e = f.second - degree_in(f.first);
    if (e > 0) q.factors_.emplace_back(f.first, e);
  }
  return q;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial g;
  for (const auto& f : a.factors_) {
    unsigned e = std::min(f.second, b.degree_in(f.first));
    if (e > 0) g.factors_.emplace_back(f.first, e);
  }
  return g;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && variable_less(fa[i].first, fb[j].first))) {
      out.factors_.push_back(fa[i++]);
    } else if (i == fa.size() || variable_less(fb[j].first, fa[i].first)) {
      out.factors_.push_back(fb[j++]);
    } else {
      out.factors_.emplace_back(fa[i].first, fa[i].second + fb[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The side holding the more significant variable is larger.
      return variable_less(fa[i].first, fb[j].first) ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [name, power] : factors_) {
    if (!out.empty()) out += "*";
    out += name;
    if (power != 1) out += "^" + std::to_string(power);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(Gaussian constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), std::move(constant));
}

Poly Poly::variable(std::string name) { return term(Gaussian(1), Monomial::variable(std::move(name))); }

Poly Poly::term(Gaussian coeff, Monomial mono) {
  Poly p;
  if (!coeff.is_zero()) p.terms_.emplace(std::move(mono), std::move(coeff));
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Gaussian Poly::constant() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Poly::degree_in(std::string_view var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
  return d;
}

void Poly::add_term(const Monomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::conj() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::scaled(const Gaussian& c) const {
  if (c.is_zero()) return {};
  Poly out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Poly Poly::times_monomial(const Monomial& mono) const {
  Poly out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m * mono, v);
  return out;
}

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  Poly quot;
  const auto& [lead_mono, lead_coeff] = divisor.leading();
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (!lead_mono.divides(m)) return std::nullopt;
    Poly t = term(c / lead_coeff, lead_mono.quotient_of(m));
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
  return g;
}

Poly Poly::divided_by_monomial(const Monomial& mono) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (!mono.divides(m)) throw std::logic_error("monomial does not divide polynomial");
    out.terms_.emplace(mono.quotient_of(m), c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const bool single = terms_.size() == 1;
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    Gaussian mag = c;
    if ((c.is_real() && c.re().sign() < 0) || (c.re().is_zero() && c.im().sign() < 0)) {
      negative = true;
      mag = -c;
    }
    const bool complex = !mag.re().is_zero() && !mag.im().is_zero();
    std::string coeff = mag.to_string();
    if (complex && !(single && m.is_one())) coeff = "(" + coeff + ")";
    std::string body;
    if (m.is_one()) {
      body = coeff;
    } else if (mag == Gaussian(1)) {
      body = m.to_string();
    } else {
      body = coeff + "*" + m.to_string();
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Gaussian(1) / p.leading().second);
}

// Remainder of univariate division; both operands in the same variable.
Poly univariate_remainder(Poly x, const Poly& y, const std::string& var) {
  const auto& [ym, yc] = y.leading();
  const unsigned dy = ym.degree_in(var);
  while (!x.is_zero()) {
    const auto& [xm, xc] = x.leading();
    const unsigned dx = xm.degree_in(var);
    if (dx < dy) break;
    x -= Poly::term(xc / yc, Monomial::variable(var, dx - dy)) * y;
  }
  return x;
}

Poly univariate_gcd(Poly x, Poly y, const std::string& var) {
  while (!y.is_zero()) {
    Poly r = univariate_remainder(x, y, var);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

// Coefficients of p viewed as a polynomial in the variables other than var,
// each coefficient a univariate polynomial in var.
std::vector<Poly> coefficients_over(const Poly& p, const std::string& var) {
  std::map<Monomial, Poly, MonomialLess> split;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest;
    unsigned power = 0;
    for (const auto& [name, e] : m.factors()) {
      if (name == var)
        power = e;
      else
        rest = rest * Monomial::variable(name, e);
    }
    split[rest] += Poly::term(c, power ? Monomial::variable(var, power) : Monomial());
  }
  std::vector<Poly> out;
  for (auto& [rest, coeff] : split) out.push_back(std::move(coeff));
  return out;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const std::set<std::string> va = a.variables();
  const std::set<std::string> vb = b.variables();
  if (va.empty() || vb.empty()) return Poly(1);
  std::set<std::string> vars = va;
  vars.insert(vb.begin(), vb.end());
  if (vars.size() == 1) return univariate_gcd(a, b, *vars.begin());
  // One side univariate in x: fold its gcd with the x-coefficients of the other.
  const Poly* uni = va.size() == 1 ? &a : vb.size() == 1 ? &b : nullptr;
  if (uni) {
    const std::string var = *uni->variables().begin();
    const Poly& other = uni == &a ? b : a;
    Poly g = *uni;
    for (const Poly& coeff : coefficients_over(other, var)) {
      g = coeff.is_constant() ? Poly(1) : univariate_gcd(g, coeff, var);
      if (g.is_constant()) break;
    }
    if (!g.is_constant()) return g;
  }
  return Poly::term(Gaussian(1), Monomial::gcd(a.monomial_content(), b.monomial_content()));
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = num_.exact_divide(den_)) {
      num_ = std::move(*q);
      den_ = Poly(1);
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.exact_divide(g);
      den_ = *den_.exact_divide(g);
    }
  }
  Gaussian lc = den_.leading().second;
  if (lc != Gaussian(1)) {
    Gaussian inv = Gaussian(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

namespace {

std::string wrap(const std::string& s) {
  bool atomic = std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)); });
  return atomic ? s : "(" + s + ")";
}

}  // namespace

std::string RationalFunction::to_string() const { return wrap(num_.to_string()) + "/" + wrap(den_.to_string()); }

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(const fdeform::Gaussian& v) : Scalar(canonical(v)) {}
Scalar::Scalar(const fdeform::Poly& v) : Scalar(canonical(v)) {}
Scalar::Scalar(const RationalFunction& v) : Scalar(canonical(v)) {}

Scalar Scalar::canonical(const fdeform::Gaussian& g) {
  if (g.is_real()) return Scalar(Storage(g.re()));
  return Scalar(Storage(g));
}

Scalar Scalar::canonical(const fdeform::Poly& p) {
  if (p.is_constant()) return canonical(p.constant());
  return Scalar(Storage(p));
}

Scalar Scalar::canonical(const RationalFunction& f) {
  if (f.den().is_constant()) return canonical(f.num().scaled(fdeform::Gaussian(1) / f.den().constant()));
  return Scalar(Storage(f));
}

Scalar Scalar::symbol(std::string name) {
  if (name.empty() || name == "i") throw std::invalid_argument("invalid symbol name '" + name + "'");
  return Scalar(Storage(fdeform::Poly::variable(std::move(name))));
}

bool Scalar::is_zero() const {
  const auto* r = std::get_if<fdeform::Rational>(&value_);
  return r != nullptr && r->is_zero();
}

bool Scalar::is_one() const {
  const auto* r = std::get_if<fdeform::Rational>(&value_);
  return r != nullptr && *r == fdeform::Rational(1);
}

std::set<std::string> Scalar::variables() const {
  switch (tier()) {
    case Tier::Rational:
    case Tier::Gaussian:
      return {};
    case Tier::Poly:
      return std::get<fdeform::Poly>(value_).variables();
    case Tier::Fraction: {
      const auto& f = std::get<RationalFunction>(value_);
      auto vars = f.num().variables();
      for (const auto& v : f.den().variables()) vars.insert(v);
      return vars;
    }
  }
  return {};
}

std::optional<fdeform::Rational> Scalar::as_rational() const {
  if (const auto* r = std::get_if<fdeform::Rational>(&value_)) return *r;
  return std::nullopt;
}

std::optional<fdeform::Gaussian> Scalar::as_gaussian() const {
  if (const auto* r = std::get_if<fdeform::Rational>(&value_)) return fdeform::Gaussian(*r);
  if (const auto* g = std::get_if<fdeform::Gaussian>(&value_)) return *g;
  return std::nullopt;
}

std::optional<fdeform::Poly> Scalar::as_poly() const {
  if (auto g = as_gaussian()) return fdeform::Poly(*g);
  if (const auto* p = std::get_if<fdeform::Poly>(&value_)) return *p;
  return std::nullopt;
}

RationalFunction Scalar::as_fraction() const {
  if (auto p = as_poly()) return {*p, fdeform::Poly(1)};
  return std::get<RationalFunction>(value_);
}

Scalar Scalar::conj() const {
  switch (tier()) {
    case Tier::Rational:
      return *this;
    case Tier::Gaussian:
      return Scalar(Storage(std::get<fdeform::Gaussian>(value_).conj()));
    case Tier::Poly:
      return Scalar(Storage(std::get<fdeform::Poly>(value_).conj()));
    case Tier::Fraction:
      return Scalar(Storage(std::get<RationalFunction>(value_).conj()));
  }
  return *this;
}

Scalar Scalar::real_part() const {
  if (tier() == Tier::Rational) return *this;
  return (*this + conj()) * ratio(1, 2);
}

Scalar Scalar::imag_part() const {
  if (tier() == Tier::Rational) return Scalar(0);
  return (*this - conj()) * fdeform::Gaussian(fdeform::Rational(0), fdeform::Rational(-1, 2));
}

namespace {

Scalar substitute_poly(const Poly& p, const Bindings& at) {
  Scalar out(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar t(c);
    Monomial rest;
    for (const auto& [name, power] : m.factors()) {
      auto it = at.find(name);
      if (it == at.end()) {
        rest = rest * Monomial::variable(name, power);
      } else {
        t *= it->second.pow(power);
      }
    }
    if (!rest.is_one()) t *= Scalar(Poly::term(Gaussian(1), rest));
    out += t;
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(const Bindings& at) const {
  switch (tier()) {
    case Tier::Rational:
    case Tier::Gaussian:
      return *this;
    case Tier::Poly:
      return substitute_poly(std::get<fdeform::Poly>(value_), at);
    case Tier::Fraction: {
      const auto& f = std::get<RationalFunction>(value_);
      return substitute_poly(f.num(), at) / substitute_poly(f.den(), at);
    }
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (tier()) {
    case Tier::Rational:
      return Scalar(Storage(-std::get<fdeform::Rational>(value_)));
    case Tier::Gaussian:
      return Scalar(Storage(-std::get<fdeform::Gaussian>(value_)));
    case Tier::Poly:
      return Scalar(Storage(-std::get<fdeform::Poly>(value_)));
    case Tier::Fraction: {
      const auto& f = std::get<RationalFunction>(value_);
      return Scalar(Storage(RationalFunction(-f.num(), f.den())));
    }
  }
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  using Tier = Scalar::Tier;
  switch (std::max(a.tier(), b.tier())) {
    case Tier::Rational:
      return std::get<Rational>(a.value_) + std::get<Rational>(b.value_);
    case Tier::Gaussian:
      return *a.as_gaussian() + *b.as_gaussian();
    case Tier::Poly:
      return *a.as_poly() + *b.as_poly();
    case Tier::Fraction: {
      RationalFunction fa = a.as_fraction();
      RationalFunction fb = b.as_fraction();
      return RationalFunction(fa.num() * fb.den() + fb.num() * fa.den(), fa.den() * fb.den());
    }
  }
  return {};
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  using Tier = Scalar::Tier;
  switch (std::max(a.tier(), b.tier())) {
    case Tier::Rational:
      return std::get<Rational>(a.value_) * std::get<Rational>(b.value_);
    case Tier::Gaussian:
      return *a.as_gaussian() * *b.as_gaussian();
    case Tier::Poly:
      return *a.as_poly() * *b.as_poly();
    case Tier::Fraction: {
      RationalFunction fa = a.as_fraction();
      RationalFunction fb = b.as_fraction();
      return RationalFunction(fa.num() * fb.num(), fa.den() * fb.den());
    }
  }
  return {};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  using Tier = Scalar::Tier;
  if (b.is_zero()) throw std::domain_error("division by zero");
  switch (std::max(a.tier(), b.tier())) {
    case Tier::Rational:
      return std::get<Rational>(a.value_) / std::get<Rational>(b.value_);
    case Tier::Gaussian:
      return *a.as_gaussian() / *b.as_gaussian();
    case Tier::Poly:
    case Tier::Fraction: {
      RationalFunction fa = a.as_fraction();
      RationalFunction fb = b.as_fraction();
      return RationalFunction(fa.num() * fb.den(), fa.den() * fb.num());
    }
  }
  return {};
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

// ------------------------------------------------------------------ parser

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool is_digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }
  bool is_ident_char_at(std::size_t p) const {
    return p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
  }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit_at(pos_)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_space();
      std::string e = digits();
      if (e.empty() || e.size() > 6) fail("expected a small non-negative integer exponent");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (is_digit_at(pos_)) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit_at(pos_ + 1)) {
        ++pos_;
        den = digits();
      }
      Rational value = Rational::parse(num + "/" + den);
      if (pos_ < text_.size() && text_[pos_] == 'i' && !is_ident_char_at(pos_ + 1)) {
        ++pos_;
        return Gaussian(Rational(0), value);
      }
      return value;
    }
    if (is_ident_char_at(pos_) && !is_digit_at(pos_)) {
      std::size_t start = pos_;
      while (is_ident_char_at(pos_)) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return Scalar::i();
      return Scalar::symbol(name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace fdeform
