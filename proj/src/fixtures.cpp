#include "fdeform/fixtures.hpp"

#include <charconv>
#include <string>

#include "fdeform/errors.hpp"

namespace fdeform::fixtures {

Representation rho_trivial(std::size_t dim, const Scalar& zeta) {
  return {Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim), zeta};
}

Representation rho_star() {
  return Representation::unital(Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}, Scalar(1));
}

Representation rho1_empty() { return Representation::unital(Matrix{{0}}, Matrix{{0}}, Scalar(0)); }

Representation rho2_empty() { return Representation::unital(Matrix(2, 2), mu(), Scalar(0)); }

Representation rho3_empty() { return Representation::unital(nu(), nu_plus(), Scalar(0)); }

Matrix mu() { return {{0, 1}, {0, 0}}; }

Matrix nu() { return {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}; }

Matrix nu_plus() { return {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}; }

ClearedMatrix eta_standard() {
  const Scalar z = Scalar::zeta();
  return {Matrix{{0, 1, 1, 0}, {1, 0, 0, z}, {1, 0, 0, 0}, {0, z, 0, 0}}, z};
}

Matrix s_standard() {
  const Scalar z = Scalar::zeta();
  return {{z, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}};
}

Representation rho_block_form(const Scalar& zeta) {
  const Scalar& z = zeta;
  Matrix c{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, z}, {0, 0, 0, 0}};
  Matrix cdag{{0, 0, 0, 0}, {z, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
  return Representation::unital(std::move(c), std::move(cdag), zeta);
}

Fixture by_name(std::string_view name) {
  if (name == "rho_star") return rho_star();
  if (name == "rho1_empty") return rho1_empty();
  if (name == "rho2_empty") return rho2_empty();
  if (name == "rho3_empty") return rho3_empty();
  if (name == "eta_standard") return eta_standard();
  if (name == "s_standard") return s_standard();
  if (name == "mu") return mu();
  if (name == "nu") return nu();
  if (name == "nu_plus") return nu_plus();
  constexpr std::string_view prefix = "rho_trivial(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && d > 0) return rho_trivial(d);
  }
  throw RepresentationError(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace fdeform::fixtures
