#include "fdeform/io.hpp"

#include <stdexcept>

namespace fdeform::io {

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(j[r][c].get<std::string>());
  }
  return m;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

json to_json(const NormalElement& x) {
  json out = json::array();
  for (const Scalar& s : x.coeffs()) out.push_back(s.to_string());
  return out;
}

json to_json(const Representation& rep) {
  return {{"dim", rep.dim()},
          {"zeta", rep.zeta().to_string()},
          {"c", to_json(rep.c())},
          {"cdag", to_json(rep.cdag())},
          {"one", to_json(rep.one())}};
}

Representation representation_from_json(const json& j) {
  Representation rep(matrix_from_json(j.at("c")), matrix_from_json(j.at("cdag")), matrix_from_json(j.at("one")),
                     Scalar::parse(j.at("zeta").get<std::string>()));
  if (rep.dim() != j.at("dim").get<std::size_t>()) throw std::invalid_argument("dim does not match matrices");
  return rep;
}

json to_json(const SimilarityWitness& w) {
  return {{"s", to_json(w.s)}, {"det_s", w.det_s.to_string()}, {"equation", "S*B(x) = A(x)*S for x in {c, cdag, 1}"}};
}

json to_json(const EtaSolutionSpace& space) {
  json basis = json::array();
  for (const Matrix& m : space.basis) basis.push_back(to_json(m));
  json out = {{"basis", basis},
              {"symbols", space.symbols},
              {"generic_det", space.generic_det.to_string()},
              {"equation", "eta*cdag = c^dagger*eta, eta = eta^dagger"}};
  out["invertible_example"] = space.invertible_example ? to_json(*space.invertible_example) : json(nullptr);
  return out;
}

json to_json(const EmbeddingWitness& w) {
  return {{"v1_index", w.v1_index},
          {"v1", to_json(w.v1)},
          {"frame", to_json(w.frame)},
          {"restricted", to_json(w.restricted)},
          {"equation", "rho(x)*F = F*restricted(x), F = [v1, cdag*v1, c*v1, n*v1]"}};
}

json to_json(const ObstructionCertificate& cert) {
  return {{"m", to_json(cert.m)},
          {"anticomm", to_json(cert.anticomm)},
          {"trace_value", cert.trace_value.to_string()},
          {"frobenius_sum", cert.frobenius_sum.to_string()},
          {"equation", "trace(m*m^dagger + m^dagger*m) = 2*sum|m_ij|^2"}};
}

}  // namespace fdeform::io
