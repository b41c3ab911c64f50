#pragma once

// JSON serialization. Scalars travel as strings in the Scalar::to_string
// grammar; matrices as nested arrays of such strings.

#include <json.hpp>

#include "fdeform/algebra.hpp"
#include "fdeform/analysis.hpp"
#include "fdeform/matrix.hpp"
#include "fdeform/representation.hpp"

namespace fdeform::io {

using nlohmann::json;

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Vector& v);

/// 4-tuple of scalar strings in basis order (1, c⁺, c, n).
json to_json(const NormalElement& x);

/// {dim, zeta, c, cdag, one}
json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

// Witnesses carry the equations they satisfy so they can be re-checked
// without this library.
json to_json(const SimilarityWitness& w);
json to_json(const EtaSolutionSpace& space);
json to_json(const EmbeddingWitness& w);
json to_json(const ObstructionCertificate& cert);

}  // namespace fdeform::io
