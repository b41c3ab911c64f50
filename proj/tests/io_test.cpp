#include <gtest/gtest.h>

#include "fdeform/fixtures.hpp"
#include "fdeform/io.hpp"
#include "support/printers.hpp"
#include "support/generators.hpp"

using namespace fdeform;
using nlohmann::json;

TEST(Io, MatrixAsNestedStrings) {
  const json j = io::to_json(regular_representation().c());
  EXPECT_EQ(j[2], json({"1", "0", "0", "z"}));
  EXPECT_EQ(j[3][1], "-1");
}

TEST(Io, MatrixRoundTrip) {
  fdeform::testing::Gen gen(61);
  for (Scalar::Tier tier : {Scalar::Tier::Gaussian, Scalar::Tier::Poly, Scalar::Tier::Fraction})
    for (int k = 0; k < 10; ++k) {
      const Matrix m = gen.matrix(3, 2, tier);
      EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
    }
  EXPECT_THROW(io::matrix_from_json(json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"("1")")), std::invalid_argument);
}

TEST(Io, RepresentationRoundTrip) {
  for (const Representation& rep : {regular_representation(), fixtures::rho3_empty(), fixtures::rho_trivial(2),
                                    fixtures::rho_block_form(Scalar::ratio(1, 2))}) {
    const json j = io::to_json(rep);
    EXPECT_EQ(j.at("dim").get<std::size_t>(), rep.dim());
    EXPECT_EQ(io::representation_from_json(j), rep);
  }
  json bad = io::to_json(fixtures::rho_star());
  bad["dim"] = 3;
  EXPECT_THROW(io::representation_from_json(bad), std::invalid_argument);
}

TEST(Io, NormalElementInBasisOrder) {
  const NormalElement x({Scalar::zeta(), Scalar(0), Scalar(0), Scalar(-1)});
  EXPECT_EQ(io::to_json(x), json({"z", "0", "0", "-1"}));
}

TEST(Io, WitnessesCarryTheirEquations) {
  const EmbeddingWitness w = extract_regular_subrep(regular_representation(Scalar(0)));
  const json jw = io::to_json(w);
  EXPECT_TRUE(jw.contains("equation"));
  EXPECT_EQ(jw.at("v1_index"), 0);

  // Re-verify an η witness from its JSON form alone.
  const EtaSolutionSpace space = solve_pseudo_unitary(regular_representation(Scalar(1)));
  const json js = io::to_json(space);
  ASSERT_FALSE(js.at("invertible_example").is_null());
  const Matrix eta = io::matrix_from_json(js.at("invertible_example"));
  const Representation rho = regular_representation(Scalar(1));
  EXPECT_EQ(eta * rho.cdag(), rho.c().adjoint() * eta);
  EXPECT_EQ(js.at("basis").size(), space.basis.size());

  const json jo = io::to_json(unitary_obstruction(fixtures::mu()));
  EXPECT_EQ(jo.at("trace_value"), "2");
  EXPECT_EQ(jo.at("frobenius_sum"), "1");
}
