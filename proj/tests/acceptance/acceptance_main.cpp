// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is the number of failed criteria (0 when everything holds).

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdeform/algebra.hpp"
#include "fdeform/analysis.hpp"
#include "fdeform/errors.hpp"
#include "fdeform/fixtures.hpp"
#include "fdeform/linalg.hpp"
#include "fdeform/representation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/run.hpp"

using namespace fdeform;
using nlohmann::json;
namespace oracle = fdeform::testing;

namespace {

const Scalar z = Scalar::zeta();

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

Outcome matrix_fidelity() {
  Outcome o;
  const Representation rho = regular_representation();
  o.require(rho.one() == oracle::displayed_rho_one(), "rho(1)");
  o.require(rho.cdag() == oracle::displayed_rho_cdag(), "rho(c+)");
  o.require(rho.c() == oracle::displayed_rho_c(), "rho(c)");
  o.require(rho.n() == oracle::displayed_rho_n(), "rho(n)");
  return o;
}

Outcome relations_and_homomorphism() {
  Outcome o;
  const Representation rho = regular_representation();
  const RelationResidues res = verify_relations(rho);
  o.require(res.c_squared.is_zero(), "c^2 residue");
  o.require(res.cdag_squared.is_zero(), "c+^2 residue");
  o.require(res.anticommutator.is_zero(), "anticommutator residue");
  o.require(verify_homomorphism(rho), "16 basis pairs");
  const ConfluenceReport conf = check_confluence(FermionAlgebra());
  o.require(conf.unresolved().empty(), "unresolved ambiguities");
  o.require(conf.triples_checked == 64 && conf.non_associative.empty(), "64 associative triples");
  return o;
}

Outcome faithfulness_ladder() {
  Outcome o;
  const std::vector<std::pair<const char*, Representation>> ladder = {
      {"rho_trivial", fixtures::rho_trivial(2)},   {"rho1_empty", fixtures::rho1_empty()},
      {"rho2_empty", fixtures::rho2_empty()},      {"rho3_empty", fixtures::rho3_empty()},
      {"rho0", regular_representation(Scalar(0))}};
  const std::size_t expected[] = {4, 3, 2, 1, 0};
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    const std::size_t dim = representation_kernel(ladder[k].second).dim();
    o.require(dim == expected[k], std::string(ladder[k].first) + " kernel dim " + std::to_string(dim));
  }
  return o;
}

Outcome pseudo_unitarity_dichotomy() {
  Outcome o;
  const Representation rho = regular_representation();
  const Matrix eta = fixtures::eta_standard().matrix;
  o.require(eta * rho.cdag() == rho.c().adjoint() * eta, "cleared eta intertwines symbolically");
  o.require(determinant(eta.substitute({{"z", Scalar(1)}})) == Scalar(1), "det of cleared eta at zeta=1 is 1");
  const EtaSolutionSpace at_zero = solve_pseudo_unitary(regular_representation(Scalar(0)));
  o.require(at_zero.generic_det.is_zero(),
            "zeta=0 generic det over the full Hermitian solution space is " + at_zero.generic_det.to_string() +
                " (dim " + std::to_string(at_zero.basis.size()) + "), not the zero polynomial");
  return o;
}

Outcome decomposition() {
  Outcome o;
  o.require(determinant(fixtures::s_standard()) == z, "det S = z");
  const Decomposition dec = conjugate_and_decompose(regular_representation(), fixtures::s_standard());
  const Matrix c_block{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, z}, {0, 0, 0, 0}};
  const Matrix cdag_block{{0, 0, 0, 0}, {z, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
  const Matrix n_block{{0, 0, 0, 0}, {0, z, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, z}};
  o.require(dec.conjugated.one() == Matrix::identity(4), "rho'(1)");
  o.require(dec.conjugated.c() == c_block, "rho'(c)");
  o.require(dec.conjugated.cdag() == cdag_block, "rho'(c+)");
  o.require(dec.conjugated.n() == n_block, "rho'(n)");
  const Decomposition one = conjugate_and_decompose(regular_representation(Scalar(1)), fixtures::s_standard());
  o.require(one.block_reps.size() == 2, "two blocks at zeta=1");
  for (const Representation& b : one.block_reps) o.require(b == fixtures::rho_star(), "block equals rho_star");
  bool singular = false;
  try {
    conjugate_and_decompose(regular_representation(Scalar(0)), fixtures::s_standard());
  } catch (const RepresentationError& e) {
    singular = e.kind() == ErrorKind::SingularS;
  }
  o.require(singular, "SingularS at zeta=0");
  return o;
}

Outcome theorem_at_scale() {
  Outcome o;
  const Representation rho0 = regular_representation(Scalar(0));
  const ExtraSummand extras[] = {ExtraSummand::None, ExtraSummand::Rho1Empty, ExtraSummand::Rho2Empty,
                                 ExtraSummand::Rho3Empty};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    try {
      const Representation rep = random_faithful_rep(seed, extras[seed % 4]);
      o.require(is_faithful(rep), "trial " + std::to_string(seed) + " not faithful");
      o.require(extract_regular_subrep(rep).restricted == rho0, "trial " + std::to_string(seed) + " mismatch");
    } catch (const RepresentationError& e) {
      o.require(false, "trial " + std::to_string(seed) + ": " + e.what());
    }
  }
  for (const Representation& rep : {fixtures::rho1_empty(), fixtures::rho2_empty(), fixtures::rho3_empty()}) {
    bool not_faithful = false;
    try {
      extract_regular_subrep(rep);
    } catch (const RepresentationError& e) {
      not_faithful = e.kind() == ErrorKind::NotFaithful;
    }
    o.require(not_faithful, "nonfaithful fixture of dim " + std::to_string(rep.dim()));
  }
  return o;
}

Outcome minimality_certificate() {
  Outcome o;
  const Scalar cert = generic_independence_certificate();
  const Scalar v1_4 = Scalar::symbol("v1").pow(4);
  o.require(cert == v1_4 || cert == -v1_4, "certificate " + cert.to_string());
  return o;
}

Outcome unitary_obstruction_identity() {
  Outcome o;
  oracle::Gen gen(2024);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(1 + k % 5);
    const ObstructionCertificate cert = unitary_obstruction(gen.matrix(n, n, Scalar::Tier::Gaussian));
    o.require(cert.trace_value == Scalar(2) * cert.frobenius_sum, "trace identity, matrix " + std::to_string(k));
  }
  o.require(unitary_obstruction(fixtures::mu()).anticomm == Matrix::identity(2), "mu anticommutator");
  return o;
}

Outcome invariant_subspace_cascade() {
  Outcome o;
  const std::vector<std::pair<const char*, Representation>> fixtures_at_zero = {
      {"rho0", regular_representation(Scalar(0))},
      {"rho2_empty", fixtures::rho2_empty()},
      {"rho3_empty", fixtures::rho3_empty()},
      {"rho_trivial(2)", fixtures::rho_trivial(2)},
      {"rho_trivial(3)", fixtures::rho_trivial(3)}};
  for (const auto& [name, rep] : fixtures_at_zero) {
    const auto w = find_invariant_subspace_grassmann(rep);
    o.require(w && !w->is_zero() && !w->is_full() && is_stable(rep, *w), std::string(name) + " proper stable subspace");
  }
  o.require(!find_invariant_subspace_grassmann(fixtures::rho1_empty()).has_value(), "rho1_empty has none");
  const Representation rho0 = regular_representation(Scalar(0));
  const SubspaceBasis im_n = column_space(rho0.n());
  o.require(restrict_to(rho0, im_n) == fixtures::rho1_empty(), "rho0 on Im n acts as rho1_empty");
  return o;
}

Outcome cli_end_to_end() {
  Outcome o;
  const auto verify = oracle::run_cli("verify --zeta z");
  o.require(verify.exit_code == 0, "verify --zeta z exit " + std::to_string(verify.exit_code));
  o.require(oracle::schema_valid(verify.out, std::string(FDEFORM_SCRATCH) + "/acceptance_verify.json"),
            "verify report schema-valid");

  const auto sweep = oracle::run_cli("sweep --grid 11 --format json");
  o.require(sweep.exit_code == 0, "sweep exit");
  const json rows = json::parse(sweep.out).at("rows");
  o.require(rows.size() == 11, "sweep row count");
  for (const json& row : rows) {
    const bool at_zero = row.at("zeta") == "0";
    const std::string where = "zeta=" + row.at("zeta").get<std::string>();
    o.require(row.at("s_invertible").get<bool>() == !at_zero, where + " s_invertible");
    o.require(row.at("eta_invertible_exists").get<bool>() == !at_zero,
              where + " eta_invertible_exists=" + (row.at("eta_invertible_exists").get<bool>() ? "true" : "false"));
  }

  const auto a = oracle::run_cli("theorem-check --trials 100 --seed 42");
  const auto b = oracle::run_cli("theorem-check --trials 100 --seed 42");
  o.require(a.exit_code == 0, "theorem-check exit");
  o.require(json::parse(a.out).at("summary").at("failures") == 0, "theorem-check failures");
  o.require(a.out == b.out, "theorem-check byte-reproducible");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"matrix fidelity", matrix_fidelity},
      {"relations and homomorphism", relations_and_homomorphism},
      {"faithfulness ladder", faithfulness_ladder},
      {"pseudo-unitarity dichotomy", pseudo_unitarity_dichotomy},
      {"decomposition", decomposition},
      {"theorem at scale", theorem_at_scale},
      {"minimality certificate", minimality_certificate},
      {"unitary obstruction", unitary_obstruction_identity},
      {"invariant-subspace cascade", invariant_subspace_cascade},
      {"CLI end-to-end", cli_end_to_end},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first;
    if (!o.pass) {
      std::cout << "  [";
      for (std::size_t j = 0; j < o.notes.size(); ++j) std::cout << (j ? "; " : "") << o.notes[j];
      std::cout << "]";
      ++failed;
    }
    std::cout << "\n";
  }
  return failed;
}
