#include "fdeform/commands.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fdeform/analysis.hpp"
#include "fdeform/errors.hpp"
#include "fdeform/fixtures.hpp"
#include "fdeform/io.hpp"

namespace fdeform::cli {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json, csv or pretty)");
}

ZetaArg parse_zeta(std::string_view text) {
  if (text == "z") return {"z", Scalar::zeta()};
  Rational r = Rational::parse(text);
  if (r < Rational(0) || r > Rational(1))
    throw std::invalid_argument("zeta must lie in [0, 1], got " + r.to_string());
  return {r.to_string(), Scalar(r)};
}

std::pair<std::size_t, std::size_t> parse_dims(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed dimension range '" + std::string(text) + "'");
    return v;
  };
  const auto dash = text.find('-');
  const std::size_t lo = number(dash == std::string_view::npos ? text : text.substr(0, dash));
  const std::size_t hi = dash == std::string_view::npos ? lo : number(text.substr(dash + 1));
  if (lo < 4 || hi < lo) throw std::invalid_argument("dimension range must satisfy 4 <= lo <= hi");
  return {lo, hi};
}

// ----------------------------------------------------------------- reports

bool ReportDocument::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

json ReportDocument::to_json() const {
  json checks_json = json::array();
  for (const Check& c : checks)
    checks_json.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  return {{"command", command}, {"zeta_points", zeta_points}, {"checks", checks_json},
          {"seed", seed},       {"version", version},         {"summary", summary}};
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::Json:
      return doc.to_json().dump(2) + "\n";
    case Format::Csv: {
      std::string out = "name,status,details\n";
      for (const Check& c : doc.checks)
        out += csv_escape(c.name) + "," + (c.pass ? "pass" : "fail") + "," + csv_escape(c.details.dump()) + "\n";
      return out;
    }
    case Format::Pretty: {
      std::ostringstream out;
      out << doc.command << " (version " << doc.version << ")";
      if (!doc.zeta_points.empty()) out << ", zeta = " << doc.zeta_points.front();
      out << "\n";
      for (const Check& c : doc.checks) out << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << "  " << c.details.dump() << "\n";
      if (!doc.summary.empty()) out << "summary: " << doc.summary.dump() << "\n";
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------- matrices

namespace {

Matrix specialize(const Matrix& m, const ZetaArg& zeta) {
  return zeta.symbolic() ? m : m.substitute({{"z", zeta.value}});
}

json representation_matrices(const Representation& rep) {
  return {{"one", io::to_json(rep.one())},
          {"cdag", io::to_json(rep.cdag())},
          {"c", io::to_json(rep.c())},
          {"n", io::to_json(rep.n())}};
}

}  // namespace

json matrices_document(const ZetaArg& zeta) {
  const Representation rho = regular_representation(zeta.value);
  const Matrix s = specialize(fixtures::s_standard(), zeta);
  const fixtures::ClearedMatrix eta = fixtures::eta_standard();
  json doc = {{"zeta", zeta.literal},
              {"representation", representation_matrices(rho)},
              {"eta_cleared",
               {{"matrix", io::to_json(specialize(eta.matrix, zeta))},
                {"cleared_by", eta.cleared_by.to_string()}}},
              {"s", {{"matrix", io::to_json(s)}, {"det", determinant(s).to_string()}}}};
  try {
    Decomposition dec = conjugate_and_decompose(rho, fixtures::s_standard());
    json blocks = json::array();
    for (const auto& b : dec.blocks) blocks.push_back(b);
    json conj = representation_matrices(dec.conjugated);
    conj["status"] = "ok";
    conj["blocks"] = blocks;
    doc["conjugated"] = conj;
  } catch (const RepresentationError& e) {
    if (e.kind() != ErrorKind::SingularS) throw;
    doc["conjugated"] = {{"status", "singular_s"}, {"reason", e.what()}};
  }
  return doc;
}

std::string render_matrices(const ZetaArg& zeta, Format format) {
  const json doc = matrices_document(zeta);
  std::vector<std::pair<std::string, const json*>> named = {
      {"rho(1)", &doc["representation"]["one"]}, {"rho(c+)", &doc["representation"]["cdag"]},
      {"rho(c)", &doc["representation"]["c"]},   {"rho(n)", &doc["representation"]["n"]},
      {"eta (cleared)", &doc["eta_cleared"]["matrix"]}, {"S", &doc["s"]["matrix"]}};
  const bool conjugated = doc["conjugated"]["status"] == "ok";
  if (conjugated) {
    named.emplace_back("rho'(1)", &doc["conjugated"]["one"]);
    named.emplace_back("rho'(c+)", &doc["conjugated"]["cdag"]);
    named.emplace_back("rho'(c)", &doc["conjugated"]["c"]);
    named.emplace_back("rho'(n)", &doc["conjugated"]["n"]);
  }
  switch (format) {
    case Format::Json:
      return doc.dump(2) + "\n";
    case Format::Csv: {
      std::string out = "matrix,row,col,value\n";
      for (const auto& [name, m] : named)
        for (std::size_t r = 0; r < m->size(); ++r)
          for (std::size_t c = 0; c < (*m)[r].size(); ++c)
            out += csv_escape(name) + "," + std::to_string(r + 1) + "," + std::to_string(c + 1) + "," +
                   csv_escape((*m)[r][c].get<std::string>()) + "\n";
      return out;
    }
    case Format::Pretty: {
      std::string out = "zeta = " + zeta.literal + "\n";
      for (const auto& [name, m] : named) {
        out += "\n" + name + " =\n" + io::matrix_from_json(*m).to_string();
      }
      out += "\ndet S = " + doc["s"]["det"].get<std::string>() + "\n";
      if (conjugated) {
        out += "blocks = " + doc["conjugated"]["blocks"].dump() + "\n";
      } else {
        out += "conjugation: S is singular at this zeta\n";
      }
      return out;
    }
  }
  return {};
}

// ------------------------------------------------------------------ verify

namespace {

bool divisible_by_zeta(const Scalar& s) {
  auto p = s.as_poly();
  if (!p || p->is_zero()) return false;
  for (const auto& [m, c] : p->terms())
    if (m.degree_in("z") == 0) return false;
  return true;
}

Check relations_check(const Representation& rho) {
  const RelationResidues res = verify_relations(rho);
  return {"relations",
          res.passes(),
          {{"c_squared_zero", res.c_squared.is_zero()},
           {"cdag_squared_zero", res.cdag_squared.is_zero()},
           {"anticommutator_residue_zero", res.anticommutator.is_zero()}}};
}

Check confluence_check(const Scalar& zeta) {
  const ConfluenceReport rep = check_confluence(FermionAlgebra(zeta));
  return {"confluence",
          rep.passes(),
          {{"overlaps", rep.overlaps.size()},
           {"unresolved", rep.unresolved().size()},
           {"triples", rep.triples_checked},
           {"non_associative", rep.non_associative.size()}}};
}

Check decomposition_check(const Representation& rho, const ZetaArg& zeta) {
  Check check{"decomposition"};
  try {
    const Decomposition dec = conjugate_and_decompose(rho, fixtures::s_standard());
    const bool matches = dec.conjugated == fixtures::rho_block_form(zeta.value);
    const std::vector<std::vector<std::size_t>> expected_blocks = {{0, 1}, {2, 3}};
    check.pass = !zeta.value.is_zero() && matches && dec.blocks == expected_blocks;
    check.details = {{"matches_block_form", matches}, {"blocks", dec.blocks}, {"zero_locus", dec.s_report.zero_locus()}};
    if (zeta.value.is_one()) {
      bool star = dec.block_reps.size() == 2;
      for (const auto& b : dec.block_reps) star = star && b == fixtures::rho_star();
      check.details["rho_star_blocks"] = star;
      check.pass = check.pass && star;
    }
  } catch (const RepresentationError& e) {
    if (e.kind() != ErrorKind::SingularS) throw;
    check.pass = zeta.value.is_zero();
    check.details = {{"expected", "SingularS"}, {"observed", e.what()}};
  }
  return check;
}

Check pseudo_unitarity_check(const Representation& rho, const ZetaArg& zeta) {
  const EtaSolutionSpace space = solve_pseudo_unitary(rho);
  const Matrix eta = specialize(fixtures::eta_standard().matrix, zeta);
  const bool in_space = space.contains(eta);
  Check check{"pseudo_unitarity"};
  check.details = {{"solution_dim", space.basis.size()},
                   {"generic_det", space.generic_det.to_string()},
                   {"eta_standard_in_space", in_space},
                   {"invertible_example",
                    space.invertible_example ? io::to_json(*space.invertible_example) : json(nullptr)}};
  if (zeta.symbolic()) {
    const bool divisible = divisible_by_zeta(space.generic_det);
    check.pass = in_space && space.admits_invertible() && divisible;
    check.details["expected"] = "invertible eta over Q(z), generic det divisible by z";
    check.details["generic_det_divisible_by_z"] = divisible;
  } else if (!zeta.value.is_zero()) {
    const Scalar det = determinant(eta);
    check.pass = in_space && !det.is_zero() && space.admits_invertible();
    check.details["expected"] = "invertible eta";
    check.details["eta_standard_det"] = det.to_string();
  } else {
    check.pass = !space.admits_invertible();
    check.details["expected"] = "no invertible eta";
  }
  return check;
}

Check extraction_check(const Representation& rho) {
  try {
    const EmbeddingWitness w = extract_regular_subrep(rho);
    return {"regular_subrep_extraction", w.restricted == rho, {{"v1_index", w.v1_index}}};
  } catch (const RepresentationError& e) {
    return {"regular_subrep_extraction", false, {{"error", e.what()}}};
  }
}

Check certificate_check() {
  const Scalar cert = generic_independence_certificate();
  const Scalar v1_4 = Scalar::symbol("v1").pow(4);
  return {"independence_certificate", cert == v1_4 || cert == -v1_4, {{"determinant", cert.to_string()}}};
}

Check invariant_subspace_check(const Representation& rho0) {
  auto w = find_invariant_subspace_grassmann(rho0);
  Check check{"invariant_subspace"};
  if (!w) {
    check.details = {{"found", false}};
    return check;
  }
  Vector e4(4);
  e4[3] = Scalar(1);
  const bool is_image_n = w->dim() == 1 && w->contains(e4);
  const bool acts_as_rho1 = restrict_to(rho0, *w) == fixtures::rho1_empty();
  check.pass = is_image_n && acts_as_rho1 && is_stable(rho0, *w);
  check.details = {{"dim", w->dim()}, {"is_image_of_n", is_image_n}, {"restriction_is_rho1_empty", acts_as_rho1}};
  return check;
}

Check absorb_check(const Representation& rho) {
  const Representation absorbed = absorb_deformation(rho);
  const bool ok = absorbed.zeta().is_one() && verify_relations(absorbed).passes();
  return {"absorb_deformation", ok, {{"zeta_after", absorbed.zeta().to_string()}}};
}

}  // namespace

ReportDocument run_verify(const ZetaArg& zeta) {
  ReportDocument doc;
  doc.command = "verify";
  doc.zeta_points = {zeta.literal};
  const Representation rho = regular_representation(zeta.value);

  doc.checks.push_back(relations_check(rho));
  doc.checks.push_back({"homomorphism", verify_homomorphism(rho), {{"pairs", 16}}});
  doc.checks.push_back(confluence_check(zeta.value));
  const SubspaceBasis kernel = representation_kernel(rho);
  doc.checks.push_back({"faithfulness", kernel.is_zero(), {{"kernel_dim", kernel.dim()}}});
  const Scalar det_s = determinant(specialize(fixtures::s_standard(), zeta));
  doc.checks.push_back({"s_determinant", det_s == zeta.value, {{"det_s", det_s.to_string()}}});
  doc.checks.push_back(decomposition_check(rho, zeta));
  doc.checks.push_back(pseudo_unitarity_check(rho, zeta));
  doc.checks.push_back(extraction_check(rho));
  doc.checks.push_back(certificate_check());
  if (zeta.value.is_zero()) doc.checks.push_back(invariant_subspace_check(rho));
  if (!zeta.symbolic() && !zeta.value.is_zero()) doc.checks.push_back(absorb_check(rho));

  std::size_t failures = 0;
  for (const Check& c : doc.checks) failures += c.pass ? 0 : 1;
  doc.summary = {{"checks", doc.checks.size()}, {"failures", failures}};
  return doc;
}

// ------------------------------------------------------------------- sweep

SweepRow sweep_row(const Rational& zeta) {
  const Scalar z(zeta);
  const Representation rho = regular_representation(z);
  SweepRow row;
  row.zeta = zeta.to_string();
  row.s_invertible = !determinant(fixtures::s_standard().substitute({{"z", z}})).is_zero();
  row.eta_invertible_exists = solve_pseudo_unitary(rho).admits_invertible();
  try {
    row.decomposes = conjugate_and_decompose(rho, fixtures::s_standard()).blocks.size() == 2;
  } catch (const RepresentationError& e) {
    if (e.kind() != ErrorKind::SingularS) throw;
    row.decomposes = false;
  }
  row.faithful = is_faithful(rho);
  return row;
}

std::vector<SweepRow> run_sweep(std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("sweep grid must be at least 2");
  std::vector<SweepRow> rows;
  rows.reserve(grid);
  const long last = static_cast<long>(grid - 1);
  for (long k = 0; k <= last; ++k) rows.push_back(sweep_row(Rational(k, last)));
  return rows;
}

std::string render_sweep(const std::vector<SweepRow>& rows, Format format) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  switch (format) {
    case Format::Json: {
      json out = json::array();
      for (const SweepRow& r : rows)
        out.push_back({{"zeta", r.zeta},
                       {"s_invertible", r.s_invertible},
                       {"eta_invertible_exists", r.eta_invertible_exists},
                       {"decomposes", r.decomposes},
                       {"faithful", r.faithful}});
      return json{{"command", "sweep"}, {"version", kVersion}, {"rows", out}}.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = "zeta,s_invertible,eta_invertible_exists,decomposes,faithful\n";
      for (const SweepRow& r : rows)
        out += r.zeta + "," + flag(r.s_invertible) + "," + flag(r.eta_invertible_exists) + "," + flag(r.decomposes) +
               "," + flag(r.faithful) + "\n";
      return out;
    }
    case Format::Pretty: {
      std::ostringstream out;
      out << "zeta    s_invertible  eta_invertible_exists  decomposes  faithful\n";
      for (const SweepRow& r : rows) {
        std::string z = r.zeta;
        z.resize(std::max<std::size_t>(z.size(), 8), ' ');
        out << z << std::string(12 - std::string(flag(r.s_invertible)).size(), ' ') << flag(r.s_invertible)
            << std::string(23 - std::string(flag(r.eta_invertible_exists)).size(), ' ')
            << flag(r.eta_invertible_exists) << std::string(12 - std::string(flag(r.decomposes)).size(), ' ')
            << flag(r.decomposes) << std::string(10 - std::string(flag(r.faithful)).size(), ' ') << flag(r.faithful)
            << "\n";
      }
      return out.str();
    }
  }
  return {};
}

// ----------------------------------------------------------- theorem check

namespace {

struct TrialShape {
  ExtraSummand extra;
  std::size_t pad;
  const char* label;
};

TrialShape shape_for_dim(std::size_t dim) {
  switch (dim) {
    case 4:
      return {ExtraSummand::None, 0, "none"};
    case 5:
      return {ExtraSummand::Rho1Empty, 0, "rho1_empty"};
    case 6:
      return {ExtraSummand::Rho2Empty, 0, "rho2_empty"};
    default:
      return {ExtraSummand::Rho3Empty, dim - 7, "rho3_empty"};
  }
}

std::string trial_name(std::size_t t) {
  std::string n = std::to_string(t + 1);
  return "trial-" + std::string(n.size() < 3 ? 3 - n.size() : 0, '0') + n;
}

}  // namespace

ReportDocument run_theorem_check(const TheoremCheckOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("theorem-check needs at least one trial");
  ReportDocument doc;
  doc.command = "theorem-check";
  doc.zeta_points = {"0"};
  doc.seed = options.seed;
  const Representation rho0 = regular_representation(Scalar(0));
  std::mt19937_64 master(options.seed);
  const std::size_t span = options.max_dim - options.min_dim + 1;
  std::size_t failures = 0;

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t dim = options.min_dim + t % span;
    const TrialShape shape = shape_for_dim(dim);
    const std::uint64_t trial_seed = master();
    Check check{trial_name(t)};
    check.details = {{"seed", trial_seed}, {"dim", dim}, {"extra", shape.label}, {"pad", shape.pad}};
    try {
      const Representation rep = random_faithful_rep(trial_seed, shape.extra, shape.pad);
      const bool faithful = is_faithful(rep);
      const EmbeddingWitness w = extract_regular_subrep(rep);
      check.pass = faithful && w.restricted == rho0;
      check.details["v1_index"] = w.v1_index;
      check.details["kernel_zero"] = faithful;
    } catch (const RepresentationError& e) {
      check.details["error"] = e.what();
    }
    failures += check.pass ? 0 : 1;
    doc.checks.push_back(std::move(check));
  }

  const std::vector<std::pair<std::string, Representation>> nonfaithful = {
      {"rho1_empty", fixtures::rho1_empty()},
      {"rho2_empty", fixtures::rho2_empty()},
      {"rho3_empty", fixtures::rho3_empty()}};
  for (const auto& [name, rep] : nonfaithful) {
    Check check{"nonfaithful-" + name};
    check.details = {{"expected", "NotFaithful"}};
    try {
      extract_regular_subrep(rep);
      check.details["observed"] = "extraction succeeded";
    } catch (const RepresentationError& e) {
      check.pass = e.kind() == ErrorKind::NotFaithful;
      check.details["observed"] = std::string(to_string(e.kind()));
    }
    failures += check.pass ? 0 : 1;
    doc.checks.push_back(std::move(check));
  }

  doc.summary = {{"trials", options.trials},
                 {"dims", {options.min_dim, options.max_dim}},
                 {"fixture_checks", nonfaithful.size()},
                 {"failures", failures}};
  return doc;
}

}  // namespace fdeform::cli
