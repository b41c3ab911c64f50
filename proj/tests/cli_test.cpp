#include <gtest/gtest.h>

#include <json.hpp>

#include "support/run.hpp"

using fdeform::testing::read_file;
using fdeform::testing::run_cli;
using fdeform::testing::schema_valid;
using nlohmann::json;

namespace {

std::string scratch(const std::string& name) { return std::string(FDEFORM_SCRATCH) + "/" + name; }

json check_named(const json& report, const std::string& name) {
  for (const json& c : report.at("checks"))
    if (c.at("name") == name) return c;
  ADD_FAILURE() << "no check named " << name;
  return json::object();
}

}  // namespace

TEST(Cli, VerifySymbolicPassesAndMatchesGolden) {
  const auto r = run_cli("verify --zeta z");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(schema_valid(r.out, scratch("verify_z.json")));
  EXPECT_EQ(r.out, read_file(std::string(FDEFORM_GOLDEN) + "/verify_z.json"));
  const json checks = json::parse(r.out).at("checks");
  ASSERT_FALSE(checks.empty());
  for (const json& c : checks) EXPECT_EQ(c.at("status"), "pass") << c.at("name");
}

TEST(Cli, VerifyAtOneReportsStarBlocks) {
  const auto r = run_cli("verify --zeta 1");
  EXPECT_EQ(r.exit_code, 0);
  const json dec = check_named(json::parse(r.out), "decomposition");
  EXPECT_EQ(dec.at("status"), "pass");
  EXPECT_EQ(dec.at("details").at("rho_star_blocks"), true);
}

TEST(Cli, VerifyAtZeroFindsInvertibleEta) {
  // The pseudo-unitarity check expects no invertible η at ζ = 0, but one
  // exists; the check fails and the tool signals it with exit code 1.
  const auto r = run_cli("verify --zeta 0");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(schema_valid(r.out, scratch("verify_0.json")));
  const json report = json::parse(r.out);
  const json pu = check_named(report, "pseudo_unitarity");
  EXPECT_EQ(pu.at("status"), "fail");
  EXPECT_EQ(pu.at("details").at("expected"), "no invertible eta");
  EXPECT_FALSE(pu.at("details").at("invertible_example").is_null());
  EXPECT_EQ(check_named(report, "decomposition").at("status"), "pass");
  EXPECT_EQ(check_named(report, "invariant_subspace").at("status"), "pass");
  EXPECT_EQ(report.at("summary").at("failures"), 1);
}

TEST(Cli, VerifyCsvAndPretty) {
  const auto csv = run_cli("verify --zeta 1/2 --format csv");
  EXPECT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "name,status,details");
  const auto pretty = run_cli("verify --zeta 1/2 --format pretty");
  EXPECT_NE(pretty.out.find("PASS  relations"), std::string::npos);
}

TEST(Cli, MatricesJson) {
  const auto r = run_cli("matrices --zeta z --format json");
  EXPECT_EQ(r.exit_code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("representation").at("c")[2], json({"1", "0", "0", "z"}));
  EXPECT_EQ(doc.at("s").at("det"), "z");
  EXPECT_EQ(doc.at("eta_cleared").at("cleared_by"), "z");
  EXPECT_EQ(doc.at("conjugated").at("status"), "ok");
}

TEST(Cli, MatricesAtZero) {
  const auto r = run_cli("matrices --zeta 0 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const json doc = json::parse(r.out);
  const json n = doc.at("representation").at("n");
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col) EXPECT_EQ(n[row][col], row == 3 && col == 0 ? "1" : "0");
  EXPECT_EQ(doc.at("conjugated").at("status"), "singular_s");

  const auto pretty = run_cli("matrices --zeta 0");
  EXPECT_EQ(pretty.exit_code, 0);
  EXPECT_NE(pretty.out.find("rho(n) ="), std::string::npos);
  const auto csv = run_cli("matrices --zeta 0 --format csv");
  EXPECT_NE(csv.out.find("rho(n),4,1,1\n"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli("matrices --zeta 1/3/5").exit_code, 2);
  EXPECT_EQ(run_cli("verify --zeta 2").exit_code, 2);
  EXPECT_EQ(run_cli("verify --zeta -1/2").exit_code, 2);
  EXPECT_EQ(run_cli("verify --zeta 0.5").exit_code, 2);
  EXPECT_EQ(run_cli("verify --format xml").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --grid 1").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --grid many").exit_code, 2);
  EXPECT_EQ(run_cli("theorem-check --trials 0").exit_code, 2);
  EXPECT_EQ(run_cli("theorem-check --dims 3-5").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("--version").exit_code, 0);
}

TEST(Cli, SweepGridEleven) {
  const auto r = run_cli("sweep --grid 11");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "zeta,s_invertible,eta_invertible_exists,decomposes,faithful");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front().substr(0, 2), "0,");
  EXPECT_EQ(rows[1].substr(0, 5), "1/10,");
  EXPECT_EQ(rows.back(), "1,true,true,true,true");
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_NE(rows[k].find(",true,true,true,true"), std::string::npos);
}

TEST(Cli, SweepEndpointGrid) {
  const auto r = run_cli("sweep --grid 2 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const json rows = json::parse(r.out).at("rows");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("zeta"), "0");
  EXPECT_EQ(rows[0].at("s_invertible"), false);
  EXPECT_EQ(rows[0].at("faithful"), true);
  EXPECT_EQ(rows[1].at("zeta"), "1");
}

TEST(Cli, TheoremCheckIsReproducible) {
  const auto a = run_cli("theorem-check --trials 100 --seed 42");
  const auto b = run_cli("theorem-check --trials 100 --seed 42");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(schema_valid(a.out, scratch("theorem.json")));
  const json report = json::parse(a.out);
  EXPECT_EQ(report.at("summary").at("failures"), 0);
  EXPECT_EQ(report.at("summary").at("trials"), 100);
  EXPECT_EQ(report.at("seed"), 42);
  EXPECT_EQ(check_named(report, "nonfaithful-rho2_empty").at("details").at("observed"), "NotFaithful");
  EXPECT_NE(run_cli("theorem-check --trials 100 --seed 43").out, a.out);
}

TEST(Cli, TheoremCheckLargerDims) {
  const auto r = run_cli("theorem-check --trials 6 --seed 5 --dims 7-9");
  EXPECT_EQ(r.exit_code, 0);
  const json report = json::parse(r.out);
  EXPECT_EQ(check_named(report, "trial-003").at("details").at("dim"), 9);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = scratch("sweep.csv");
  const auto r = run_cli("sweep --grid 3 --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), run_cli("sweep --grid 3").out);
}
