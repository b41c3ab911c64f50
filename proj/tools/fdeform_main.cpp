// fdeform: exact verification of the deformed single-fermion algebra.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fdeform/commands.hpp"

namespace {

constexpr int kUsageError = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kUsageError;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fdeform::cli;

  CLI::App app{"Exact toolkit for the deformed single-fermion algebra"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string zeta_text = "z";
  std::string format_text;
  std::string out_path;
  std::size_t grid = 11;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string dims_text = "4-7";

  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format_text, "json, csv or pretty")->default_str(default_format);
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* matrices = app.add_subcommand("matrices", "print the representation, eta, S and the block form");
  matrices->add_option("--zeta", zeta_text, "exact rational in [0,1] or z")->default_str("z");
  add_common(matrices, "pretty");

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery at one zeta");
  verify->add_option("--zeta", zeta_text, "exact rational in [0,1] or z")->default_str("z");
  add_common(verify, "json");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate invertibility flags at zeta = k/(grid-1)");
  sweep->add_option("--grid", grid, "number of grid points (>= 2)")->default_val(11);
  add_common(sweep, "csv");

  CLI::App* theorem = app.add_subcommand("theorem-check", "extract the regular subrepresentation from random faithful reps");
  theorem->add_option("--trials", trials, "number of random representations (>= 1)")->default_val(100);
  theorem->add_option("--seed", seed, "random seed")->default_val(42);
  theorem->add_option("--dims", dims_text, "dimension range lo-hi (lo >= 4)")->default_val("4-7");
  add_common(theorem, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    auto format_or = [&](Format fallback) { return format_text.empty() ? fallback : parse_format(format_text); };

    if (matrices->parsed()) {
      const ZetaArg zeta = parse_zeta(zeta_text);
      return emit(render_matrices(zeta, format_or(Format::Pretty)), out_path);
    }
    if (verify->parsed()) {
      const ZetaArg zeta = parse_zeta(zeta_text);
      const Format format = format_or(Format::Json);
      const ReportDocument doc = run_verify(zeta);
      if (int rc = emit(render(doc, format), out_path); rc != 0) return rc;
      return doc.all_pass() ? 0 : 1;
    }
    if (sweep->parsed()) {
      if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
      const Format format = format_or(Format::Csv);
      return emit(render_sweep(run_sweep(grid), format), out_path);
    }
    if (theorem->parsed()) {
      TheoremCheckOptions options;
      options.trials = trials;
      options.seed = seed;
      std::tie(options.min_dim, options.max_dim) = parse_dims(dims_text);
      if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
      const Format format = format_or(Format::Json);
      const ReportDocument doc = run_theorem_check(options);
      if (int rc = emit(render(doc, format), out_path); rc != 0) return rc;
      return doc.all_pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
