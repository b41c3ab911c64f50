#pragma once

// Back end of the fdeform command-line tool. Each command is a pure function
// from parsed options to a document; main() only parses flags and prints.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fdeform/scalar.hpp"

namespace fdeform::cli {

using nlohmann::json;

inline constexpr std::string_view kVersion = FDEFORM_VERSION;

enum class Format { Json, Csv, Pretty };

/// "json", "csv" or "pretty"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

struct ZetaArg {
  std::string literal;
  Scalar value;
  bool symbolic() const { return !value.is_constant(); }
};

/// "z" (symbolic) or an exact rational "p" / "p/q" in [0, 1]. Throws
/// std::invalid_argument otherwise.
ZetaArg parse_zeta(std::string_view text);

struct Check {
  std::string name;
  bool pass = false;
  json details = json::object();
};

struct ReportDocument {
  std::string command;
  std::vector<std::string> zeta_points;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::string version{kVersion};
  json summary = json::object();

  bool all_pass() const;
  json to_json() const;
};

std::string render(const ReportDocument& doc, Format format);

json matrices_document(const ZetaArg& zeta);
std::string render_matrices(const ZetaArg& zeta, Format format);

ReportDocument run_verify(const ZetaArg& zeta);

struct SweepRow {
  std::string zeta;
  bool s_invertible = false;
  bool eta_invertible_exists = false;
  bool decomposes = false;
  bool faithful = false;
};

SweepRow sweep_row(const Rational& zeta);
/// Rows at ζ = k/(grid − 1), k = 0..grid−1, in increasing ζ. grid ≥ 2.
std::vector<SweepRow> run_sweep(std::size_t grid);
std::string render_sweep(const std::vector<SweepRow>& rows, Format format);

struct TheoremCheckOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t min_dim = 4;
  std::size_t max_dim = 7;
};

/// Parses "<lo>-<hi>" or "<d>" with 4 ≤ lo ≤ hi.
std::pair<std::size_t, std::size_t> parse_dims(std::string_view text);

ReportDocument run_theorem_check(const TheoremCheckOptions& options);

}  // namespace fdeform::cli
