#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "geocalc/gdiff.hpp"
#include "geocalc/io.hpp"
#include "geocalc/report.hpp"

namespace geocalc::cli {

enum class Command { difftable, interp, norms, duals, abel_check };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

struct RunConfig {
  Command command = Command::difftable;
  std::string input_path;  // "-" reads standard input
  std::optional<InputFormat> input_format;
  Direction direction = Direction::forward;
  /// Query point; set from --x or --log-x.
  std::optional<GNum> query_x;
  std::optional<std::size_t> degree;
  double spacing_tolerance = kDefaultSpacingTolerance;
  OutputFormat output_format = OutputFormat::text;
  int precision = kDefaultPrecision;
};

/// Executes a validated configuration. Reports go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point: argument parsing plus run(). `args`
/// excludes the program name. Reads GEOCALC_PRECISION for the default
/// precision.
int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace geocalc::cli
