#include "geocalc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

#include <CLI11.hpp>

#include "geocalc/errors.hpp"
#include "geocalc/ginterp.hpp"
#include "geocalc/gseq.hpp"

namespace geocalc::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"difftable", Command::difftable}, {"interp", Command::interp},
    {"norms", Command::norms},         {"duals", Command::duals},
    {"abel-check", Command::abel_check}};

// Largest n for which a_1..a_n and b_1..b_{n+1} are all defined.
std::size_t default_abel_n(const GSeq& a, const GSeq& b) {
  constexpr auto unbounded = std::numeric_limits<std::size_t>::max();
  const std::size_t na = a.finite_tail() ? unbounded : a.size();
  const std::size_t nb = b.finite_tail() ? unbounded : b.size() - 1;
  const std::size_t n = std::min(na, nb);
  return n == unbounded ? std::max(a.size(), b.size()) : n;
}

std::string execute(const RunConfig& config, std::istream& in) {
  const InputFormat format = config.input_format.value_or(infer_format(config.input_path));
  switch (config.command) {
    case Command::difftable: {
      const GTable t = parse_table(in, format, config.spacing_tolerance);
      const DiffTable d = config.direction == Direction::forward ? forward_diff_table(t)
                                                                 : backward_diff_table(t);
      return render_report(d, config.output_format, config.precision);
    }
    case Command::interp: {
      const GTable t = parse_table(in, format, config.spacing_tolerance);
      const InterpResult r = interpolate(t, *config.query_x, config.direction, config.degree);
      return render_report(r, config.output_format, config.precision);
    }
    case Command::norms: {
      const GSeq s = parse_sequence(in, format);
      const NormsReport r{sup_norm(s), delta_norm(s), s.size(), s.finite_tail()};
      return render_report(r, config.output_format, config.precision);
    }
    case Command::duals: {
      const GSeq s = parse_sequence(in, format);
      return render_report(dual_partial_sums(s), config.output_format, config.precision);
    }
    case Command::abel_check: {
      const SequencePair p = parse_sequence_pair(in, format);
      AbelReport r;
      if (p.b) {
        r.identity = "abel";
        r.n = p.n.value_or(default_abel_n(p.a, *p.b));
        r.sides = geometric_abel_sum(p.a, *p.b, r.n);
      } else {
        r.identity = "corollary3";
        r.n = p.n.value_or(p.a.size());
        r.sides = corollary3_identity(p.a, r.n);
      }
      return render_report(r, config.output_format, config.precision);
    }
  }
  throw DomainError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == Command::interp && !config.query_x) {
    err << "geocalc: error: interp requires --x or --log-x\n";
    return kExitParseError;
  }
  if (config.precision < kMinPrecision || config.precision > kMaxPrecision) {
    err << "geocalc: error: precision must be in [" << kMinPrecision << ", " << kMaxPrecision
        << "]\n";
    return kExitParseError;
  }
  if (!(config.spacing_tolerance > 0.0)) {
    err << "geocalc: error: tolerance must be positive\n";
    return kExitParseError;
  }
  try {
    std::string report;
    if (config.input_path == "-") {
      report = execute(config, std::cin);
    } else {
      std::ifstream file(config.input_path);
      if (!file) {
        err << "geocalc: error: cannot open input '" << config.input_path << "'\n";
        return kExitParseError;
      }
      report = execute(config, file);
    }
    out << report;
    return kExitOk;
  } catch (const ParseError& e) {
    err << "geocalc: " << e.kind() << ": " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "geocalc: " << e.kind() << ": " << e.what() << "\n";
    return kExitDomainError;
  }
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("GEOCALC_PRECISION"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.precision = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "geocalc: error: GEOCALC_PRECISION='" << env << "' is not an integer\n";
      return kExitParseError;
    }
  }

  CLI::App app{"Geometric calculus: difference tables, Newton-Gregory interpolation, "
               "sequence norms and dual diagnostics",
               "geocalc"};
  std::string command;
  std::string format;
  std::string direction = "forward";
  std::string output = "text";
  std::optional<double> x;
  std::optional<double> log_x;
  std::optional<std::size_t> degree;

  app.add_option("command", command, "difftable | interp | norms | duals | abel-check")
      ->required()
      ->check(CLI::IsMember({"difftable", "interp", "norms", "duals", "abel-check"}));
  app.add_option("--input", config.input_path, "Input file ('-' for stdin)")->required();
  app.add_option("--format", format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--direction", direction, "forward | backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  auto* x_opt = app.add_option("--x", x, "Query point (decimal)");
  auto* log_x_opt = app.add_option("--log-x", log_x, "Query point as a log coordinate");
  x_opt->excludes(log_x_opt);
  app.add_option("--degree", degree, "Interpolation degree (default: table size - 1)");
  app.add_option("--tolerance", config.spacing_tolerance, "Relative node-spacing tolerance");
  app.add_option("--output", output, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", config.precision, "Significant digits in reports [4, 17]");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  config.command = kCommands.at(command);
  if (!format.empty()) config.input_format = format == "json" ? InputFormat::json : InputFormat::csv;
  config.direction = direction == "backward" ? Direction::backward : Direction::forward;
  config.output_format = output == "json" ? OutputFormat::json : OutputFormat::text;
  config.degree = degree;
  try {
    if (x) config.query_x = GNum::from_real(*x);
    if (log_x) config.query_x = GNum::from_exponent(*log_x);
  } catch (const Error& e) {
    err << "geocalc: " << e.kind() << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  return run(config, out, err);
}

}  // namespace geocalc::cli
