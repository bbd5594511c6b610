#include "geocalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "geocalc/errors.hpp"

namespace geocalc {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kLn10 = 2.302585092994045684;

std::string printf_g(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

void check_precision(int precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision) {
    throw DomainError("precision must be in [" + std::to_string(kMinPrecision) + ", " +
                      std::to_string(kMaxPrecision) + "]");
  }
}

// Value rounded to the display precision, or null when e^t leaves the double range.
ojson json_value(GNum x, int precision) {
  const double v = x.to_real();
  if (!std::isfinite(v) || (v == 0.0)) return nullptr;
  return std::strtod(printf_g(v, precision).c_str(), nullptr);
}

ojson json_gnum(GNum x, int precision) {
  ojson j;
  j["value"] = json_value(x, precision);
  j["log_value"] = x.log_value();
  return j;
}

ojson json_list(const std::vector<GNum>& xs, int precision) {
  ojson arr = ojson::array();
  for (const GNum& x : xs) arr.push_back(json_gnum(x, precision));
  return arr;
}

ojson json_sides(const IdentitySides& s, int precision) {
  ojson j;
  j["lhs"] = json_gnum(s.lhs, precision);
  j["rhs"] = json_gnum(s.rhs, precision);
  j["log_gap"] = s.log_gap();
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string with_exponent(GNum x, int precision) {
  return format_decimal(x, precision) + "  (" + format_exponential(x, precision) + ")";
}

std::string text_list(const std::vector<GNum>& xs, int precision) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_decimal(xs[i], precision);
  }
  return out + "]";
}

}  // namespace

std::string format_decimal(GNum x, int precision) {
  const double t = x.log_value();
  const double v = std::exp(t);
  if (std::isfinite(v) && v >= std::numeric_limits<double>::min()) return printf_g(v, precision);

  // Outside the double range: split t / ln 10 into exponent and mantissa.
  const double log10v = t / kLn10;
  auto exponent = static_cast<long long>(std::floor(log10v));
  double mantissa = std::pow(10.0, log10v - static_cast<double>(exponent));
  std::string digits = printf_g(mantissa, precision);
  if (digits.rfind("10", 0) == 0 && digits.find('e') == std::string::npos &&
      (digits.size() == 2 || digits[2] == '.')) {
    ++exponent;
    digits = printf_g(mantissa / 10.0, precision);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03lld", exponent);
  return digits + buf;
}

std::string format_exponential(GNum x, int precision) {
  return "e^" + printf_g(x.log_value(), precision);
}

std::string render_report(const GNum& x, OutputFormat format, int precision) {
  check_precision(precision);
  if (format == OutputFormat::json) return dump(json_gnum(x, precision));
  return with_exponent(x, precision) + "\n";
}

std::string render_report(const DiffTable& table, OutputFormat format, int precision) {
  check_precision(precision);
  const GTable& src = table.source;
  const std::size_t n = src.size();
  const bool forward = table.direction == Direction::forward;
  const char* op = forward ? "delta" : "nabla";

  if (format == OutputFormat::json) {
    ojson j;
    j["direction"] = to_string(table.direction);
    j["step"] = json_gnum(src.step(), precision);
    j["nodes"] = json_list(src.nodes(), precision);
    ojson cols = ojson::array();
    for (const auto& col : table.columns) cols.push_back(json_list(col, precision));
    j["columns"] = std::move(cols);
    return dump(j);
  }

  // Triangular layout: node i sits on row 2i; order-k entry j sits on row k + 2j,
  // between the two nodes it was formed from.
  const std::size_t rows = 2 * n - 1;
  const std::size_t cols = n + 1;
  std::vector<std::vector<std::string>> grid(rows + 1, std::vector<std::string>(cols));
  grid[0][0] = "x";
  grid[0][1] = "f(x)";
  for (std::size_t k = 1; k < n; ++k) grid[0][k + 1] = std::string(op) + "^" + std::to_string(k) + " f";
  for (std::size_t i = 0; i < n; ++i) grid[1 + 2 * i][0] = format_decimal(src.nodes()[i], precision);
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    for (std::size_t j = 0; j < table.columns[k].size(); ++j) {
      grid[1 + k + 2 * j][k + 1] = format_decimal(table.columns[k][j], precision);
    }
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << to_string(table.direction) << " geometric difference table, h = "
      << with_exponent(src.step(), precision) << "\n";
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < cols; ++c) {
      std::string cell = row[c];
      cell.resize(width[c], ' ');
      line += cell;
      if (c + 1 < cols) line += "  ";
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return out.str();
}

std::string render_report(const InterpResult& r, OutputFormat format, int precision) {
  check_precision(precision);
  if (format == OutputFormat::json) {
    ojson j;
    j["direction"] = to_string(r.direction);
    j["degree"] = r.degree;
    j["u"] = json_gnum(r.offset_u, precision);
    j["terms"] = json_list(r.terms, precision);
    j["value"] = json_gnum(r.value, precision);
    j["extrapolated"] = r.extrapolated;
    return dump(j);
  }
  std::ostringstream out;
  out << "direction:    " << to_string(r.direction) << "\n"
      << "degree:       " << r.degree << "\n"
      << "u:            " << with_exponent(r.offset_u, precision) << "\n";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    out << "term " << k << ":" << std::string(k < 10 ? 7 : 6, ' ')
        << with_exponent(r.terms[k], precision) << "\n";
  }
  out << "value:        " << with_exponent(r.value, precision) << "\n"
      << "extrapolated: " << (r.extrapolated ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_report(const NormsReport& r, OutputFormat format, int precision) {
  check_precision(precision);
  if (format == OutputFormat::json) {
    ojson j;
    j["length"] = r.length;
    j["finite_tail"] = r.finite_tail;
    j["sup_norm"] = json_gnum(r.sup, precision);
    j["delta_norm"] = json_gnum(r.delta, precision);
    return dump(j);
  }
  std::ostringstream out;
  out << "length:      " << r.length << (r.finite_tail ? " (tail of ones)" : "") << "\n"
      << "sup norm:    " << with_exponent(r.sup, precision) << "\n"
      << "delta norm:  " << with_exponent(r.delta, precision) << "\n";
  return out.str();
}

std::string render_report(const DualReport& r, OutputFormat format, int precision) {
  check_precision(precision);
  if (format == OutputFormat::json) {
    ojson j;
    j["exact"] = r.exact;
    j["d1_partial"] = json_list(r.d1_partial, precision);
    j["d2_partial"] = json_list(r.d2_partial, precision);
    j["tail_sums"] = json_list(r.tail_sums, precision);
    j["r_abs_partial"] = json_list(r.r_abs_partial, precision);
    j["d3_sup"] = json_gnum(r.d3_sup, precision);
    return dump(j);
  }
  std::ostringstream out;
  out << "exact:         " << (r.exact ? "yes" : "no (truncated partial sums)") << "\n"
      << "d1 partial:    " << text_list(r.d1_partial, precision) << "\n"
      << "d2 partial:    " << text_list(r.d2_partial, precision) << "\n"
      << "tail sums R_k: " << text_list(r.tail_sums, precision) << "\n"
      << "sum |R_k|:     " << text_list(r.r_abs_partial, precision) << "\n"
      << "d3 sup:        " << with_exponent(r.d3_sup, precision) << "\n";
  return out.str();
}

std::string render_report(const AbelReport& r, OutputFormat format, int precision) {
  check_precision(precision);
  if (format == OutputFormat::json) {
    ojson j;
    j["identity"] = r.identity;
    j["n"] = r.n;
    j.update(json_sides(r.sides, precision));
    return dump(j);
  }
  char gap[32];
  std::snprintf(gap, sizeof gap, "%.3e", r.sides.log_gap());
  std::ostringstream out;
  out << "identity: " << r.identity << " (n = " << r.n << ")\n"
      << "lhs:      " << with_exponent(r.sides.lhs, precision) << "\n"
      << "rhs:      " << with_exponent(r.sides.rhs, precision) << "\n"
      << "log gap:  " << gap << "\n";
  return out.str();
}

}  // namespace geocalc
