#pragma once

// Text and JSON rendering of library results. Output depends only on the
// inputs and the precision, so identical runs produce identical bytes.

#include <string>

#include "geocalc/gdiff.hpp"
#include "geocalc/ginterp.hpp"
#include "geocalc/gseq.hpp"

namespace geocalc {

enum class OutputFormat { text, json };

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMinPrecision = 4;
inline constexpr int kMaxPrecision = 17;

/// Decimal rendering of e^t with `precision` significant digits. Works past
/// the double range (e^{1000} prints as 1.97009e+434).
std::string format_decimal(GNum x, int precision);
/// "e^t" rendering.
std::string format_exponential(GNum x, int precision);

struct NormsReport {
  GNum sup;
  GNum delta;
  std::size_t length = 0;
  bool finite_tail = false;
};

struct AbelReport {
  /// "abel" or "corollary3".
  std::string identity;
  std::size_t n = 0;
  IdentitySides sides;
};

std::string render_report(const GNum& x, OutputFormat format, int precision);
std::string render_report(const DiffTable& table, OutputFormat format, int precision);
std::string render_report(const InterpResult& r, OutputFormat format, int precision);
std::string render_report(const NormsReport& r, OutputFormat format, int precision);
std::string render_report(const DualReport& r, OutputFormat format, int precision);
std::string render_report(const AbelReport& r, OutputFormat format, int precision);

}  // namespace geocalc
