#include "geocalc/ginterp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocalc/errors.hpp"

namespace geocalc {

namespace {

std::size_t resolve_degree(const GTable& t, std::optional<std::size_t> degree) {
  const std::size_t max_degree = t.size() - 1;
  const std::size_t d = degree.value_or(max_degree);
  if (d < 1 || d > max_degree) {
    throw DegreeError("degree " + std::to_string(d) + " is outside [1, " +
                      std::to_string(max_degree) + "] for a table of " +
                      std::to_string(t.size()) + " nodes");
  }
  if (d > kMaxExactFactorial) {
    throw DegreeError("degree " + std::to_string(d) + " exceeds the exact factorial limit " +
                      std::to_string(kMaxExactFactorial));
  }
  return d;
}

// (u^{(k_G)} with step `h_fact`) (/) k!_G (*) difference
GNum newton_term(GNum u, unsigned k, GNum h_fact, GNum difference) {
  const GNum falling = factorial_function(u, k, h_fact);
  return gmul(gdiv(falling, gfactorial(k).value), difference);
}

bool outside(const GTable& used, GNum x) {
  return x < used.nodes().front() || x > used.nodes().back();
}

}  // namespace

GNum relative_offset(GNum x, GNum base, GNum h) { return gdiv(gsub(x, base), h); }

InterpResult interp_forward(const GTable& t, GNum x, std::optional<std::size_t> degree) {
  const std::size_t d = resolve_degree(t, degree);
  const GTable used = t.slice(0, d + 1);
  const DiffTable diffs = forward_diff_table(used);

  InterpResult r;
  r.direction = Direction::forward;
  r.degree = d;
  r.offset_u = relative_offset(x, used.nodes().front(), used.step());
  // Factors u (-) e^j, i.e. the factorial function with step e.
  const GNum step_e = GNum::one();
  for (std::size_t k = 0; k <= d; ++k) {
    r.terms.push_back(newton_term(r.offset_u, static_cast<unsigned>(k), step_e, diffs.at(k, 0)));
  }
  r.value = gsum(r.terms);
  r.extrapolated = outside(used, x);
  return r;
}

InterpResult interp_backward(const GTable& t, GNum x, std::optional<std::size_t> degree) {
  const std::size_t d = resolve_degree(t, degree);
  const GTable used = t.slice(t.size() - d - 1, d + 1);
  const DiffTable diffs = backward_diff_table(used);

  InterpResult r;
  r.direction = Direction::backward;
  r.degree = d;
  r.offset_u = relative_offset(x, used.nodes().back(), used.step());
  // Factors u (+) e^j = u (-) e^j (*) e^{-1}: the factorial function with step e^{-1}.
  const GNum step_inv_e = GNum::from_exponent(-1.0);
  for (std::size_t k = 0; k <= d; ++k) {
    r.terms.push_back(newton_term(r.offset_u, static_cast<unsigned>(k), step_inv_e, diffs.at(k, d)));
  }
  r.value = gsum(r.terms);
  r.extrapolated = outside(used, x);
  return r;
}

InterpResult interpolate(const GTable& t, GNum x, Direction direction,
                         std::optional<std::size_t> degree) {
  return direction == Direction::forward ? interp_forward(t, x, degree)
                                         : interp_backward(t, x, degree);
}

double relative_log_error(GNum approx, GNum reference) {
  const double ref = reference.log_value();
  return std::abs(approx.log_value() - ref) / std::max(1.0, std::abs(ref));
}

ExactnessReport exactness_check(const GTable& t, std::optional<std::size_t> degree,
                                Direction direction) {
  const std::size_t d = resolve_degree(t, degree);
  const std::size_t first = direction == Direction::forward ? 0 : t.size() - d - 1;

  ExactnessReport report;
  report.direction = direction;
  report.degree = d;
  for (std::size_t i = first; i <= first + d; ++i) {
    const InterpResult r = interpolate(t, t.nodes()[i], direction, d);
    const double err = relative_log_error(r.value, t.values()[i]);
    report.node_errors.push_back(err);
    report.max_error = std::max(report.max_error, err);
  }
  return report;
}

}  // namespace geocalc
