#include "geocalc/gdiff.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "geocalc/errors.hpp"

namespace geocalc {

const char* to_string(Direction d) {
  return d == Direction::forward ? "forward" : "backward";
}

GTable::GTable(std::vector<GNum> nodes, std::vector<GNum> values,
               double spacing_tolerance)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size()) {
    throw LengthMismatch("table has " + std::to_string(nodes_.size()) + " nodes but " +
                         std::to_string(values_.size()) + " values");
  }
  if (nodes_.size() < 2) {
    throw TableTooSmall("a difference table needs at least 2 entries, got " +
                        std::to_string(nodes_.size()));
  }
  if (!(spacing_tolerance > 0.0)) {
    throw DomainError("spacing tolerance must be positive");
  }
  step_ = gsub(nodes_[1], nodes_[0]);
  const double gap = step_.log_value();
  if (!(gap > 0.0)) {
    throw NodeSpacingError("nodes must be strictly increasing");
  }
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) {
    const double gi = nodes_[i + 1].log_value() - nodes_[i].log_value();
    if (std::abs(gi - gap) > spacing_tolerance * gap) {
      throw NodeSpacingError("nodes are not geometrically equidistant: ratio x[" +
                             std::to_string(i + 1) + "]/x[" + std::to_string(i) +
                             "] differs from x[1]/x[0]");
    }
  }
}

GTable GTable::slice(std::size_t first, std::size_t count) const {
  if (first + count > nodes_.size()) throw IndexError("table slice out of range");
  const auto b = static_cast<std::ptrdiff_t>(first);
  const auto e = static_cast<std::ptrdiff_t>(first + count);
  // Already validated; the spacing check cannot fail on a sub-range.
  return GTable({nodes_.begin() + b, nodes_.begin() + e},
                {values_.begin() + b, values_.begin() + e},
                std::numeric_limits<double>::max());
}

GTable build_table(std::span<const double> xs, std::span<const double> fs,
                   double spacing_tolerance) {
  std::vector<GNum> nodes;
  std::vector<GNum> values;
  nodes.reserve(xs.size());
  values.reserve(fs.size());
  for (double x : xs) nodes.push_back(GNum::from_real(x));
  for (double f : fs) values.push_back(GNum::from_real(f));
  return GTable(std::move(nodes), std::move(values), spacing_tolerance);
}

namespace {

std::vector<std::vector<GNum>> difference_columns(const GTable& t) {
  std::vector<std::vector<GNum>> columns;
  columns.reserve(t.size());
  columns.push_back(t.values());
  for (std::size_t k = 1; k < t.size(); ++k) {
    const auto& prev = columns.back();
    std::vector<GNum> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(gsub(prev[i + 1], prev[i]));
    columns.push_back(std::move(next));
  }
  return columns;
}

// Sum of (-1)^k C(n,k) ln f(x_{index(k)}) for k = 0..n.
template <typename IndexFn>
GNum binomial_combination(const GTable& t, std::size_t n, IndexFn index) {
  std::vector<double> terms;
  terms.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto c = static_cast<double>(binomial_u64(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    terms.push_back(sign * c * t.values()[index(k)].log_value());
  }
  return GNum::from_exponent(compensated_sum(terms));
}

}  // namespace

GNum DiffTable::at(std::size_t k, std::size_t i) const {
  if (k >= columns.size()) throw IndexError("difference order out of range");
  if (direction == Direction::forward) {
    if (i >= columns[k].size()) throw IndexError("forward difference index out of range");
    return columns[k][i];
  }
  if (i < k || i - k >= columns[k].size()) {
    throw IndexError("backward difference index out of range");
  }
  return columns[k][i - k];
}

DiffTable forward_diff_table(const GTable& t) {
  return {Direction::forward, difference_columns(t), t};
}

DiffTable backward_diff_table(const GTable& t) {
  // Nabla^k f(x_{i+k}) and Delta^k f(x_i) are the same quotient of values, so
  // both readings share one triangular array.
  return {Direction::backward, difference_columns(t), t};
}

GNum nth_forward_diff(const GTable& t, std::size_t n, std::size_t i) {
  if (i + n >= t.size()) {
    throw IndexError("forward difference of order " + std::to_string(n) + " at node " +
                     std::to_string(i) + " needs node " + std::to_string(i + n));
  }
  return binomial_combination(t, n, [&](std::size_t k) { return i + n - k; });
}

GNum nth_backward_diff(const GTable& t, std::size_t n, std::size_t i) {
  if (i >= t.size() || i < n) {
    throw IndexError("backward difference of order " + std::to_string(n) + " at node " +
                     std::to_string(i) + " is out of range");
  }
  return binomial_combination(t, n, [&](std::size_t k) { return i - k; });
}

GNum factorial_function(GNum x, unsigned n, GNum h) {
  GNum result = GNum::one();
  for (unsigned j = 0; j < n; ++j) {
    // x (-) e^j (*) h
    const GNum shift = gmul(GNum::from_exponent(static_cast<double>(j)), h);
    result = gmul(result, gsub(x, shift));
  }
  return result;
}

}  // namespace geocalc
