#pragma once

// Geometric forward/backward differences over geometrically equidistant nodes.

#include <cstddef>
#include <span>
#include <vector>

#include "geocalc/garith.hpp"

namespace geocalc {

/// Default tolerance on the node spacing, relative to |ln h|.
inline constexpr double kDefaultSpacingTolerance = 1e-9;

enum class Direction { forward, backward };

const char* to_string(Direction d);

/// Sampled data f(x_i) on nodes x_0 < x_1 < ... < x_n with constant ratio
/// x_{i+1}/x_i = h (a geometric step h != 1).
class GTable {
 public:
  GTable(std::vector<GNum> nodes, std::vector<GNum> values,
         double spacing_tolerance = kDefaultSpacingTolerance);

  const std::vector<GNum>& nodes() const { return nodes_; }
  const std::vector<GNum>& values() const { return values_; }
  GNum step() const { return step_; }
  std::size_t size() const { return nodes_.size(); }

  /// Sub-table of `count` consecutive entries starting at `first`.
  GTable slice(std::size_t first, std::size_t count) const;

 private:
  std::vector<GNum> nodes_;
  std::vector<GNum> values_;
  GNum step_;
};

/// Validated construction from ordinary positive reals.
GTable build_table(std::span<const double> xs, std::span<const double> fs,
                   double spacing_tolerance = kDefaultSpacingTolerance);

/// Triangular difference table. columns[k] has size() - k entries and
/// columns[k][i] = columns[k-1][i+1] (-) columns[k-1][i].
///
/// Forward reading: columns[k][i] = Delta^k f(x_i).
/// Backward reading: columns[k][i] = Nabla^k f(x_{i+k}).
struct DiffTable {
  Direction direction = Direction::forward;
  std::vector<std::vector<GNum>> columns;
  GTable source;

  std::size_t order() const { return columns.size() - 1; }

  /// Difference of order k anchored at node i, in this table's direction.
  /// Throws IndexError when the entry does not exist.
  GNum at(std::size_t k, std::size_t i) const;
};

DiffTable forward_diff_table(const GTable& t);
DiffTable backward_diff_table(const GTable& t);

/// Delta^n f(x_i) via the binomial closed form
///   ln Delta^n f = sum_k (-1)^k C(n,k) ln f(x_{i+n-k}).
GNum nth_forward_diff(const GTable& t, std::size_t n, std::size_t i);

/// Nabla^n f(x_i) via ln Nabla^n f = sum_k (-1)^k C(n,k) ln f(x_{i-k}).
GNum nth_backward_diff(const GTable& t, std::size_t n, std::size_t i);

/// Factorial function x^{(n_G)} = x (*) (x (-) e(*)h) (*) ... (*)
/// (x (-) e^{n-1}(*)h). Degree 0 is the empty product e.
GNum factorial_function(GNum x, unsigned n, GNum h);

}  // namespace geocalc
