#pragma once

// Geometric Newton-Gregory interpolation.

#include <cstddef>
#include <optional>
#include <vector>

#include "geocalc/gdiff.hpp"

namespace geocalc {

struct InterpResult {
  GNum value;
  GNum offset_u;
  /// Term k is the order-k contribution; value == gsum(terms).
  std::vector<GNum> terms;
  Direction direction = Direction::forward;
  std::size_t degree = 0;
  /// Query lies outside the nodes used by the interpolant.
  bool extrapolated = false;
};

/// u = (x (-) base) (/) h.
GNum relative_offset(GNum x, GNum base, GNum h);

/// Forward formula anchored at the first node. The default degree is
/// t.size() - 1; a lower degree uses the leading degree+1 nodes.
InterpResult interp_forward(const GTable& t, GNum x,
                            std::optional<std::size_t> degree = std::nullopt);

/// Backward formula anchored at the last node. A lower degree uses the
/// trailing degree+1 nodes.
InterpResult interp_backward(const GTable& t, GNum x,
                             std::optional<std::size_t> degree = std::nullopt);

InterpResult interpolate(const GTable& t, GNum x, Direction direction,
                         std::optional<std::size_t> degree = std::nullopt);

/// |ln a - ln b| / max(1, |ln b|).
double relative_log_error(GNum approx, GNum reference);

struct ExactnessReport {
  Direction direction = Direction::forward;
  std::size_t degree = 0;
  /// Relative log error at each node the interpolant passes through.
  std::vector<double> node_errors;
  double max_error = 0.0;
};

/// Evaluates the interpolant at each of its own nodes.
ExactnessReport exactness_check(const GTable& t,
                                std::optional<std::size_t> degree = std::nullopt,
                                Direction direction = Direction::forward);

}  // namespace geocalc
