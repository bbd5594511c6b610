#pragma once

// Geometric (multiplicative) arithmetic over the positive reals.
//
// A geometric number x is stored by its log coordinate t = ln x. Under this
// map the geometric operations become the classical ones:
//
//   x (+) y = x*y          <->  t_x + t_y
//   x (-) y = x/y          <->  t_x - t_y
//   x (*) y = x^(ln y)     <->  t_x * t_y
//   x (/) y = x^(1/ln y)   <->  t_x / t_y
//
// The geometric zero is 1 (t = 0) and the geometric identity is e (t = 1).

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace geocalc {

/// |ln y| below this is treated as the geometric zero when dividing.
inline constexpr double kGeometricZeroTolerance = 1e-12;

/// Largest n whose factorial fits in uint64_t (20! < 2^64 <= 21!).
inline constexpr unsigned kMaxExactFactorial = 20;

class GNum {
 public:
  /// Geometric zero.
  constexpr GNum() = default;

  /// Throws NonPositiveValue unless v is finite and > 0.
  static GNum from_real(double v);
  /// e^t without an exp/ln round trip. Throws OverflowError for non-finite t.
  static GNum from_exponent(double t);

  static constexpr GNum zero() { return GNum{}; }
  static GNum one() { return from_exponent(1.0); }

  constexpr double log_value() const { return log_; }
  /// Ordinary value e^t; overflows to +inf for t > ~709.
  double to_real() const;

  bool is_zero(double tolerance = kGeometricZeroTolerance) const;

  // Geometric order coincides with the ordinary order of positive reals.
  friend constexpr auto operator<=>(const GNum&, const GNum&) = default;

 private:
  double log_ = 0.0;
};

GNum gadd(GNum x, GNum y);
GNum gsub(GNum x, GNum y);
GNum gmul(GNum x, GNum y);
/// Throws GeometricZeroDivisor when |ln y| < zero_tolerance.
GNum gdiv(GNum x, GNum y, double zero_tolerance = kGeometricZeroTolerance);
GNum gabs(GNum x);
/// Geometric negation (-)x = 1 (-) x = 1/x.
GNum gneg(GNum x);

/// Rational exponent for geometric powers. Denominator must be positive.
struct Exponent {
  std::int64_t num = 1;
  std::int64_t den = 1;

  constexpr Exponent() = default;
  constexpr Exponent(std::int64_t n) : num(n) {}  // NOLINT(implicit)
  constexpr Exponent(std::int64_t n, std::int64_t d) : num(n), den(d) {}

  constexpr bool is_integer() const { return den != 0 && num % den == 0; }
  constexpr double as_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

/// Geometric power x^{p_G}: log coordinate (ln x)^p.
///
/// Integer p accepts any x except x = 1 when p < 0. Fractional p takes the
/// real branch and needs ln x >= 0.
GNum gpow(GNum x, Exponent p);

/// Geometric sum of a list; the empty sum is the geometric zero.
/// Log coordinates are accumulated with Neumaier compensation.
GNum gsum(std::span<const GNum> xs);
inline GNum gsum(std::initializer_list<GNum> xs) {
  return gsum(std::span<const GNum>(xs.begin(), xs.size()));
}

struct GFactorialValue {
  unsigned n = 0;
  GNum value;
};

/// n!_G = e^{n!}, exact for n <= kMaxExactFactorial; larger n throws
/// OverflowError.
GFactorialValue gfactorial(unsigned n);

/// Exact n! in 64-bit arithmetic. Throws OverflowError past 20.
std::uint64_t factorial_u64(unsigned n);

/// Exact binomial coefficient C(n, k). Throws OverflowError if it does not
/// fit in uint64_t.
std::uint64_t binomial_u64(unsigned n, unsigned k);

/// Compensated sum of plain doubles. Shared by gsum and the table code.
double compensated_sum(std::span<const double> terms);

}  // namespace geocalc
