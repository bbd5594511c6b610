#include "geocalc/garith.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "geocalc/errors.hpp"

namespace geocalc {

namespace {

GNum checked(double t, const char* op) {
  if (!std::isfinite(t)) {
    throw OverflowError(std::string(op) + ": log coordinate is not finite");
  }
  return GNum::from_exponent(t);
}

struct NeumaierSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double next = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - next) + v;
    } else {
      carry += (v - next) + sum;
    }
    sum = next;
  }
  double value() const { return sum + carry; }
};

}  // namespace

GNum GNum::from_real(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw NonPositiveValue("expected a finite positive value, got " + std::to_string(v));
  }
  GNum x;
  x.log_ = std::log(v);
  return x;
}

GNum GNum::from_exponent(double t) {
  if (!std::isfinite(t)) throw OverflowError("exponent is not finite");
  GNum x;
  x.log_ = t;
  return x;
}

double GNum::to_real() const { return std::exp(log_); }

bool GNum::is_zero(double tolerance) const { return std::abs(log_) < tolerance; }

GNum gadd(GNum x, GNum y) { return checked(x.log_value() + y.log_value(), "gadd"); }

GNum gsub(GNum x, GNum y) { return checked(x.log_value() - y.log_value(), "gsub"); }

GNum gmul(GNum x, GNum y) { return checked(x.log_value() * y.log_value(), "gmul"); }

GNum gdiv(GNum x, GNum y, double zero_tolerance) {
  if (y.is_zero(zero_tolerance)) {
    throw GeometricZeroDivisor("division by the geometric zero (y = 1)");
  }
  return checked(x.log_value() / y.log_value(), "gdiv");
}

GNum gabs(GNum x) { return GNum::from_exponent(std::abs(x.log_value())); }

GNum gneg(GNum x) { return GNum::from_exponent(-x.log_value()); }

GNum gpow(GNum x, Exponent p) {
  if (p.den <= 0) throw DomainError("exponent denominator must be positive");
  const double t = x.log_value();
  if (p.is_integer()) {
    const std::int64_t n = p.num / p.den;
    if (n < 0 && x.is_zero()) {
      throw GeometricZeroDivisor("negative geometric power of the geometric zero");
    }
    // pow with a negative base is well defined for integral exponents.
    return checked(std::pow(t, static_cast<double>(n)), "gpow");
  }
  if (t < 0.0) {
    throw DomainError("fractional geometric power needs x >= 1 (real branch)");
  }
  if (p.num < 0 && x.is_zero()) {
    throw GeometricZeroDivisor("negative geometric power of the geometric zero");
  }
  return checked(std::pow(t, p.as_double()), "gpow");
}

double compensated_sum(std::span<const double> terms) {
  NeumaierSum acc;
  for (double v : terms) acc.add(v);
  return acc.value();
}

GNum gsum(std::span<const GNum> xs) {
  NeumaierSum acc;
  for (const GNum& x : xs) acc.add(x.log_value());
  return checked(acc.value(), "gsum");
}

std::uint64_t factorial_u64(unsigned n) {
  if (n > kMaxExactFactorial) {
    throw OverflowError(std::to_string(n) + "! does not fit in 64 bits");
  }
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

GFactorialValue gfactorial(unsigned n) {
  // n! <= 20! has at most 44 significant bits, so the conversion is exact.
  return {n, GNum::from_exponent(static_cast<double>(factorial_u64(n)))};
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; cancel the common factor first.
    const std::uint64_t g = std::gcd(r, std::uint64_t{i});
    const std::uint64_t factor = (n - k + i) / (i / g);
    r /= g;
    if (r > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw OverflowError("binomial coefficient C(" + std::to_string(n) + ", " +
                          std::to_string(k) + ") does not fit in 64 bits");
    }
    r *= factor;
  }
  return r;
}

}  // namespace geocalc
