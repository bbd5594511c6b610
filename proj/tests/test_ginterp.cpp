#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "geocalc/errors.hpp"
#include "geocalc/ginterp.hpp"
#include "oracles.hpp"

using namespace geocalc;

namespace {

GNum E(double t) { return GNum::from_exponent(t); }

GTable sine_table() {
  return GTable({E(1.0), E(1.2), E(1.4), E(1.6)},
                {GNum::from_real(0.0474), GNum::from_real(0.0579), GNum::from_real(0.0707),
                 GNum::from_real(0.0863)});
}

GTable log_table() {
  const std::vector<double> xs{3, 6, 12, 24};
  const std::vector<double> fs{1.0986, 1.7918, 2.4849, 3.1781};
  return build_table(xs, fs);
}

GTable from_logs(const oracle::LogTable& lt) {
  std::vector<GNum> nodes;
  std::vector<GNum> values;
  for (double v : lt.log_x) nodes.push_back(E(v));
  for (double v : lt.log_f) values.push_back(E(v));
  return GTable(nodes, values);
}

}  // namespace

TEST_CASE("relative offset") {
  CHECK(std::abs(relative_offset(E(1.3), E(1.0), E(0.2)).log_value() - 1.5) <= 1e-12);
  const GNum u = relative_offset(GNum::from_real(22), GNum::from_real(24), GNum::from_real(2));
  CHECK(std::abs(u.to_real() - 0.8820) <= 5e-4);
  CHECK(u.log_value() == doctest::Approx(std::log(22.0 / 24.0) / std::log(2.0)));
  CHECK(relative_offset(E(0.4), E(0.4), E(0.1)) == GNum::zero());
  CHECK_THROWS_AS(relative_offset(E(0.4), E(0.3), GNum::zero()), GeometricZeroDivisor);
}

TEST_CASE("forward interpolation of the sine data") {
  const InterpResult r = interp_forward(sine_table(), E(1.3), 3);
  CHECK(std::abs(r.value.to_real() - 0.0639) <= 1e-3);
  CHECK(std::abs(r.offset_u.log_value() - 1.5) <= 1e-12);
  CHECK(r.terms.size() == 4);
  CHECK(r.terms[0] == sine_table().values()[0]);
  CHECK(r.value == gsum(r.terms));
  CHECK_FALSE(r.extrapolated);
  CHECK(r.direction == Direction::forward);

  // Term 1 is Delta f(a)^{ln u}.
  const double d1 = 0.0579 / 0.0474;
  CHECK(r.terms[1].to_real() == doctest::Approx(std::pow(d1, 1.5)).epsilon(1e-12));

  const InterpResult at_node = interp_forward(sine_table(), E(1.2));
  CHECK(at_node.value.to_real() == doctest::Approx(0.0579).epsilon(1e-10));
}

TEST_CASE("backward interpolation of the logarithm data") {
  const InterpResult r = interp_backward(log_table(), GNum::from_real(22), 3);
  CHECK(std::abs(r.value.to_real() - 3.0867) <= 1e-3);
  CHECK(std::abs(r.offset_u.to_real() - 0.8820) <= 5e-4);
  CHECK(r.value == gsum(r.terms));
  CHECK(r.terms[0] == log_table().values()[3]);

  const InterpResult at_last = interp_backward(log_table(), GNum::from_real(24));
  CHECK(at_last.value.to_real() == doctest::Approx(3.1781).epsilon(1e-12));
  for (std::size_t k = 1; k < at_last.terms.size(); ++k) CHECK(at_last.terms[k] == GNum::zero());
}

TEST_CASE("degree handling") {
  const GTable t = sine_table();
  CHECK_THROWS_AS(interp_forward(t, E(1.3), 0), DegreeError);
  CHECK_THROWS_AS(interp_forward(t, E(1.3), 4), DegreeError);
  CHECK_THROWS_AS(interp_backward(t, E(1.3), 4), DegreeError);
  CHECK(interp_forward(t, E(1.3)).degree == 3);

  // Degree 1 forward uses the first two nodes; backward the last two.
  const InterpResult lin = interp_forward(t, E(1.1), 1);
  const double expected = 0.5 * (std::log(0.0474) + std::log(0.0579));
  CHECK(lin.value.log_value() == doctest::Approx(expected).epsilon(1e-13));
  CHECK(lin.terms.size() == 2);
  const InterpResult blin = interp_backward(t, E(1.5), 1);
  CHECK(blin.value.log_value() ==
        doctest::Approx(0.5 * (std::log(0.0707) + std::log(0.0863))).epsilon(1e-13));

  // Degree 1 forward at e^{1.3} extrapolates past its two nodes.
  CHECK(interp_forward(t, E(1.3), 1).extrapolated);
  CHECK(interp_forward(t, E(2.0)).extrapolated);
  CHECK(interp_backward(t, E(0.5)).extrapolated);
  CHECK_FALSE(interp_backward(t, E(1.0)).extrapolated);
}

TEST_CASE("interpolation matches classical Newton-Gregory on logs") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 2 + static_cast<std::size_t>(trial % 8);
    const auto lt = oracle::random_log_table(rng, size);
    const GTable t = from_logs(lt);
    for (int q = 0; q < 5; ++q) {
      const double span = lt.log_x.back() - lt.log_x.front();
      const double lx = lt.log_x.front() + span * (1.4 * unit(rng) - 0.2);
      const double fwd = interp_forward(t, E(lx)).value.log_value();
      const double bwd = interp_backward(t, E(lx)).value.log_value();
      CHECK(std::abs(fwd - oracle::newton_forward(lt.log_x, lt.log_f, lx)) <= 1e-10);
      CHECK(std::abs(bwd - oracle::newton_backward(lt.log_x, lt.log_f, lx)) <= 1e-10);
      const double lag = oracle::lagrange(lt.log_x, lt.log_f, lx);
      CHECK(std::abs(fwd - lag) <= 1e-9 * std::max(1.0, std::abs(lag)));
    }
  }
}

TEST_CASE("coefficients of the expanded forward form") {
  // P(x) = A_0 (+) A_1 (*) (x(-)a) (+) A_2 (*) (x(-)a) (*) (x(-)a(-)h) (+) ...
  // with A_k = Delta^k f(a) (/) (k!_G (*) h^{k_G}).
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lt = oracle::random_log_table(rng, 2 + static_cast<std::size_t>(trial % 6));
    const GTable t = from_logs(lt);
    const DiffTable d = forward_diff_table(t);
    const GNum a = t.nodes().front();
    const GNum h = t.step();
    const GNum x = E(lt.log_x.front() + 0.37 * (lt.log_x.back() - lt.log_x.front()));
    std::vector<GNum> terms;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      const GNum coeff =
          gdiv(d.at(k, 0), gmul(gfactorial(static_cast<unsigned>(k)).value, gpow(h, kk)));
      GNum basis = GNum::one();
      for (std::size_t j = 0; j < k; ++j) {
        basis = gmul(basis, gsub(gsub(x, a), gmul(E(static_cast<double>(j)), h)));
      }
      terms.push_back(gmul(coeff, basis));
    }
    const double expanded = gsum(terms).log_value();
    const double newton = interp_forward(t, x).value.log_value();
    CHECK(std::abs(expanded - newton) <= 1e-9 * std::max(1.0, std::abs(newton)));
  }
}

TEST_CASE("exactness check") {
  CHECK(exactness_check(sine_table()).max_error <= 1e-10);
  CHECK(exactness_check(log_table(), std::nullopt, Direction::backward).max_error <= 1e-10);
  const ExactnessReport r = exactness_check(log_table());
  CHECK(r.node_errors.size() == 4);
  CHECK(r.degree == 3);

  const GTable two({E(0.0), E(0.3)}, {GNum::from_real(2.0), GNum::from_real(5.0)});
  const ExactnessReport r2 = exactness_check(two, 1);
  CHECK(r2.node_errors.size() == 2);
  CHECK(r2.max_error <= 1e-15);

  const ExactnessReport low = exactness_check(sine_table(), 2, Direction::backward);
  CHECK(low.node_errors.size() == 3);
  CHECK(low.max_error <= 1e-10);
}
