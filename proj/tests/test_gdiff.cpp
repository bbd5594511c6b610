#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "geocalc/errors.hpp"
#include "geocalc/gdiff.hpp"
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

TEST_CASE("build_table validates its input") {
  const GTable t1 = sine_table();
  CHECK(t1.step().log_value() == doctest::Approx(0.2).epsilon(1e-14));
  const GTable t2 = log_table();
  CHECK(t2.step().to_real() == doctest::Approx(2.0).epsilon(1e-14));

  const std::vector<double> uneven{2, 4, 7};
  const std::vector<double> three{1, 1, 1};
  CHECK_THROWS_AS(build_table(uneven, three), NodeSpacingError);

  const std::vector<double> one{2};
  CHECK_THROWS_AS(build_table(one, one), TableTooSmall);

  const std::vector<double> two{2, 4};
  CHECK_THROWS_AS(build_table(two, three), LengthMismatch);

  const std::vector<double> negative{2, -4};
  CHECK_THROWS_AS(build_table(negative, two), NonPositiveValue);

  const std::vector<double> decreasing{4, 2, 1};
  CHECK_THROWS_AS(build_table(decreasing, three), NodeSpacingError);

  const std::vector<double> repeated{2, 2};
  CHECK_THROWS_AS(build_table(repeated, two), NodeSpacingError);

  // A perturbation just inside / outside the relative tolerance.
  const std::vector<double> close{1.0, std::exp(1.0), std::exp(2.0 + 1e-11)};
  CHECK_NOTHROW(build_table(close, three));
  const std::vector<double> far{1.0, std::exp(1.0), std::exp(2.0 + 1e-6)};
  CHECK_THROWS_AS(build_table(far, three), NodeSpacingError);
  CHECK_NOTHROW(build_table(far, three, 1e-5));
}

TEST_CASE("forward difference table of the sine data") {
  const DiffTable d = forward_diff_table(sine_table());
  REQUIRE(d.columns.size() == 4);
  CHECK(d.columns[0] == sine_table().values());
  const std::vector<std::vector<double>> expected{
      {1.2215, 1.2211, 0.0863 / 0.0707}, {0.9997, 0.9996}, {0.9999}};
  for (std::size_t k = 1; k < 4; ++k) {
    REQUIRE(d.columns[k].size() == 4 - k);
    for (std::size_t i = 0; i < d.columns[k].size(); ++i) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(std::abs(d.columns[k][i].to_real() - expected[k - 1][i]) <= 5e-4);
    }
  }
  CHECK(d.order() == 3);
}

TEST_CASE("backward difference table of the logarithm data") {
  const DiffTable d = backward_diff_table(log_table());
  const std::vector<std::vector<double>> expected{
      {1.6310, 1.3868, 1.2790}, {0.8503, 0.9223}, {1.0847}};
  for (std::size_t k = 1; k < 4; ++k) {
    for (std::size_t i = 0; i < d.columns[k].size(); ++i) {
      CHECK(std::abs(d.columns[k][i].to_real() - expected[k - 1][i]) <= 5e-4);
    }
  }
  // Backward reading: Nabla^3 f(24) sits at node index 3.
  CHECK(d.at(3, 3) == d.columns[3][0]);
  CHECK(d.at(1, 3) == d.columns[1][2]);
  CHECK_THROWS_AS(d.at(2, 1), IndexError);
  CHECK_THROWS_AS(d.at(4, 3), IndexError);
}

TEST_CASE("constant data has trivial higher differences") {
  const GNum c = GNum::from_real(3.7);
  const GTable t({E(0), E(0.5), E(1.0), E(1.5), E(2.0)}, {c, c, c, c, c});
  for (const DiffTable& d : {forward_diff_table(t), backward_diff_table(t)}) {
    for (std::size_t k = 1; k < d.columns.size(); ++k)
      for (const GNum& v : d.columns[k]) CHECK(v == GNum::zero());
  }
}

TEST_CASE("difference tables are the exponential of classical tables on logs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto lt = oracle::random_log_table(rng, 2 + static_cast<std::size_t>(trial % 11));
    const auto classical = oracle::difference_table(lt.log_f);
    const GTable t = from_logs(lt);
    const DiffTable fwd = forward_diff_table(t);
    const DiffTable bwd = backward_diff_table(t);
    for (std::size_t k = 0; k < classical.size(); ++k) {
      for (std::size_t i = 0; i < classical[k].size(); ++i) {
        CHECK(std::abs(fwd.at(k, i).log_value() - classical[k][i]) <= 1e-12);
        CHECK(std::abs(bwd.at(k, i + k).log_value() - classical[k][i]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("closed-form differences") {
  const GTable sine = sine_table();
  CHECK(nth_forward_diff(sine, 0, 2) == sine.values()[2]);
  // Delta^2 f(e) = f(e^1.4) f(e) / f(e^1.2)^2
  const double delta2 = 0.0707 * 0.0474 / (0.0579 * 0.0579);
  CHECK(nth_forward_diff(sine, 2, 0).to_real() == doctest::Approx(delta2).epsilon(1e-13));
  CHECK(std::abs(nth_forward_diff(sine, 2, 0).to_real() - 0.9997) <= 5e-4);
  CHECK_THROWS_AS(nth_forward_diff(sine, 3, 1), IndexError);
  CHECK_THROWS_AS(nth_forward_diff(sine, 0, 4), IndexError);

  const GTable logs = log_table();
  CHECK(nth_backward_diff(logs, 0, 1) == logs.values()[1]);
  // Nabla^2 f(12) = f(12) f(3) / f(6)^2
  const double nabla2 = 2.4849 * 1.0986 / (1.7918 * 1.7918);
  CHECK(nth_backward_diff(logs, 2, 2).to_real() == doctest::Approx(nabla2).epsilon(1e-13));
  CHECK(std::abs(nth_backward_diff(logs, 2, 2).to_real() - 0.8503) <= 5e-4);
  CHECK_THROWS_AS(nth_backward_diff(logs, 3, 2), IndexError);
  CHECK_THROWS_AS(nth_backward_diff(logs, 0, 4), IndexError);
}

TEST_CASE("closed form agrees with the recurrence") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const auto lt = oracle::random_log_table(rng, 2 + static_cast<std::size_t>(trial % 11));
    const GTable t = from_logs(lt);
    const DiffTable fwd = forward_diff_table(t);
    const DiffTable bwd = backward_diff_table(t);
    for (std::size_t n = 0; n < t.size(); ++n) {
      for (std::size_t i = 0; i + n < t.size(); ++i) {
        const double ref = fwd.at(n, i).log_value();
        CHECK(std::abs(nth_forward_diff(t, n, i).log_value() - ref) <=
              1e-10 * std::max(1.0, std::abs(ref)));
        const double bref = bwd.at(n, i + n).log_value();
        CHECK(std::abs(nth_backward_diff(t, n, i + n).log_value() - bref) <=
              1e-10 * std::max(1.0, std::abs(bref)));
      }
    }
  }
}

TEST_CASE("differences annihilate log-polynomials above their degree") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t degree = static_cast<std::size_t>(trial % 5);
    std::vector<double> c(degree + 1);
    for (double& v : c) v = coeff(rng);
    std::vector<GNum> nodes;
    std::vector<GNum> values;
    for (int i = 0; i < 9; ++i) {
      const double s = -1.0 + 0.25 * i;
      double p = 0.0;
      for (std::size_t j = c.size(); j-- > 0;) p = p * s + c[j];
      nodes.push_back(E(s));
      values.push_back(E(p));
    }
    const DiffTable d = forward_diff_table(GTable(nodes, values));
    for (std::size_t k = degree + 1; k < d.columns.size(); ++k)
      for (const GNum& v : d.columns[k]) CHECK(std::abs(v.log_value()) <= 1e-11);
  }
}

TEST_CASE("factorial function") {
  const GNum x = GNum::from_real(3.3);
  CHECK(factorial_function(x, 1, E(0.7)) == x);
  CHECK(factorial_function(x, 0, E(0.7)) == GNum::one());
  CHECK(factorial_function(E(3), 2, GNum::one()) == E(6));
  CHECK(factorial_function(E(1.5), 3, GNum::one()).log_value() ==
        doctest::Approx(-0.375).epsilon(1e-15));
  // General step: prod_j (ln x - j ln h)
  CHECK(factorial_function(E(2.0), 3, E(0.5)).log_value() ==
        doctest::Approx(2.0 * 1.5 * 1.0).epsilon(1e-15));
}
