#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "glogis/logistic.hpp"
#include "glogis/quadrature.hpp"

using glogis::ArgumentError;
using glogis::SigmoidParams;
using glogis::TimeFunction;

namespace {

SigmoidParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logk(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> b(0.5, 4.0);
  std::uniform_real_distribution<double> lognu(std::log(0.1), std::log(10.0));
  return SigmoidParams(std::exp(logk(rng)), b(rng), std::exp(lognu(rng)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SigmoidParams(0.0, 2.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(SigmoidParams(1.0, -2.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(SigmoidParams(1.0, 2.0, 0.0), ArgumentError);
  CHECK_THROWS_AS(SigmoidParams(1.0, 2.0, std::nan("")), ArgumentError);
  CHECK_NOTHROW(SigmoidParams(1e-3, 1e3, 12.0));
}

TEST_CASE("curve reduces to tanh for k=1, beta=2, nu=1") {
  const SigmoidParams p(1.0, 2.0, 1.0);
  CHECK(std::abs(glogis::curve(p, 0.0)) < 1e-15);
  // mpmath: tanh(1) = 0.7615941559557648881195
  CHECK(glogis::curve(p, 1.0) == doctest::Approx(0.76159415595576488812).epsilon(1e-15));
  CHECK(std::abs(glogis::curve(p, 1.0) - std::tanh(1.0)) <= 1e-15);
  CHECK(std::abs(glogis::curve(p, -2.3) - std::tanh(-2.3)) <= 1e-15);
}

TEST_CASE("curve reaches its asymptotes at the tail bounds") {
  // The tail bound is exact up to the spacing of doubles at +-1 (2^-52),
  // which shows up as a one-ulp excess over the analytic 1e-12 envelope.
  constexpr double kQuantum = 5e-16;
  std::mt19937_64 rng(101);
  for (int i = 0; i < 50; ++i) {
    const SigmoidParams p = random_params(rng);
    const auto tb = glogis::tail_bounds(p, 1e-12);
    CHECK(std::abs(glogis::curve(p, tb.t_upper) - 1.0) <= 1e-12 + kQuantum);
    CHECK(std::abs(glogis::curve(p, tb.t_lower) + 1.0) <= 1e-12 + kQuantum);
  }
}

TEST_CASE("curve is strictly increasing") {
  // Sampled inside the window where the slope is still representable; past
  // it the values saturate to +-1 in double and the order degenerates to <=.
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const SigmoidParams p = random_params(rng);
    const auto tb = glogis::tail_bounds(p, 1e-8);
    double t1 = tb.t_lower + (tb.t_upper - tb.t_lower) * unit(rng);
    double t2 = tb.t_lower + (tb.t_upper - tb.t_lower) * unit(rng);
    if (t1 > t2) std::swap(t1, t2);
    if (t2 - t1 < 1e-3) continue;
    CHECK(glogis::curve(p, t1) < glogis::curve(p, t2));
  }
}

TEST_CASE("derivative at the standard-logistic point") {
  const SigmoidParams p(1.0, 2.0, 1.0);
  CHECK(glogis::derivative(p, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // mpmath: sech^2(1) = 0.4199743416140260694
  CHECK(glogis::derivative(p, 1.0) ==
        doctest::Approx(0.41997434161402606939).epsilon(1e-14));
}

TEST_CASE("derivative matches centered differences of the curve") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> tdist(-6.0, 6.0);
  const double h = 1e-6;
  for (int i = 0; i < 300; ++i) {
    const SigmoidParams p = random_params(rng);
    const double t = tdist(rng);
    const double fd = (glogis::curve(p, t + h) - glogis::curve(p, t - h)) / (2.0 * h);
    CHECK(std::abs(glogis::derivative(p, t) - fd) < 1e-7);
  }
}

TEST_CASE("derivative stays positive and finite far into the tails") {
  // e^{-beta t} alone would overflow well before t = -90; the log-space
  // evaluation must keep the value finite (and positive until it underflows).
  const SigmoidParams p(2.5, 3.0, 0.4);
  for (double t : {-400.0, -90.0, -50.0, 0.0, 50.0, 200.0}) {
    const double f = glogis::derivative(p, t);
    CHECK(std::isfinite(f));
    CHECK(f >= 0.0);
  }
  CHECK(glogis::derivative(p, -90.0) > 0.0);
  CHECK(glogis::derivative(p, 200.0) > 0.0);
}

TEST_CASE("derivative integrates to 2") {
  std::mt19937_64 rng(104);
  glogis::QuadratureConfig cfg;
  for (int i = 0; i < 8; ++i) {
    const SigmoidParams p = random_params(rng);
    const auto tb = glogis::tail_bounds(p, 1e-13);
    const double mass = glogis::integrate_adaptive_real(
        [&](double t) { return glogis::derivative(p, t); }, tb.t_lower, tb.t_upper, cfg);
    CHECK(std::abs(mass - 2.0) < 1e-10);
  }
}

TEST_CASE("peak time formula") {
  CHECK(glogis::peak_time(SigmoidParams(1.0, 2.0, 1.0)) == 0.0);
  CHECK(glogis::peak_time(SigmoidParams(3.7, 0.9, 3.7)) == 0.0);
  // mpmath: ln(1/4)/2 = -0.6931471805599453094
  CHECK(glogis::peak_time(SigmoidParams(1.0, 2.0, 4.0)) ==
        doctest::Approx(-0.69314718055994530942).epsilon(1e-15));
}

TEST_CASE("derivative attains its maximum at peak_time") {
  std::mt19937_64 rng(105);
  const double eps = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const SigmoidParams p = random_params(rng);
    const double tm = glogis::peak_time(p);
    const double at_peak = glogis::derivative(p, tm);
    CHECK(glogis::derivative(p, tm - eps) < at_peak);
    CHECK(glogis::derivative(p, tm + eps) < at_peak);
  }
}

TEST_CASE("peak shifts left for nu > 1 and right for nu < 1 (k = 1)") {
  for (double nu : {1.5, 4.0, 12.0}) {
    CHECK(glogis::peak_time(SigmoidParams(1.0, 2.0, nu)) < 0.0);
  }
  for (double nu : {0.9, 0.25, 1.0 / 12.0}) {
    CHECK(glogis::peak_time(SigmoidParams(1.0, 2.0, nu)) > 0.0);
  }
  CHECK(glogis::peak_time(SigmoidParams(1.0, 2.0, 1.0)) == 0.0);
}

TEST_CASE("peak location agrees with dense-grid argmax") {
  // (k=1, nu=4, beta=2): argmax of the derivative on a step-1e-5 grid
  const SigmoidParams p(1.0, 2.0, 4.0);
  const double tm = glogis::peak_time(p);
  const double step = 1e-5;
  double best_t = 0.0, best_f = -1.0;
  for (double t = tm - 0.05; t <= tm + 0.05; t += step) {
    const double f = glogis::derivative(p, t);
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
  }
  CHECK(std::abs(best_t - tm) <= step);
}

TEST_CASE("half-shape pulse is a derivative polynomial of the unit-shape pulse") {
  // f(t; k=1, nu=1/2, beta) = f(t; k=1, nu=1, beta) - (1/beta) f'(t; ...),
  // with f'(t) = -2 beta^2 u (1-u) / (1+u)^3, u = e^{-beta t}.
  for (double beta : {1.0, 2.0, 3.3}) {
    const SigmoidParams half(1.0, beta, 0.5);
    const SigmoidParams unit(1.0, beta, 1.0);
    for (double t = -8.0; t <= 8.0; t += 0.05) {
      const double u = std::exp(-beta * t);
      const double fprime = -2.0 * beta * beta * u * (1.0 - u) / std::pow(1.0 + u, 3);
      const double combined = glogis::derivative(unit, t) - fprime / beta;
      CHECK(std::abs(glogis::derivative(half, t) - combined) < 1e-10);
    }
  }
}

TEST_CASE("sample_time_domain grids") {
  const SigmoidParams p(1.0, 2.0, 1.0);
  const auto ts = glogis::sample_time_domain(p, -5.0, 5.0, 3, TimeFunction::derivative);
  REQUIRE(ts.t.size() == 3);
  CHECK(ts.t[0] == -5.0);
  CHECK(ts.t[1] == 0.0);
  CHECK(ts.t[2] == 5.0);
  // mpmath: sech^2(5) = 1.8158323094380668413e-4
  CHECK(ts.values[0] == doctest::Approx(1.8158323094380668413e-4).epsilon(1e-13));
  CHECK(ts.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ts.values[2] == doctest::Approx(ts.values[0]).epsilon(1e-13));

  const auto two = glogis::sample_time_domain(p, -1.0, 2.0, 2, TimeFunction::curve);
  REQUIRE(two.t.size() == 2);
  CHECK(two.t.front() == -1.0);
  CHECK(two.t.back() == 2.0);

  for (std::size_t i = 1; i < ts.t.size(); ++i) CHECK(ts.t[i - 1] < ts.t[i]);
}

TEST_CASE("sample_time_domain rejects bad grids") {
  const SigmoidParams p(1.0, 2.0, 1.0);
  CHECK_THROWS_AS(glogis::sample_time_domain(p, 1.0, 1.0, 5, TimeFunction::curve),
                  ArgumentError);
  CHECK_THROWS_AS(glogis::sample_time_domain(p, 2.0, 1.0, 5, TimeFunction::curve),
                  ArgumentError);
  CHECK_THROWS_AS(glogis::sample_time_domain(p, 0.0, 1.0, 1, TimeFunction::curve),
                  ArgumentError);
}

TEST_CASE("wide-shape pulse peaks left of zero") {
  const SigmoidParams p(1.0, 2.0, 12.0);
  const auto ts = glogis::sample_time_domain(p, -6.0, 6.0, 2401, TimeFunction::derivative);
  const auto it = std::max_element(ts.values.begin(), ts.values.end());
  CHECK(ts.t[static_cast<std::size_t>(it - ts.values.begin())] < 0.0);
  // unimodal: the first differences change sign exactly once
  int sign_changes = 0;
  for (std::size_t i = 2; i < ts.values.size(); ++i) {
    const double d1 = ts.values[i - 1] - ts.values[i - 2];
    const double d2 = ts.values[i] - ts.values[i - 1];
    if (d1 > 0.0 && d2 < 0.0) ++sign_changes;
  }
  CHECK(sign_changes == 1);
}

}  // namespace
