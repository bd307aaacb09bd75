#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "glogis/quadrature.hpp"
#include "glogis/spectral.hpp"
#include "glogis/special_functions.hpp"

namespace glogis::cli {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kFigureShapes = {1.0, 4.0, 8.0, 12.0, 0.25, 0.125, 1.0 / 12.0};

double check_standard_reduction() {
  const SigmoidParams p(1.0, 2.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double w = -30.0 + 0.1 * i;
    worst = std::max(worst, std::abs(fourier_closed_form(p, w) -
                                     fourier_standard_logistic(w)));
  }
  return worst;
}

double check_closed_form_vs_quadrature() {
  double worst = 0.0;
  for (double nu : kFigureShapes) {
    const SigmoidParams p(1.0, 2.0, nu);
    for (int i = 0; i <= 16; ++i) {
      const double w = -20.0 + 2.5 * i;
      worst = std::max(worst,
                       std::abs(fourier_numeric(p, w) - fourier_closed_form(p, w)));
    }
  }
  return worst;
}

double check_substitution_chain() {
  double worst = 0.0;
  for (auto [k, b, nu] : {std::array{1.0, 2.0, 1.0}, std::array{3.0, 1.5, 0.7},
                          std::array{0.5, 1.0, 3.0}}) {
    const SigmoidParams p(k, b, nu);
    for (double w : {0.0, 1.5, 4.0}) {
      const Complex chained =
          i_integral_numeric(p, w) * (2.0 * p.k * p.beta / p.nu) / std::sqrt(2.0 * kPi);
      worst = std::max(worst, std::abs(chained - fourier_numeric(p, w)));
    }
  }
  return worst;
}

double check_shift_identity(bool flip_sign) {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> logk(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> b(0.5, 4.0);
  std::uniform_real_distribution<double> lognu(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> wdist(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double beta = b(rng);
    const double nu = std::exp(lognu(rng));
    const SigmoidParams p(std::exp(logk(rng)), beta, nu);
    const double w = wdist(rng) * beta;
    Complex phase = shift_phase(p, w);
    if (flip_sign) phase = std::conj(phase);
    const Complex lhs = fourier_closed_form(p, w);
    const Complex rhs = phase * fourier_closed_form(SigmoidParams(1.0, beta, nu), w);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

double check_polynomial_relation() {
  double worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    for (double beta : {1.0, 2.0}) {
      const SigmoidParams shaped(1.0, beta, 1.0 / static_cast<double>(n));
      const SigmoidParams base(1.0, beta, 1.0);
      for (int i = 0; i <= 40; ++i) {
        const double w = -20.0 + i;
        const Complex lhs = fourier_closed_form(shaped, w);
        const Complex rhs =
            polynomial_multiplier(n, beta, w) * fourier_closed_form(base, w);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  return worst;
}

double check_gamma_recurrence() {
  std::mt19937_64 rng(506);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  double worst = 0.0;
  int tested = 0;
  while (tested < 1000) {
    const Complex z(re(rng), im(rng));
    if (detail::near_nonpositive_integer(z, 1e-6)) continue;
    const Complex lhs = gamma(z + Complex(1.0, 0.0));
    worst = std::max(worst, std::abs(lhs - z * gamma(z)) / std::abs(lhs));
    ++tested;
  }
  return worst;
}

double check_gamma_reflection() {
  std::mt19937_64 rng(507);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  double worst = 0.0;
  int tested = 0;
  while (tested < 1000) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z.real() - std::round(z.real())) < 1e-3 && std::abs(z.imag()) < 1e-3)
      continue;
    const Complex lhs = gamma(z) * gamma(Complex(1.0, 0.0) - z);
    const Complex rhs = kPi / std::sin(kPi * z);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    ++tested;
  }
  return worst;
}

double check_grad_spot() {
  double worst = 0.0;
  for (auto [k, b, nu, w] : {std::array{0.5, 2.0, 1.0, 2.0}, std::array{0.8, 1.0, 0.7, 1.0},
                             std::array{1.5, 2.0, 4.0, 3.0}}) {
    const Complex lambda(1.0, w / b);
    const Complex eta(0.0, 0.0);
    const Complex mu(-1.0 / nu - 1.0, 0.0);
    worst = std::max(worst, verify_grad_formula(lambda, eta, mu, k));
  }
  return worst;
}

double check_dc_normalization() {
  std::mt19937_64 rng(508);
  std::uniform_real_distribution<double> logk(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> b(0.5, 4.0);
  std::uniform_real_distribution<double> lognu(std::log(0.1), std::log(10.0));
  const double want = std::sqrt(2.0 / kPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SigmoidParams p(std::exp(logk(rng)), b(rng), std::exp(lognu(rng)));
    worst = std::max(worst, std::abs(fourier_closed_form(p, 0.0) - Complex(want, 0.0)));
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  auto add = [&](std::string name, double residual, double threshold) {
    results.push_back(CheckResult{std::move(name), residual, threshold,
                                  residual < threshold});
  };
  add("standard-logistic reduction", check_standard_reduction(), 1e-12);
  add("closed form vs quadrature", check_closed_form_vs_quadrature(), 1e-8);
  add("u-substitution chain", check_substitution_chain(), 1e-9);
  add("shift identity", check_shift_identity(opts.flip_shift_sign), 1e-13);
  add("polynomial relation", check_polynomial_relation(), 1e-10);
  add("gamma recurrence", check_gamma_recurrence(), 1e-12);
  add("gamma reflection", check_gamma_reflection(), 1e-11);
  add("tabulated-integral spot check", check_grad_spot(), 1e-8);
  add("dc normalization", check_dc_normalization(), 1e-14);
  return results;
}

}  // namespace glogis::cli
