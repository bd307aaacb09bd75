#include "glogis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace glogis {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPanelCap = 1.0;
constexpr double kUnitDiskGuard = 1e-3;  // matches the hyp2f1 guard

double oscillation_cap(double frequency) {
  const double f = std::abs(frequency);
  if (f == 0.0) return kPanelCap;
  return std::min(kPanelCap, (2.0 * kPi / f) / 8.0);
}

}  // namespace

void QuadratureConfig::validate() const {
  const bool tols_ok = std::isfinite(abs_tol) && abs_tol > 0.0 &&
                       std::isfinite(rel_tol) && rel_tol > 0.0 &&
                       std::isfinite(tail_tol) && tail_tol > 0.0;
  if (!tols_ok || max_panels < 8) {
    throw ArgumentError(
        "QuadratureConfig: tolerances must be positive and max_panels >= 8");
  }
}

Complex fourier_numeric(const SigmoidParams& p, double omega,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  const TailBounds tb = tail_bounds(p, cfg.tail_tol);
  auto integrand = [&](double t) {
    return derivative(p, t) * std::polar(1.0, -omega * t);
  };
  const Complex integral = integrate_adaptive(integrand, tb.t_lower, tb.t_upper, cfg,
                                              oscillation_cap(omega));
  return integral / std::sqrt(2.0 * kPi);
}

Complex i_integral_numeric(const SigmoidParams& p, double omega,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  const double x = omega / p.beta;
  const double exponent = 1.0 / p.nu + 1.0;
  // Truncation so each tail of (1/beta) * integral stays below tail_tol:
  // lower integrand ~ e^s, upper ~ k^{-1/nu-1} e^{-s/nu}.
  const double s_lower = -std::max(1.0, std::log(1.0 / (p.beta * cfg.tail_tol)));
  const double s_upper = std::max(
      1.0, p.nu * (std::log(p.nu / (p.beta * cfg.tail_tol)) - exponent * std::log(p.k)));
  auto integrand = [&](double s) {
    const double log_mag = s - exponent * detail::log1p_k_exp(p.k, s);
    return std::polar(std::exp(log_mag), x * s);
  };
  const Complex integral =
      integrate_adaptive(integrand, s_lower, s_upper, cfg, oscillation_cap(x));
  return integral / p.beta;
}

double verify_grad_formula(Complex lambda, Complex eta, Complex mu, double alpha,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw DomainError("verify_grad_formula: alpha must be a positive real");
  }
  const double rl = lambda.real();
  const double decay = -(lambda.real() + eta.real() + mu.real());
  if (!(rl > 0.0) || !(-(mu.real() + eta.real()) > rl)) {
    throw DomainError(
        "verify_grad_formula: requires -Re(mu + eta) > Re(lambda) > 0");
  }
  const Complex one(1.0, 0.0);
  const Complex z = one - Complex(alpha, 0.0);
  if (std::abs(z) >= 1.0 - kUnitDiskGuard) {
    throw DomainError("verify_grad_formula: 1 - alpha outside the series disk");
  }

  const Complex closed = beta(lambda, -eta - mu - lambda) * hyp2f1(-mu, lambda, -mu - eta, z);

  // x = e^s turns the half-line integral into one with exponential tails:
  //   integrand(s) = exp(lambda s + eta log(1+e^s) + mu log(1+alpha e^s)).
  auto integrand = [&](double s) {
    const Complex w = lambda * s + eta * detail::log1p_k_exp(1.0, s) +
                      mu * detail::log1p_k_exp(alpha, s);
    return std::exp(w);
  };
  // Rigorous tail truncation from |integrand| = e^{Re lambda s} * O(1) at
  // -inf and C_up e^{-decay s} at +inf.
  const double c_low = std::exp(std::abs(eta.real()) * std::numbers::ln2 +
                                std::abs(mu.real()) * std::log1p(alpha));
  const double s_lower =
      -std::max(1.0, std::log(c_low / (rl * cfg.tail_tol)) / rl);
  const double c_up = std::exp(mu.real() * std::log(alpha) +
                               std::abs(eta.real()) * std::numbers::ln2 +
                               std::abs(mu.real()) * std::log1p(1.0 / alpha));
  const double s_upper =
      std::max(1.0, std::log(c_up / (decay * cfg.tail_tol)) / decay);
  const double osc = std::abs(lambda.imag()) + std::abs(eta.imag()) + std::abs(mu.imag());
  const Complex numeric =
      integrate_adaptive(integrand, s_lower, s_upper, cfg, oscillation_cap(osc));

  return std::abs(numeric - closed);
}

}  // namespace glogis
