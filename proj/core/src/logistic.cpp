#include "glogis/logistic.hpp"

#include <algorithm>
#include <cmath>

namespace glogis {

namespace detail {

double log1p_k_exp(double k, double x) {
  const double e = x + std::log(k);  // log(k e^x)
  if (e > 30.0) {
    return e + std::log1p(std::exp(-e));
  }
  return std::log1p(std::exp(e));
}

}  // namespace detail

SigmoidParams::SigmoidParams(double k_, double beta_, double nu_)
    : k(k_), beta(beta_), nu(nu_) {
  if (!(std::isfinite(k) && k > 0.0) || !(std::isfinite(beta) && beta > 0.0) ||
      !(std::isfinite(nu) && nu > 0.0)) {
    throw ArgumentError("SigmoidParams: k, beta, nu must be positive and finite");
  }
}

double curve(const SigmoidParams& p, double t) {
  return -1.0 + 2.0 * std::exp(-(1.0 / p.nu) * detail::log1p_k_exp(p.k, -p.beta * t));
}

double derivative(const SigmoidParams& p, double t) {
  const double bt = p.beta * t;
  const double bracket = detail::log1p_k_exp(p.k, -bt);
  return std::exp(std::log(2.0 * p.k * p.beta / p.nu) - bt - (1.0 / p.nu + 1.0) * bracket);
}

double peak_time(const SigmoidParams& p) { return std::log(p.k / p.nu) / p.beta; }

TailBounds tail_bounds(const SigmoidParams& p, double tol) {
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw ArgumentError("tail_bounds: tol must be positive and finite");
  }
  const double upper = std::log(2.0 * p.k / (p.nu * tol)) / p.beta;
  const double lower =
      -(p.nu / p.beta) * (std::log(2.0 / tol) - std::log(p.k) / p.nu);
  // Keep the window around the pulse even for loose tolerances.
  const double tm = peak_time(p);
  return TailBounds{std::min(lower, tm - 1.0), std::max(upper, tm + 1.0)};
}

TimeSeries sample_time_domain(const SigmoidParams& p, double t_min, double t_max,
                              std::size_t n, TimeFunction which) {
  if (!(t_min < t_max) || n < 2) {
    throw ArgumentError("sample_time_domain: requires t_min < t_max and n >= 2");
  }
  TimeSeries out{std::vector<double>(n), std::vector<double>(n), p};
  const double step = (t_max - t_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (i + 1 == n) ? t_max : t_min + step * static_cast<double>(i);
    out.t[i] = t;
    out.values[i] = which == TimeFunction::curve ? curve(p, t) : derivative(p, t);
  }
  return out;
}

}  // namespace glogis
