#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "glogis/errors.hpp"
#include "glogis/logistic.hpp"
#include "glogis/special_functions.hpp"

namespace glogis {

/// Tolerances and truncation policy for the numerical oracle.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double tail_tol = 1e-12;
  std::size_t max_panels = std::size_t{1} << 20;

  void validate() const;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr std::array<double, 15> kGlNodes = {
    -0.987992518020485428490, -0.937273392400705904308, -0.848206583410427216201,
    -0.724417731360170047416, -0.570972172608538847537, -0.394151347077563369897,
    -0.201194093997434522301, 0.0,                       0.201194093997434522301,
    0.394151347077563369897,  0.570972172608538847537,  0.724417731360170047416,
    0.848206583410427216201,  0.937273392400705904308,  0.987992518020485428490,
};
inline constexpr std::array<double, 15> kGlWeights = {
    0.0307532419961172683546, 0.0703660474881081247093, 0.107159220467171935012,
    0.139570677926154314448,  0.166269205816993933553,  0.186161000015562211027,
    0.198431485327111576456,  0.202578241925561272881,  0.198431485327111576456,
    0.186161000015562211027,  0.166269205816993933553,  0.139570677926154314448,
    0.107159220467171935012,  0.0703660474881081247093, 0.0307532419961172683546,
};

template <class F>
Complex gl15(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
    sum += kGlWeights[i] * f(mid + half * kGlNodes[i]);
  }
  return half * sum;
}

}  // namespace detail

/// Adaptive composite 15-point Gauss-Legendre quadrature of a complex-valued
/// integrand on [a, b]. The interval is pre-split into panels no wider than
/// max_panel_width (and at least 8 panels); each panel's error is estimated
/// by bisection comparison and panels are split until the per-panel share of
/// max(abs_tol, rel_tol * |estimate|) is met. Throws NoConvergence if the
/// panel budget runs out first.
template <class F>
Complex integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                           double max_panel_width = 0.0) {
  cfg.validate();
  if (!(a < b)) {
    throw ArgumentError("integrate_adaptive: requires a < b");
  }
  const double width = b - a;
  double cap = max_panel_width > 0.0 ? std::min(max_panel_width, width / 8.0)
                                     : width / 8.0;
  const std::size_t m = static_cast<std::size_t>(std::ceil(width / cap));
  if (m > cfg.max_panels) {
    throw NoConvergence("integrate_adaptive: panel cap exceeded by initial split");
  }

  struct Panel {
    double a, b;
    Complex coarse;
  };
  std::vector<Panel> stack;
  stack.reserve(m + 64);
  Complex estimate(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double pa = a + width * static_cast<double>(i) / static_cast<double>(m);
    const double pb =
        (i + 1 == m) ? b : a + width * static_cast<double>(i + 1) / static_cast<double>(m);
    const Complex coarse = detail::gl15(f, pa, pb);
    estimate += coarse;
    stack.push_back(Panel{pa, pb, coarse});
  }
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate));

  Complex result(0.0, 0.0);
  std::size_t panels_used = m;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    if (++panels_used > cfg.max_panels) {
      throw NoConvergence("integrate_adaptive: panel budget exhausted");
    }
    const double mid = 0.5 * (p.a + p.b);
    const Complex left = detail::gl15(f, p.a, mid);
    const Complex right = detail::gl15(f, mid, p.b);
    const Complex fine = left + right;
    const double err = std::abs(fine - p.coarse);
    const double share = tol * ((p.b - p.a) / width);
    if (err <= share || (p.b - p.a) <= 1e-14 * width) {
      result += fine;
    } else {
      stack.push_back(Panel{mid, p.b, right});
      stack.push_back(Panel{p.a, mid, left});
    }
  }
  return result;
}

/// Real-integrand convenience wrapper over integrate_adaptive.
template <class F>
double integrate_adaptive_real(F&& f, double a, double b, const QuadratureConfig& cfg,
                               double max_panel_width = 0.0) {
  auto wrapped = [&](double x) { return Complex(f(x), 0.0); };
  return integrate_adaptive(wrapped, a, b, cfg, max_panel_width).real();
}

/// Direct numerical evaluation of the defining transform integral
///   F(omega) = (1/sqrt(2 pi)) \int f(t) e^{-i omega t} dt
/// over the tail-bounded window, with panels no wider than one eighth of an
/// oscillation period. Independent of the Gamma-function machinery.
Complex fourier_numeric(const SigmoidParams& p, double omega,
                        const QuadratureConfig& cfg = {});

/// The u-substituted integral
///   I(omega) = (1/beta) \int_0^inf u^{i omega/beta} [1 + k u]^{-1/nu - 1} du,
/// evaluated in s = ln u coordinates where the oscillation is uniform and
/// both tails decay exponentially. Equals fourier_numeric * sqrt(2 pi) * nu
/// / (2 k beta).
Complex i_integral_numeric(const SigmoidParams& p, double omega,
                           const QuadratureConfig& cfg = {});

/// Spot check of the tabulated integral identity
///   \int_0^inf x^{lambda-1} (1+x)^eta (1+alpha x)^mu dx
///     = B(lambda, -eta-mu-lambda) 2F1(-mu, lambda, -mu-eta; 1-alpha).
/// Returns |quadrature - closed form|. Valid for alpha > 0,
/// -Re(mu+eta) > Re(lambda) > 0 and |1-alpha| inside the series disk;
/// DomainError otherwise.
double verify_grad_formula(Complex lambda, Complex eta, Complex mu, double alpha,
                           const QuadratureConfig& cfg = {});

}  // namespace glogis
