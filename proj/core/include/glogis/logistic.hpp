#pragma once

#include <cstddef>
#include <vector>

#include "glogis/errors.hpp"

namespace glogis {

/// Parameters (k, beta, nu) of one generalized logistic curve
/// y(t) = -1 + 2 [1 + k e^{-beta t}]^{-1/nu}, asymptotes -1 and 1.
/// All three must be positive and finite; construction rejects otherwise.
struct SigmoidParams {
  double k;
  double beta;
  double nu;

  SigmoidParams(double k, double beta, double nu);
};

enum class TimeFunction { curve, derivative };

/// Uniform time samples of one curve (or its derivative). t is strictly
/// increasing and the arrays have equal length; immutable after construction.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> values;
  SigmoidParams params;
};

/// y(t), strictly increasing, in (-1, 1) for all real t.
double curve(const SigmoidParams& p, double t);

/// y'(t) = (2 k beta / nu) e^{-beta t} [1 + k e^{-beta t}]^{-1/nu - 1}.
/// Positive and unimodal; evaluated in log space so e^{-beta t} never
/// overflows for very negative t.
double derivative(const SigmoidParams& p, double t);

/// Location ln(k/nu)/beta of the maximum of the derivative pulse.
double peak_time(const SigmoidParams& p);

/// Truncation window [t_lower, t_upper] outside which each tail of the
/// derivative pulse integrates to less than tol:
///   upper: (2k/nu) e^{-beta T}        < tol
///   lower: 2 k^{-1/nu} e^{-beta T/nu} < tol
struct TailBounds {
  double t_lower;
  double t_upper;
};

TailBounds tail_bounds(const SigmoidParams& p, double tol);

/// Uniform grid of n points on [t_min, t_max] (endpoints included),
/// evaluating the selected function. ArgumentError unless t_min < t_max
/// and n >= 2.
TimeSeries sample_time_domain(const SigmoidParams& p, double t_min, double t_max,
                              std::size_t n, TimeFunction which);

namespace detail {
/// log(1 + k e^x), stable against overflow of e^x.
double log1p_k_exp(double k, double x);
}  // namespace detail

}  // namespace glogis
