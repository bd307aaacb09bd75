#pragma once

#include <cstddef>
#include <vector>

#include "glogis/logistic.hpp"
#include "glogis/special_functions.hpp"

namespace glogis {

/// Uniform omega sampling for spectra. ArgumentError unless
/// omega_min < omega_max and n >= 2.
struct FrequencyGrid {
  double omega_min;
  double omega_max;
  std::size_t n;

  FrequencyGrid(double omega_min, double omega_max, std::size_t n);
};

/// Paired (omega, F(omega)) samples of one curve's derivative spectrum.
struct SpectrumTable {
  std::vector<double> omega;
  std::vector<Complex> F;
  SigmoidParams params;

  double magnitude(std::size_t i) const;
  double phase(std::size_t i) const;
};

/// Closed-form Fourier transform of the logistic derivative,
///   F(omega) = sqrt(2/pi) k^{-i omega/beta}
///              Gamma(1 + i omega/beta) Gamma(1/nu - i omega/beta) / Gamma(1/nu)
/// with the k-power on the principal branch (k > 0 keeps it branch-free).
Complex fourier_closed_form(const SigmoidParams& p, double omega);

/// Transform of the standard-logistic derivative sech^2(t):
/// sqrt(2/pi) (pi omega/2) / sinh(pi omega/2), real for all omega, with the
/// removable singularity at omega = 0 handled explicitly.
Complex fourier_standard_logistic(double omega);

/// Pure phase e^{-i (ln k / beta) omega}: the transform-side effect of the
/// time shift the parameter k produces. fourier_closed_form(k, ...) equals
/// shift_phase(...) * fourier_closed_form(k=1, ...) identically.
Complex shift_phase(const SigmoidParams& p, double omega);

/// (1/Gamma(n)) * prod_{j=1}^{n-1} (j - i omega/beta), n >= 2.
///
/// Multiplying the k=1, nu=1 spectrum by this factor yields the k=1,
/// nu=1/n spectrum. The frequency enters scaled as omega/beta: that is what
/// Gamma(n - i omega/beta) expands to under the Gamma recurrence.
Complex polynomial_multiplier(int n, double beta, double omega);

/// (i omega)^n F(omega): spectrum of the nth derivative of the pulse.
Complex nth_derivative_spectrum(const SigmoidParams& p, unsigned n, double omega);

/// fourier_closed_form evaluated at each grid point.
SpectrumTable sample_spectrum(const SigmoidParams& p, const FrequencyGrid& grid);

}  // namespace glogis
