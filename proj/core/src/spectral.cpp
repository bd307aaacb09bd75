#include "glogis/spectral.hpp"

#include <cmath>
#include <numbers>

namespace glogis {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);

}  // namespace

FrequencyGrid::FrequencyGrid(double omega_min_, double omega_max_, std::size_t n_)
    : omega_min(omega_min_), omega_max(omega_max_), n(n_) {
  if (!(std::isfinite(omega_min) && std::isfinite(omega_max)) ||
      !(omega_min < omega_max) || n < 2) {
    throw ArgumentError("FrequencyGrid: requires omega_min < omega_max and n >= 2");
  }
}

double SpectrumTable::magnitude(std::size_t i) const { return std::abs(F[i]); }

double SpectrumTable::phase(std::size_t i) const { return std::arg(F[i]); }

Complex fourier_closed_form(const SigmoidParams& p, double omega) {
  const double x = omega / p.beta;
  const double s = 1.0 / p.nu;
  const Complex num = gamma(Complex(1.0, x)) * gamma(Complex(s, -x));
  const Complex den = gamma(Complex(s, 0.0));
  return kSqrt2OverPi * shift_phase(p, omega) * num / den;
}

Complex fourier_standard_logistic(double omega) {
  const double x = kPi * omega / 2.0;
  double factor;
  if (std::abs(x) < 1e-8) {
    factor = 1.0 - x * x / 6.0;  // x/sinh(x) near the removable singularity
  } else {
    factor = x / std::sinh(x);
  }
  return Complex(kSqrt2OverPi * factor, 0.0);
}

Complex shift_phase(const SigmoidParams& p, double omega) {
  return std::polar(1.0, -omega * std::log(p.k) / p.beta);
}

Complex polynomial_multiplier(int n, double beta, double omega) {
  if (n < 2) {
    throw ArgumentError("polynomial_multiplier: requires n >= 2");
  }
  if (!(std::isfinite(beta) && beta > 0.0)) {
    throw ArgumentError("polynomial_multiplier: requires beta > 0");
  }
  const double x = omega / beta;
  // Accumulate (j - ix)/j so neither the product nor Gamma(n) = (n-1)!
  // overflows on its own.
  Complex prod(1.0, 0.0);
  for (int j = 1; j < n; ++j) {
    const double dj = static_cast<double>(j);
    prod *= Complex(dj, -x) / dj;
  }
  return prod;
}

Complex nth_derivative_spectrum(const SigmoidParams& p, unsigned n, double omega) {
  Complex result = fourier_closed_form(p, omega);
  for (unsigned j = 0; j < n; ++j) {
    result *= Complex(0.0, omega);
  }
  return result;
}

SpectrumTable sample_spectrum(const SigmoidParams& p, const FrequencyGrid& grid) {
  SpectrumTable out{std::vector<double>(grid.n), std::vector<Complex>(grid.n), p};
  const double step = (grid.omega_max - grid.omega_min) / static_cast<double>(grid.n - 1);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double w =
        (i + 1 == grid.n) ? grid.omega_max : grid.omega_min + step * static_cast<double>(i);
    out.omega[i] = w;
    out.F[i] = fourier_closed_form(p, w);
  }
  return out;
}

}  // namespace glogis
