#include "glogis/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace glogis {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-14;
constexpr double kSeriesRelTol = 1e-16;
constexpr int kSeriesMaxTerms = 10000;
constexpr double kUnitDiskGuard = 1e-3;

// Lanczos g = 7, 9-coefficient set.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Lanczos core, valid for Re z >= 1/2.
Complex gamma_core(Complex z) {
  Complex acc(kLanczosCoeff[0], 0.0);
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
    acc += kLanczosCoeff[k] / (z + Complex(static_cast<double>(k) - 1.0, 0.0));
  }
  const Complex t = z + Complex(kLanczosG - 0.5, 0.0);
  // exp form keeps intermediate magnitudes representable for large |Im z|.
  return std::sqrt(2.0 * kPi) * std::exp((z - Complex(0.5, 0.0)) * std::log(t) - t) * acc;
}

}  // namespace

namespace detail {

bool near_nonpositive_integer(Complex z, double tol) {
  const double n = std::round(z.real());
  if (n > 0.5) return false;
  return std::hypot(z.real() - n, z.imag()) <= tol;
}

}  // namespace detail

Complex gamma(Complex z) {
  if (detail::near_nonpositive_integer(z, kPoleTol)) {
    throw PoleError("gamma: argument at a non-positive integer pole");
  }
  Complex result;
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    result = kPi / (std::sin(kPi * z) * gamma_core(Complex(1.0, 0.0) - z));
  } else {
    result = gamma_core(z);
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw DomainError("gamma: result not representable in double precision");
  }
  return result;
}

Complex beta(Complex x, Complex y) {
  if (!(x.real() > 0.0) || !(y.real() > 0.0)) {
    throw DomainError("beta: requires Re x > 0 and Re y > 0");
  }
  const Complex result = gamma(x) * gamma(y) / gamma(x + y);
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw DomainError("beta: result not representable in double precision");
  }
  return result;
}

Complex pochhammer(Complex x, unsigned n) {
  Complex prod(1.0, 0.0);
  for (unsigned j = 0; j < n; ++j) {
    prod *= x + Complex(static_cast<double>(j), 0.0);
  }
  return prod;
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
  if (std::abs(z) >= 1.0 - kUnitDiskGuard) {
    throw DomainError("hyp2f1: |z| outside the guarded series disk");
  }
  if (detail::near_nonpositive_integer(c, kPoleTol)) {
    throw DomainError("hyp2f1: c is a non-positive integer");
  }
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  for (int n = 0; n < kSeriesMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      throw DomainError("hyp2f1: partial sums not representable in double precision");
    }
    if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) {
      return sum;
    }
  }
  throw NoConvergence("hyp2f1: series cap reached before tolerance");
}

double gauss_degenerate_identity_residual(Complex a, Complex z) {
  const Complex b(1.5, 0.0);
  const Complex series = hyp2f1(a, b, b, z);
  const Complex binomial = std::exp(-a * std::log(Complex(1.0, 0.0) - z));
  return std::abs(series - binomial);
}

}  // namespace glogis
