#pragma once

#include <complex>

#include "glogis/errors.hpp"

namespace glogis {

using Complex = std::complex<double>;

/// Gamma function for complex argument, Lanczos approximation (g = 7, 9
/// coefficients) with the reflection formula for Re z < 1/2.
///
/// Relative accuracy is ~1e-13 on the strip |Re z| <= 20, |Im z| <= 100.
/// Throws PoleError if z is within 1e-14 of a non-positive integer, and
/// DomainError if the result would overflow a double.
Complex gamma(Complex z);

/// Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
/// Requires Re x > 0 and Re y > 0, else DomainError.
Complex beta(Complex x, Complex y);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
Complex pochhammer(Complex x, unsigned n);

/// Gauss hypergeometric series 2F1(a, b, c; z) summed on |z| < 1 - 1e-3.
///
/// Terms are accumulated until |term| <= 1e-16 |sum|, capped at 10000 terms
/// (NoConvergence beyond the cap). DomainError if |z| is outside the guarded
/// disk or c is within 1e-14 of a non-positive integer.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

/// |2F1(a, b, b; z) - (1 - z)^{-a}| for a fixed regular b (= 3/2).
///
/// The series with equal second and third parameters collapses to the
/// principal-branch binomial (1 - z)^{-a}; the residual measures how well
/// the summed series reproduces it. Preconditions as hyp2f1.
double gauss_degenerate_identity_residual(Complex a, Complex z);

namespace detail {
/// Pole-set membership used by gamma: distance to the nearest non-positive
/// integer is at most tol.
bool near_nonpositive_integer(Complex z, double tol);
}  // namespace detail

}  // namespace glogis
