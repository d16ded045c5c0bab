#pragma once

#include <cstddef>
#include <vector>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

/// Threshold on |b - a - round(b - a)| below which b - a counts as an integer.
inline constexpr double kIntegerDifferenceThreshold = 1e-8;

/// Coefficients d_0..d_{n_max}(s, z0) of one of the two continuation series.
struct BuhringCoeffs {
  double s = 0.0;
  Complex z0{};
  std::vector<Complex> d;
};

/// Forward three-term recurrence for d_n(s, z0), from d_{-1} = 0, d_0 = 1:
///
///   d_n = (n+s-1) / (n(n+2s-a-b)) *
///         { z0(1-z0)(n+s-2) d_{n-2} + [(n+s)(1-2z0) + (a+b+1)z0 - c] d_{n-1} }
///
/// Throws IntegerDifferenceError when n + 2s - a - b vanishes for some index,
/// which happens exactly when b - a is an integer of modulus <= n_max.
BuhringCoeffs buhring_coeffs(double s, Complex z0, const HypParams& params,
                             std::size_t n_max);

/// d_n(s, z0) alone; same recurrence and errors as buhring_coeffs.
Complex d_coeff(double s, Complex z0, const HypParams& params, std::size_t n);

/// Radius of the circle around z0 outside of which both series converge.
double buhring_radius(Complex z0) noexcept;

/// |z - z0| - max(|z0|, |z0 - 1|), with z0 - z on the negative real axis
/// (|ph(z0 - z)| = pi) reported as outside.
RegionVerdict in_region_buhring(Complex z, Complex z0 = {0.5, 0.0}) noexcept;

/// Buhring's continuation of 2F1 around z0: two series in (z - z0)^{-n}
/// with prefactors Gamma(c)Gamma(b-a)/(Gamma(b)Gamma(c-a)) (z0-z)^{-a} and
/// Gamma(c)Gamma(a-b)/(Gamma(a)Gamma(c-b)) (z0-z)^{-b}, each summed over
/// indices 0..n_terms.
///
/// The error estimate is multiplied by 1/|sin(pi(b-a))| (reported in
/// error_inflation), which tracks the cancellation between the two series as
/// b - a approaches an integer.
SeriesResult buhring_eval(const HypParams& params, Complex z,
                          Complex z0 = {0.5, 0.0}, std::size_t n_terms = 20,
                          double tol = kDefaultTolerance);

}  // namespace hyp2f1
