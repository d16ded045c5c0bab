#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "hyp2f1/errors.hpp"

namespace hyp2f1 {

using Complex = std::complex<double>;

/// Real parameters (a, b, c) of 2F1(a, b; c; z).
///
/// Construction rejects c = 0, -1, -2, ... since (c)_n appears in every
/// denominator of the defining series.
class HypParams {
 public:
  HypParams(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  /// c > b > 0, the condition under which the Euler integral converges.
  bool euler_valid() const noexcept { return c_ > b_ && b_ > 0.0; }

  HypParams swapped() const { return HypParams(b_, a_, c_); }

 private:
  double a_;
  double b_;
  double c_;
};

/// exp(exponent * Log(base)) with Log the principal logarithm, phase in
/// (-pi, pi]. A base on the negative real axis takes the +pi side, also
/// when its imaginary part is -0.0.
Complex cpow_principal(Complex base, double exponent);

/// Rising factorial x(x+1)...(x+n-1); 1 for n == 0.
double pochhammer(double x, std::size_t n) noexcept;

/// Euler gamma for real argument. Throws PoleError at 0, -1, -2, ...
double gamma_real(double x);

/// log|Gamma(x)|. Throws PoleError at 0, -1, -2, ...
double log_gamma_real(double x);

/// True if x lies within `tol` of an integer.
bool near_integer(double x, double tol) noexcept;

/// True when the real and imaginary parts are both finite.
inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Running error bookkeeping shared by the truncated-series evaluators.
///
/// The tail estimate is the sum of the last two term magnitudes, which
/// stays conservative when consecutive terms alternate between large and
/// small. The rounding estimate is eps * sum |term_k|.
double series_error_estimate(std::span<const double> term_magnitudes,
                             double abs_sum_of_terms, double abs_value) noexcept;

}  // namespace hyp2f1
