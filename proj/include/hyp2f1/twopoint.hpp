#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

inline constexpr std::size_t kTwoPointDefaultTerms = 40;

/// Coefficients of the two-point Taylor expansion of f(t) = (1 - zt)^{-a}
/// at t = 0 and t = 1:
///
///   f(t) = sum_n [A_n + B_n t] t^n (t - 1)^n
struct TwoPointCoeffs {
  Complex z{};
  double a = 0.0;
  std::vector<Complex> A;
  std::vector<Complex> B;
};

/// (A_n, B_n) from the closed-form finite sums; n = 0 returns the initial
/// values (1, (1-z)^{-a} - 1).
/// Throws SingularityError for z = 1.
std::pair<Complex, Complex> twopoint_coeffs_explicit(double a, Complex z, std::size_t n);

/// A_0..A_{n_max}, B_0..B_{n_max} by the forward recursion obtained from
/// (1 - zt) f' = a z f. Each B step divides by (1 - z).
TwoPointCoeffs twopoint_coeffs_recursive(double a, Complex z, std::size_t n_max);

/// (Phi_n, Psi_n) = ((-1)^n (b)_n (c-b)_n / (c)_{2n},
///                   (-1)^n (b)_{n+1} (c-b)_n / (c)_{2n+1}),
/// the normalized Beta moments of t^n (t-1)^n and t^{n+1} (t-1)^n.
std::pair<double, double> phi_psi_moments(std::size_t n, double b, double c);

/// 4|1 - z| - |z|^2 > 0.
RegionVerdict in_region_twopoint(Complex z) noexcept;

/// sum_{n=0}^{N} (-1)^n (b)_n (c-b)_n / (c)_{2n+1} [(c+2n) A_n + (b+n) B_n].
SeriesResult eval_twopoint(const HypParams& params, Complex z,
                           std::size_t n_terms = kTwoPointDefaultTerms,
                           double tol = kDefaultTolerance);

}  // namespace hyp2f1
