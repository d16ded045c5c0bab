#pragma once

#include <cstddef>
#include <vector>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

inline constexpr std::size_t kThreePointDefaultTerms = 30;

/// Coefficients of the three-point Taylor expansion of f(t) = (1 - zt)^{-a}
/// at t = 0, 1/2, 1:
///
///   f(t) = sum_n [A_n + B_n t + C_n t^2] [t (t - 1) (t - 1/2)]^n
///
/// A_0 + B_0 t + C_0 t^2 interpolates f at the three base points.
struct ThreePointCoeffs {
  Complex z{};
  double a = 0.0;
  std::vector<Complex> A;
  std::vector<Complex> B;
  std::vector<Complex> C;
};

/// Forward recursion for (A, B, C) up to n_max. The B and C steps divide by
/// z^2 - 3z + 2, so z = 1 and z = 2 throw SingularityError.
ThreePointCoeffs threepoint_coeffs(double a, Complex z, std::size_t n_max);

/// Phi_n(b, c) = (-1)^n (b)_n (c-b)_n / (2^n (c)_{2n}) 2F1(-n, b+n; c+2n; 2),
/// the normalized Beta moment of t^n (1-t)^n (t - 1/2)^n.
struct Phi3Sequence {
  double b = 0.0;
  double c = 0.0;
  std::vector<double> values;
};

/// Coefficients of X_n Phi_{n-1} + Y_n Phi_n + Z_n Phi_{n+1} = 0.
struct Phi3Recurrence {
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;
};
Phi3Recurrence phi3_recurrence(std::size_t n, double b, double c) noexcept;

/// Phi_{n+1} from Phi_{n-1}, Phi_n. Throws RecurrenceBreakdown if Z_n
/// vanishes relative to X_n and Y_n.
double phi3_next(std::size_t n, double b, double c, double phi_prev, double phi_cur);

/// Recurrence mode starts from Phi_0 = 1, Phi_1 = -b(b-c)(2b-c)/(2c(c+1)(c+2))
/// and falls back to the closed form at any index where the recurrence
/// breaks down. Direct mode evaluates the closed form at every index.
Phi3Sequence phi3_sequence(std::size_t n_max, double b, double c,
                           PhiMode mode = PhiMode::Direct);
double phi3(std::size_t n, double b, double c, PhiMode mode = PhiMode::Direct);

/// 6 sqrt(3) |(1 - z)(2 - z)| - |z|^3 > 0.
RegionVerdict in_region_threepoint(Complex z) noexcept;

/// sum_{n=0}^{N} (-1)^n [A_n Phi_n(b,c) + (b/c) B_n Phi_n(b+1,c+1)
///                      + (b(b+1)/(c(c+1))) C_n Phi_n(b+2,c+2)]
SeriesResult eval_threepoint(const HypParams& params, Complex z,
                             std::size_t n_terms = kThreePointDefaultTerms,
                             PhiMode mode = PhiMode::Direct,
                             double tol = kDefaultTolerance);

}  // namespace hyp2f1
