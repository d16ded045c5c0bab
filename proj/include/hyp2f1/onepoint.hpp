#pragma once

#include <cstddef>
#include <vector>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

/// Default truncation for the one-point expansions. The moment recurrence
/// is cross-checked against the extended-precision closed form only up to
/// this order.
inline constexpr std::size_t kOnePointDefaultTerms = 40;

/// Phi_n(b, c, w) = 2F1(-n, b; c; 1/w) for n = 0..n_max.
struct PhiSequence {
  Complex w{};
  std::vector<Complex> values;
};

/// Phi_n(b, c) = 2F1(-n, b; c; 2): the moments of (1 - 2t)^n against the
/// Beta(b, c - b) density. Recurrence mode runs
///   (c+n) Phi_{n+1} + (2b-c) Phi_n - n Phi_{n-1} = 0
/// forward from Phi_0 = 1, Phi_1 = 1 - 2b/c.
double phi_half(std::size_t n, double b, double c, PhiMode mode = PhiMode::Recurrence);
std::vector<double> phi_half_sequence(std::size_t n_max, double b, double c,
                                      PhiMode mode = PhiMode::Recurrence);

/// Phi_n(b, c, w) = 2F1(-n, b; c; 1/w), recurrence
///   (c+n) Phi_{n+1} + ((b+n)/w - 2n - c) Phi_n + n(1 - 1/w) Phi_{n-1} = 0
/// from Phi_0 = 1, Phi_1 = 1 - b/(cw). Throws DomainError for w = 0.
Complex phi_w(std::size_t n, double b, double c, Complex w,
              PhiMode mode = PhiMode::Recurrence);
PhiSequence phi_w_sequence(std::size_t n_max, double b, double c, Complex w,
                           PhiMode mode = PhiMode::Recurrence);

/// |1 - wz| > |z| max(|w|, |1 - w|): the branch point t = 1/z stays outside
/// the smallest disk around w that contains [0, 1]. For Re w >= 1/2 this is
/// the half-plane 2 Re(wz) < 1, otherwise a disk.
RegionVerdict in_region_onepoint(Complex z, Complex w) noexcept;

/// (1 - z/2)^{-a} sum_{n=0}^{N} (a)_n/n! (z/(z-2))^n Phi_n(b, c), valid for Re z < 1.
SeriesResult eval_onepoint_half(const HypParams& params, Complex z,
                                std::size_t n_terms = kOnePointDefaultTerms,
                                PhiMode mode = PhiMode::Recurrence,
                                double tol = kDefaultTolerance);

/// (1 - wz)^{-a} sum_{n=0}^{N} (a)_n/n! (wz/(wz-1))^n Phi_n(b, c, w).
/// Requires c > b > 0 and z inside in_region_onepoint(z, w).
SeriesResult eval_onepoint(const HypParams& params, Complex z, Complex w,
                           std::size_t n_terms = kOnePointDefaultTerms,
                           PhiMode mode = PhiMode::Recurrence,
                           double tol = kDefaultTolerance);

}  // namespace hyp2f1
