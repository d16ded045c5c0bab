#pragma once

#include <bitset>
#include <cstddef>
#include <string_view>

#include "hyp2f1/numerics.hpp"
#include "hyp2f1/series_result.hpp"

namespace hyp2f1 {

/// Partial sums of sum (a)_n (b)_n / ((c)_n n!) z^n for |z| < 1.
///
/// Summation stops once two successive terms fall below tol * |partial sum|
/// (a single small term can be an accident of oscillating term phases) or
/// when max_terms is reached, in which case `converged` is false.
SeriesResult maclaurin(const HypParams& params, Complex z,
                       double tol = kDefaultTolerance,
                       std::size_t max_terms = 10000);

/// Gamma(c)/(Gamma(b)Gamma(c-b)) * int_0^1 t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a} dt,
/// valid for c > b > 0 and z off [1, inf).
///
/// Tanh-sinh quadrature with the endpoint weights evaluated in log form from
/// the transformed abscissa, so t and 1-t are both exact near the endpoints
/// and integrable singularities (b < 1 or c - b < 1) cost nothing extra.
/// `terms_used` reports the number of integrand evaluations.
SeriesResult euler_integral(const HypParams& params, Complex z,
                            double tol = kDefaultTolerance);

/// The six classical convergence regions obtained by combining the Maclaurin
/// series with the linear transformations of 2F1.
enum class RegionLabel : std::size_t {
  Disk = 0,         // |z| <= rho
  Inverse,          // |1/z| <= rho
  OneMinus,         // |1-z| <= rho
  InverseOneMinus,  // |1/(1-z)| <= rho
  Ratio,            // |z/(1-z)| <= rho
  InverseRatio,     // |(z-1)/z| <= rho
};

inline constexpr std::size_t kRegionLabelCount = 6;

std::string_view to_string(RegionLabel label) noexcept;

class RegionSet {
 public:
  void insert(RegionLabel label) { bits_.set(static_cast<std::size_t>(label)); }
  bool contains(RegionLabel label) const {
    return bits_.test(static_cast<std::size_t>(label));
  }
  bool empty() const noexcept { return bits_.none(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool operator==(const RegionSet&) const = default;

 private:
  std::bitset<kRegionLabelCount> bits_;
};

/// Which of the six regions contain z. Requires 0 < rho < 1.
///
/// The moduli are compared in cross-multiplied form (|1/z| <= rho as
/// 1 <= rho|z|) so z = 0 and z = 1 need no special casing.
RegionSet classify_region(Complex z, double rho);

/// Largest of the six cross-multiplied margins; positive iff z is in the
/// union of the six regions.
RegionVerdict classify_region_verdict(Complex z, double rho);

}  // namespace hyp2f1
