#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hyp2f1/numerics.hpp"

namespace hyp2f1 {

/// Default relative tolerance used by the oracles and for `converged` flags.
inline constexpr double kDefaultTolerance = 1e-13;

struct SeriesResult {
  Complex value{};
  /// Highest summation index included; a truncation at n sums indices 0..n.
  std::size_t terms_used = 0;
  /// Relative error estimate, always >= 0.
  double est_error = 0.0;
  bool converged = false;
  /// Multiplier already folded into est_error for ill-conditioned inputs
  /// (near-integer b - a in Buhring's expansion). 1 otherwise.
  double error_inflation = 1.0;
};

/// Membership of z in a method's convergence region. `margin` is positive
/// inside, negative outside and zero on the boundary; its scale is that of
/// the defining inequality.
struct RegionVerdict {
  bool inside = false;
  double margin = 0.0;
};

inline RegionVerdict make_verdict(double margin) noexcept {
  return RegionVerdict{margin > 0.0, margin};
}

enum class MethodId {
  Maclaurin,
  EulerOracle,
  Buhring,
  OnePointHalf,
  OnePointW,
  TwoPoint,
  ThreePoint,
};

std::string_view to_string(MethodId id) noexcept;
std::optional<MethodId> parse_method(std::string_view name) noexcept;

/// How moment sequences are produced: forward three-term recurrence, or the
/// terminating hypergeometric closed form summed in extended precision.
enum class PhiMode { Recurrence, Direct };

}  // namespace hyp2f1
