#include "hyp2f1/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hyp2f1 {

SeriesResult maclaurin(const HypParams& params, Complex z, double tol,
                       std::size_t max_terms) {
  if (!is_finite(z) || std::abs(z) >= 1.0) {
    throw OutsideDomain("Maclaurin series requires |z| < 1");
  }
  const double a = params.a(), b = params.b(), c = params.c();

  Complex term = 1.0;
  Complex sum = 1.0;
  double abs_terms = 1.0;
  std::vector<double> mags{1.0};
  int small_in_a_row = 0;
  std::size_t n = 0;
  bool converged = false;
  while (n < max_terms) {
    const double k = static_cast<double>(n);
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    ++n;
    const double mag = std::abs(term);
    mags.push_back(mag);
    abs_terms += mag;
    if (mag <= tol * std::abs(sum)) {
      if (++small_in_a_row == 2) {
        converged = true;
        break;
      }
    } else {
      small_in_a_row = 0;
    }
  }

  const double mag_sum = std::abs(sum);
  const double last_two =
      std::max(mags.back(), mags.size() > 1 ? mags[mags.size() - 2] : 0.0);
  const double rounding = std::numeric_limits<double>::epsilon() * abs_terms;

  SeriesResult result;
  result.value = sum;
  result.terms_used = n;
  result.est_error = mag_sum > 0.0 ? std::max(last_two, rounding) / mag_sum
                                   : std::numeric_limits<double>::infinity();
  // A cancelled sum can leave the rounding floor above tol.
  result.converged = converged && result.est_error <= tol;
  return result;
}

namespace {

// log(1 + e^y) without overflow.
double softplus(double y) noexcept {
  return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y));
}

// Integrand contribution at tanh-sinh abscissa u, including dt/du.
// t = 1/(1+e^{-2x}), 1-t = 1/(1+e^{2x}), x = (pi/2) sinh u.
Complex euler_node(double u, double b_minus_1, double cb_minus_1, double a,
                   Complex z, double& log_weight_out) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double x = half_pi * std::sinh(u);
  const double log_t = -softplus(-2.0 * x);
  const double log_1mt = -softplus(2.0 * x);
  // dt/du = (pi/2) cosh u / (2 cosh^2 x)
  const double ax = std::abs(x);
  const double log_cosh_x = ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
  const double log_jac = std::log(half_pi * std::cosh(u) / 2.0) - 2.0 * log_cosh_x;
  const double log_w = b_minus_1 * log_t + cb_minus_1 * log_1mt + log_jac;
  log_weight_out = log_w;
  if (log_w < -745.0) return {0.0, 0.0};
  const double t = std::exp(log_t);
  return std::exp(log_w) * cpow_principal(Complex(1.0, 0.0) - z * t, -a);
}

}  // namespace

SeriesResult euler_integral(const HypParams& params, Complex z, double tol) {
  if (!params.euler_valid()) {
    throw ParamDomainError("Euler integral requires c > b > 0");
  }
  if (!is_finite(z)) throw DomainError("z must be finite");
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw BranchCutError("z lies on the branch cut [1, inf)");
  }

  const double a = params.a(), b = params.b(), c = params.c();
  const double bm1 = b - 1.0, cbm1 = c - b - 1.0;
  const double norm =
      std::exp(log_gamma_real(c) - log_gamma_real(b) - log_gamma_real(c - b));

  constexpr double u_max = 12.0;
  constexpr int max_level = 14;
  std::size_t evaluations = 0;

  // Sum the nodes j*h for j with the given parity step, walking outward
  // until the weights have decayed for good.
  auto sweep = [&](double h, int first, int step, double& abs_acc) {
    Complex acc{0.0, 0.0};
    for (int sign : {1, -1}) {
      for (int j = first; ; j += step) {
        const double u = sign * j * h;
        if (std::abs(u) > u_max) break;
        if (j == 0 && sign == -1) continue;
        double log_w = 0.0;
        const Complex v = euler_node(u, bm1, cbm1, a, z, log_w);
        ++evaluations;
        acc += v;
        abs_acc += std::abs(v);
        // Past |u| = 3 the weight decays double-exponentially; once it is
        // negligible it stays negligible.
        if (std::abs(u) > 3.0 && log_w < -80.0) break;
      }
    }
    return acc;
  };

  double h = 1.0;
  double abs_sum = 0.0;
  Complex sum = sweep(h, 0, 1, abs_sum);
  Complex estimate = h * sum;
  double est_error = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2.0;
    sum += sweep(h, 1, 2, abs_sum);
    const Complex next = h * sum;
    const double delta = std::abs(next - estimate);
    estimate = next;
    const double mag = std::abs(estimate);
    est_error = mag > 0.0 ? delta / mag : std::numeric_limits<double>::infinity();
    est_error = std::max(est_error, std::numeric_limits<double>::epsilon() *
                                        h * abs_sum / std::max(mag, 1e-300));
    if (level >= 3 && est_error <= tol) {
      converged = true;
      break;
    }
  }

  SeriesResult result;
  result.value = norm * estimate;
  result.terms_used = evaluations;
  result.est_error = est_error;
  result.converged = converged;
  return result;
}

std::string_view to_string(RegionLabel label) noexcept {
  switch (label) {
    case RegionLabel::Disk: return "|z|<=rho";
    case RegionLabel::Inverse: return "|1/z|<=rho";
    case RegionLabel::OneMinus: return "|1-z|<=rho";
    case RegionLabel::InverseOneMinus: return "|1/(1-z)|<=rho";
    case RegionLabel::Ratio: return "|z/(1-z)|<=rho";
    case RegionLabel::InverseRatio: return "|(z-1)/z|<=rho";
  }
  return "?";
}

namespace {

std::array<double, kRegionLabelCount> region_margins(Complex z, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("rho must lie in (0, 1)");
  const double mz = std::abs(z);
  const double m1z = std::abs(1.0 - z);
  return {
      rho - mz,          // |z| <= rho
      rho * mz - 1.0,    // |1/z| <= rho
      rho - m1z,         // |1-z| <= rho
      rho * m1z - 1.0,   // |1/(1-z)| <= rho
      rho * m1z - mz,    // |z/(1-z)| <= rho
      rho * mz - m1z,    // |(z-1)/z| <= rho
  };
}

}  // namespace

RegionSet classify_region(Complex z, double rho) {
  const auto margins = region_margins(z, rho);
  RegionSet set;
  for (std::size_t i = 0; i < kRegionLabelCount; ++i) {
    if (margins[i] >= 0.0) set.insert(static_cast<RegionLabel>(i));
  }
  return set;
}

RegionVerdict classify_region_verdict(Complex z, double rho) {
  const auto margins = region_margins(z, rho);
  const double best = *std::max_element(margins.begin(), margins.end());
  return RegionVerdict{best >= 0.0, best};
}

}  // namespace hyp2f1
