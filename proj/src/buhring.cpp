#include "hyp2f1/buhring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hyp2f1 {

namespace {

// 1/Gamma(x), zero at the poles.
double recip_gamma(double x) {
  if (x <= 0.0 && x == std::nearbyint(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace

BuhringCoeffs buhring_coeffs(double s, Complex z0, const HypParams& params,
                             std::size_t n_max) {
  const double a = params.a(), b = params.b(), c = params.c();
  BuhringCoeffs out;
  out.s = s;
  out.z0 = z0;
  out.d.reserve(n_max + 1);
  out.d.push_back(1.0);

  const Complex z0_1mz0 = z0 * (1.0 - z0);
  const Complex one_m_2z0 = 1.0 - 2.0 * z0;
  const Complex shift = (a + b + 1.0) * z0 - c;
  Complex prev2 = 0.0;  // d_{n-2}
  Complex prev1 = 1.0;  // d_{n-1}
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double nn = static_cast<double>(n);
    const double gap = nn + 2.0 * s - a - b;
    if (std::abs(gap) < kIntegerDifferenceThreshold) {
      throw IntegerDifferenceError("Buhring recurrence denominator vanishes at n = " +
                                   std::to_string(n) + " (b - a is an integer)");
    }
    const Complex dn = (nn + s - 1.0) / (nn * gap) *
                       (z0_1mz0 * (nn + s - 2.0) * prev2 +
                        ((nn + s) * one_m_2z0 + shift) * prev1);
    out.d.push_back(dn);
    prev2 = prev1;
    prev1 = dn;
  }
  return out;
}

Complex d_coeff(double s, Complex z0, const HypParams& params, std::size_t n) {
  return buhring_coeffs(s, z0, params, n).d.back();
}

double buhring_radius(Complex z0) noexcept {
  return std::max(std::abs(z0), std::abs(z0 - 1.0));
}

RegionVerdict in_region_buhring(Complex z, Complex z0) noexcept {
  const Complex diff = z0 - z;
  if (diff.imag() == 0.0 && diff.real() < 0.0) {
    // On the cut of (z0 - z)^{-a}; count it as outside with the
    // distance-based margin capped at zero.
    return RegionVerdict{false, std::min(0.0, std::abs(diff) - buhring_radius(z0))};
  }
  return make_verdict(std::abs(z - z0) - buhring_radius(z0));
}

SeriesResult buhring_eval(const HypParams& params, Complex z, Complex z0,
                          std::size_t n_terms, double tol) {
  const double a = params.a(), b = params.b(), c = params.c();
  if (near_integer(b - a, kIntegerDifferenceThreshold)) {
    throw IntegerDifferenceError("b - a is an integer; Buhring's expansion needs a limit");
  }
  if (!is_finite(z) || !is_finite(z0)) throw DomainError("z and z0 must be finite");
  const RegionVerdict region = in_region_buhring(z, z0);
  if (!region.inside) {
    throw OutsideDomain("z is inside the circle |z - z0| = max(|z0|, |z0 - 1|) "
                        "or on the cut of (z0 - z)^{-a}");
  }

  const double gc = gamma_real(c);
  const double pref_a = gc * gamma_real(b - a) * recip_gamma(b) * recip_gamma(c - a);
  const double pref_b = gc * gamma_real(a - b) * recip_gamma(a) * recip_gamma(c - b);
  const Complex outer_a = pref_a * cpow_principal(z0 - z, -a);
  const Complex outer_b = pref_b * cpow_principal(z0 - z, -b);

  const auto da = buhring_coeffs(a, z0, params, n_terms);
  const auto db = buhring_coeffs(b, z0, params, n_terms);

  const Complex inv = 1.0 / (z - z0);
  Complex power = 1.0;
  Complex sum_a = 0.0, sum_b = 0.0;
  std::vector<double> mags;
  mags.reserve(n_terms + 1);
  double abs_terms = 0.0;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const Complex ta = da.d[n] * power;
    const Complex tb = db.d[n] * power;
    sum_a += ta;
    sum_b += tb;
    const double mag = std::abs(outer_a * ta) + std::abs(outer_b * tb);
    mags.push_back(mag);
    abs_terms += mag;
    power *= inv;
  }

  const Complex value = outer_a * sum_a + outer_b * sum_b;
  const double inflation = 1.0 / std::abs(std::sin(std::numbers::pi * (b - a)));

  SeriesResult result;
  result.value = value;
  result.terms_used = n_terms;
  result.error_inflation = inflation;
  result.est_error =
      series_error_estimate(mags, abs_terms, std::abs(value)) * inflation;
  result.converged = result.est_error <= tol;
  return result;
}

}  // namespace hyp2f1
