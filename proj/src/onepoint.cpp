#include "hyp2f1/onepoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyp2f1/terminating.hpp"

namespace hyp2f1 {

namespace {

void require_no_pole(double c, std::size_t n_max) {
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (c + static_cast<double>(k) == 0.0) {
      throw PoleError("c + k vanishes in the moment recurrence (c = " +
                      std::to_string(c) + ")");
    }
  }
}

void require_valid_w(Complex w) {
  if (w == Complex(0.0, 0.0)) throw DomainError("expansion point w must be nonzero");
  if (!is_finite(w)) throw DomainError("expansion point w must be finite");
}

}  // namespace

std::vector<double> phi_half_sequence(std::size_t n_max, double b, double c,
                                      PhiMode mode) {
  require_no_pole(c, n_max);
  std::vector<double> phi;
  phi.reserve(n_max + 1);
  if (mode == PhiMode::Direct) {
    for (std::size_t n = 0; n <= n_max; ++n) phi.push_back(terminating_2f1(n, b, c, 2.0));
    return phi;
  }
  phi.push_back(1.0);
  if (n_max >= 1) phi.push_back(1.0 - 2.0 * b / c);
  for (std::size_t n = 1; n < n_max; ++n) {
    const double nn = static_cast<double>(n);
    phi.push_back(((c - 2.0 * b) * phi[n] + nn * phi[n - 1]) / (c + nn));
  }
  return phi;
}

double phi_half(std::size_t n, double b, double c, PhiMode mode) {
  if (mode == PhiMode::Direct) {
    require_no_pole(c, n);
    return terminating_2f1(n, b, c, 2.0);
  }
  return phi_half_sequence(n, b, c, mode).back();
}

PhiSequence phi_w_sequence(std::size_t n_max, double b, double c, Complex w,
                           PhiMode mode) {
  require_valid_w(w);
  require_no_pole(c, n_max);
  const Complex inv_w = 1.0 / w;
  PhiSequence seq;
  seq.w = w;
  seq.values.reserve(n_max + 1);
  if (mode == PhiMode::Direct) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      seq.values.push_back(terminating_2f1(n, b, c, inv_w));
    }
    return seq;
  }
  auto& phi = seq.values;
  phi.push_back(1.0);
  if (n_max >= 1) phi.push_back(1.0 - b / c * inv_w);
  for (std::size_t n = 1; n < n_max; ++n) {
    const double nn = static_cast<double>(n);
    const Complex mid = (b + nn) * inv_w - 2.0 * nn - c;
    const Complex low = nn * (1.0 - inv_w);
    phi.push_back(-(mid * phi[n] + low * phi[n - 1]) / (c + nn));
  }
  return seq;
}

Complex phi_w(std::size_t n, double b, double c, Complex w, PhiMode mode) {
  if (mode == PhiMode::Direct) {
    require_valid_w(w);
    require_no_pole(c, n);
    return terminating_2f1(n, b, c, 1.0 / w);
  }
  return phi_w_sequence(n, b, c, w, mode).values.back();
}

RegionVerdict in_region_onepoint(Complex z, Complex w) noexcept {
  const double radius = std::max(std::abs(w), std::abs(1.0 - w));
  return make_verdict(std::abs(1.0 - w * z) - std::abs(z) * radius);
}

namespace {

// prefactor * sum_n (a)_n/n! ratio^n phi[n], with the shared bookkeeping.
template <class PhiVec>
SeriesResult sum_onepoint(double a, Complex prefactor, Complex ratio,
                          const PhiVec& phi, std::size_t n_terms, double tol) {
  Complex weight = 1.0;  // (a)_n/n! ratio^n
  Complex sum = 0.0;
  std::vector<double> mags;
  mags.reserve(n_terms + 1);
  double abs_terms = 0.0;
  const double abs_pref = std::abs(prefactor);
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const Complex term = weight * phi[n];
    sum += term;
    const double mag = abs_pref * std::abs(term);
    mags.push_back(mag);
    abs_terms += mag;
    const double nn = static_cast<double>(n);
    weight *= (a + nn) / (nn + 1.0) * ratio;
  }
  SeriesResult result;
  result.value = prefactor * sum;
  result.terms_used = n_terms;
  result.est_error = series_error_estimate(mags, abs_terms, std::abs(result.value));
  result.converged = result.est_error <= tol;
  return result;
}

void require_onepoint_params(const HypParams& params) {
  if (!params.euler_valid()) {
    throw ParamDomainError("one-point expansions require c > b > 0");
  }
}

}  // namespace

SeriesResult eval_onepoint_half(const HypParams& params, Complex z,
                                std::size_t n_terms, PhiMode mode, double tol) {
  require_onepoint_params(params);
  if (!is_finite(z)) throw DomainError("z must be finite");
  if (!(z.real() < 1.0)) throw OutsideDomain("expansion at t = 1/2 requires Re z < 1");
  const auto phi = phi_half_sequence(n_terms, params.b(), params.c(), mode);
  const Complex prefactor = cpow_principal(1.0 - z / 2.0, -params.a());
  return sum_onepoint(params.a(), prefactor, z / (z - 2.0), phi, n_terms, tol);
}

SeriesResult eval_onepoint(const HypParams& params, Complex z, Complex w,
                           std::size_t n_terms, PhiMode mode, double tol) {
  require_onepoint_params(params);
  require_valid_w(w);
  if (!is_finite(z)) throw DomainError("z must be finite");
  if (!in_region_onepoint(z, w).inside) {
    throw OutsideDomain("z outside |1 - wz| > |z| max(|w|, |1 - w|)");
  }
  const auto phi = phi_w_sequence(n_terms, params.b(), params.c(), w, mode);
  const Complex wz = w * z;
  const Complex prefactor = cpow_principal(1.0 - wz, -params.a());
  return sum_onepoint(params.a(), prefactor, wz / (wz - 1.0), phi.values, n_terms, tol);
}

}  // namespace hyp2f1
