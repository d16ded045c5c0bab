#include "hyp2f1/twopoint.hpp"

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace hyp2f1 {

namespace {

void require_not_one(Complex z) {
  if (z == Complex(1.0, 0.0)) {
    throw SingularityError("two-point coefficients are singular at z = 1");
  }
}

double sign_power(std::size_t k) noexcept { return k % 2 == 0 ? 1.0 : -1.0; }

using wide = boost::multiprecision::cpp_bin_float_50;
using wide_complex = boost::multiprecision::cpp_complex_50;

wide_complex widen(Complex z) { return {wide(z.real()), wide(z.imag())}; }

Complex narrow(const wide_complex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

// Principal power; a negative real base takes the +pi side whatever the sign
// of its zero imaginary part.
wide_complex wide_pow(const wide_complex& base, const wide& exponent) {
  wide phase = boost::multiprecision::atan2(base.imag(), base.real());
  if (base.imag() == 0 && base.real() < 0) phase = boost::math::constants::pi<wide>();
  const wide mod = boost::multiprecision::exp(exponent * boost::multiprecision::log(abs(base)));
  return {mod * boost::multiprecision::cos(exponent * phase),
          mod * boost::multiprecision::sin(exponent * phase)};
}

wide factorial(std::size_t m) {
  wide f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

// Both coefficient paths run in 50 digits. The explicit k-sums cancel down
// from terms of size binomial(n+k, k), and the forward recursion carries a
// growing parasitic solution over most of the region; in doubles either one
// loses up to ~10 digits by n = 20.

std::pair<Complex, Complex> twopoint_coeffs_explicit(double a, Complex z, std::size_t n) {
  require_not_one(z);
  if (n == 0) return {1.0, cpow_principal(1.0 - z, -a) - 1.0};

  const wide_complex zw = widen(z);
  const wide_complex one_minus_z = wide_complex(1) - zw;
  const wide wa(a);
  const wide n_fact = factorial(n);
  wide_complex A = 0, B = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const wide base = factorial(k) * factorial(n - k) * n_fact;
    const wide coef_a = factorial(n + k - 1) / base;
    const wide coef_b = factorial(n + k) / base;
    const wide_complex power = wide_pow(one_minus_z, wide(k) - wa - wide(n));
    wide_complex pz = 1;
    for (std::size_t i = 0; i < n - k; ++i) pz *= (wa + i) * zw;

    const wide sn = sign_power(n), sk = sign_power(k);
    A += coef_a * (sn * wide(n) - sk * wide(k) * power) * pz;
    B += coef_b * (sk * power + sign_power(n + 1)) * pz;
  }
  return {narrow(A), narrow(B)};
}

TwoPointCoeffs twopoint_coeffs_recursive(double a, Complex z, std::size_t n_max) {
  require_not_one(z);
  TwoPointCoeffs out;
  out.z = z;
  out.a = a;
  out.A.reserve(n_max + 1);
  out.B.reserve(n_max + 1);

  const wide_complex zw = widen(z);
  const wide_complex one_minus_z = wide_complex(1) - zw;
  const wide_complex z2 = zw * zw;
  const wide wa(a);
  wide_complex An = 1;
  wide_complex Bn = wide_pow(one_minus_z, -wa) - wide_complex(1);
  out.A.push_back(narrow(An));
  out.B.push_back(narrow(Bn));
  for (std::size_t n = 0; n < n_max; ++n) {
    const wide nn(n);
    const wide_complex a_next =
        (-zw * (wa + 2 * nn) * An + (wide_complex(1) + nn * (wide_complex(2) - zw)) * Bn) / (nn + 1);
    const wide_complex b_next =
        (zw * (wide_complex(2) - zw) * (wa + 2 * nn) * An +
         (zw * (wa + 2) + nn * (6 * zw - z2 - 4) - wide_complex(2)) * Bn) /
        ((nn + 1) * one_minus_z);
    An = a_next;
    Bn = b_next;
    out.A.push_back(narrow(An));
    out.B.push_back(narrow(Bn));
  }
  return out;
}

std::pair<double, double> phi_psi_moments(std::size_t n, double b, double c) {
  const double c_2n = pochhammer(c, 2 * n);
  const double c_2n1 = c_2n * (c + 2.0 * static_cast<double>(n));
  if (c_2n1 == 0.0) throw PoleError("(c)_{2n+1} vanishes");
  const double common = sign_power(n) * pochhammer(b, n) * pochhammer(c - b, n);
  const double phi = common / c_2n;
  const double psi = common * (b + static_cast<double>(n)) / c_2n1;
  return {phi, psi};
}

RegionVerdict in_region_twopoint(Complex z) noexcept {
  return make_verdict(4.0 * std::abs(1.0 - z) - std::norm(z));
}

SeriesResult eval_twopoint(const HypParams& params, Complex z, std::size_t n_terms,
                           double tol) {
  const double a = params.a(), b = params.b(), c = params.c();
  if (!params.euler_valid()) {
    throw ParamDomainError("two-point expansion requires c > b > 0");
  }
  if (!is_finite(z)) throw DomainError("z must be finite");
  require_not_one(z);
  if (!in_region_twopoint(z).inside) {
    throw OutsideDomain("z outside |z|^2 < 4|1 - z|");
  }

  const auto coeffs = twopoint_coeffs_recursive(a, z, n_terms);
  double weight = 1.0 / c;  // (-1)^n (b)_n (c-b)_n / (c)_{2n+1}
  Complex sum = 0.0;
  std::vector<double> mags;
  mags.reserve(n_terms + 1);
  double abs_terms = 0.0;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const double nn = static_cast<double>(n);
    const Complex term = weight * ((c + 2.0 * nn) * coeffs.A[n] + (b + nn) * coeffs.B[n]);
    sum += term;
    mags.push_back(std::abs(term));
    abs_terms += mags.back();
    weight *= -(b + nn) * (c - b + nn) / ((c + 2.0 * nn + 1.0) * (c + 2.0 * nn + 2.0));
  }

  SeriesResult result;
  result.value = sum;
  result.terms_used = n_terms;
  result.est_error = series_error_estimate(mags, abs_terms, std::abs(sum));
  result.converged = result.est_error <= tol;
  return result;
}

}  // namespace hyp2f1
