#include "hyp2f1/threepoint.hpp"

#include <cmath>
#include <string>

#include "hyp2f1/terminating.hpp"

namespace hyp2f1 {

ThreePointCoeffs threepoint_coeffs(double a, Complex z, std::size_t n_max) {
  if (z == Complex(1.0, 0.0) || z == Complex(2.0, 0.0)) {
    throw SingularityError("three-point coefficients are singular at z = 1 and z = 2");
  }
  ThreePointCoeffs out;
  out.z = z;
  out.a = a;
  out.A.reserve(n_max + 1);
  out.B.reserve(n_max + 1);
  out.C.reserve(n_max + 1);

  const Complex f1 = cpow_principal(1.0 - z, -a);        // f(1)
  const Complex fh = cpow_principal(1.0 - z / 2.0, -a);  // f(1/2)
  out.A.push_back(1.0);
  out.B.push_back(4.0 * fh - f1 - 3.0);
  out.C.push_back(2.0 + 2.0 * f1 - 4.0 * fh);

  const Complex z2 = z * z;
  const Complex z3 = z2 * z;
  const Complex denom = z2 - 3.0 * z + 2.0;

  // n-independent pieces of the recursion
  const Complex bA = 26.0 * z - 3.0 * z2 - 24.0;
  const Complex bB0 = 48.0 - 4.0 * z * (18.0 + 5.0 * a) + 6.0 * z2 * (4.0 + 3.0 * a);
  const Complex bB1 = 3.0 * (48.0 - 96.0 * z + 50.0 * z2 - 3.0 * z3);
  const Complex bC0 = 4.0 * (20.0 - 6.0 * z * (5.0 + a) + 5.0 * z2 * (2.0 + a));
  const Complex bC1 = 264.0 - 516.0 * z + 262.0 * z2 - 15.0 * z3;
  const Complex cA = 12.0 - 12.0 * z + z2;
  const Complex cB0 = 2.0 * (6.0 * (3.0 + a) * z - (6.0 + 5.0 * a) * z2 - 12.0);
  const Complex cB1 = 3.0 * (z3 - 24.0 * z2 + 48.0 * z - 24.0);
  const Complex cC0 = 4.0 * (2.0 * z * (9.0 + 2.0 * a) - 3.0 * z2 * (2.0 + a) - 12.0);
  const Complex cC1 = 5.0 * z3 - 132.0 * z2 + 276.0 * z - 144.0;

  for (std::size_t n = 0; n < n_max; ++n) {
    const double nn = static_cast<double>(n);
    const Complex An = out.A[n], Bn = out.B[n], Cn = out.C[n];
    const Complex zA = 4.0 * z * (3.0 * nn + a) * An;
    const Complex a_next = (2.0 * (3.0 * nn * (z - 2.0) - 2.0) * Bn + zA +
                            nn * (5.0 * z - 6.0) * Cn) /
                           (2.0 * (nn + 1.0));
    const Complex b_next = (zA * bA + 2.0 * (bB0 + nn * bB1) * Bn + (bC0 + nn * bC1) * Cn) /
                           (2.0 * (nn + 1.0) * denom);
    const Complex c_next = (zA * cA + 2.0 * (cB0 + nn * cB1) * Bn + (cC0 + nn * cC1) * Cn) /
                           ((nn + 1.0) * denom);
    out.A.push_back(a_next);
    out.B.push_back(b_next);
    out.C.push_back(c_next);
  }
  return out;
}

Phi3Recurrence phi3_recurrence(std::size_t n, double b, double c) noexcept {
  const double nn = static_cast<double>(n);
  const double n2 = nn * nn, n3 = n2 * nn;
  const double b2 = b * b, c2 = c * c;
  Phi3Recurrence r;
  r.X = nn * (-c - 2.0 * nn - 5.0 * nn * c - 6.0 * n2 - 4.0 * b * c + 4.0 * b2) *
        (-nn + b - c + 1.0) * (nn + b - 1.0);
  const double p0 = 16.0 * b * (b - 1.0) * (b - c + 1.0) * (b - c);
  const double p1 = -4.0 + 21.0 * c + 40.0 * b2 - 17.0 * c2 - 32.0 * b2 * c +
                    32.0 * b * c2 - 40.0 * b * c;
  const double p2 = 24.0 * b * c + 24.0 - 24.0 * b2 + 15.0 * c2 - 57.0 * c;
  const double p3 = 18.0 * (c - 2.0);
  r.Y = 2.0 * (2.0 * b - c) * (p0 + p1 * nn + p2 * n2 + p3 * n3);
  r.Z = 16.0 * (3.0 * nn + c) * (3.0 * nn + 1.0 + c) * (3.0 * nn + 2.0 + c) *
        (-5.0 * nn * c - 6.0 * n2 + 10.0 * nn + 4.0 * b2 - 4.0 * b * c + 4.0 * c - 4.0);
  return r;
}

double phi3_next(std::size_t n, double b, double c, double phi_prev, double phi_cur) {
  const auto r = phi3_recurrence(n, b, c);
  const double scale = std::abs(r.X) + std::abs(r.Y);
  if (std::abs(r.Z) <= 1e-12 * scale || r.Z == 0.0) {
    throw RecurrenceBreakdown("Z_n vanishes at n = " + std::to_string(n));
  }
  return -(r.X * phi_prev + r.Y * phi_cur) / r.Z;
}

namespace {

double phi3_direct(std::size_t n, double b, double c) {
  const double nn = static_cast<double>(n);
  const double c_2n = pochhammer(c, 2 * n);
  if (c_2n == 0.0) throw PoleError("(c)_{2n} vanishes");
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  const double pref = sign * pochhammer(b, n) * pochhammer(c - b, n) /
                      (std::ldexp(1.0, static_cast<int>(n)) * c_2n);
  return pref * terminating_2f1(n, b + nn, c + 2.0 * nn, 2.0);
}

}  // namespace

Phi3Sequence phi3_sequence(std::size_t n_max, double b, double c, PhiMode mode) {
  Phi3Sequence seq;
  seq.b = b;
  seq.c = c;
  auto& phi = seq.values;
  phi.reserve(n_max + 1);
  if (mode == PhiMode::Direct) {
    for (std::size_t n = 0; n <= n_max; ++n) phi.push_back(phi3_direct(n, b, c));
    return seq;
  }
  if (pochhammer(c, 2 * n_max) == 0.0) throw PoleError("(c)_{2n} vanishes");
  phi.push_back(1.0);
  if (n_max >= 1) {
    phi.push_back(-b * (b - c) * (2.0 * b - c) / (2.0 * c * (c + 1.0) * (c + 2.0)));
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    try {
      phi.push_back(phi3_next(n, b, c, phi[n - 1], phi[n]));
    } catch (const RecurrenceBreakdown&) {
      phi.push_back(phi3_direct(n + 1, b, c));
    }
  }
  return seq;
}

double phi3(std::size_t n, double b, double c, PhiMode mode) {
  if (mode == PhiMode::Direct) return phi3_direct(n, b, c);
  return phi3_sequence(n, b, c, mode).values.back();
}

RegionVerdict in_region_threepoint(Complex z) noexcept {
  const double six_root3 = 6.0 * std::sqrt(3.0);
  const double mz = std::abs(z);
  return make_verdict(six_root3 * std::abs((1.0 - z) * (2.0 - z)) - mz * mz * mz);
}

SeriesResult eval_threepoint(const HypParams& params, Complex z, std::size_t n_terms,
                             PhiMode mode, double tol) {
  const double a = params.a(), b = params.b(), c = params.c();
  if (!params.euler_valid()) {
    throw ParamDomainError("three-point expansion requires c > b > 0");
  }
  if (!is_finite(z)) throw DomainError("z must be finite");
  if (z == Complex(1.0, 0.0) || z == Complex(2.0, 0.0)) {
    throw SingularityError("three-point expansion is singular at z = 1 and z = 2");
  }
  if (!in_region_threepoint(z).inside) {
    throw OutsideDomain("z outside |z|^3 < 6 sqrt(3) |(1 - z)(2 - z)|");
  }

  const auto coeffs = threepoint_coeffs(a, z, n_terms);
  const auto phi0 = phi3_sequence(n_terms, b, c, mode);
  const auto phi1 = phi3_sequence(n_terms, b + 1.0, c + 1.0, mode);
  const auto phi2 = phi3_sequence(n_terms, b + 2.0, c + 2.0, mode);
  const double wb = b / c;
  const double wc = b * (b + 1.0) / (c * (c + 1.0));

  Complex sum = 0.0;
  std::vector<double> mags;
  mags.reserve(n_terms + 1);
  double abs_terms = 0.0;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const Complex term = sign * (coeffs.A[n] * phi0.values[n] +
                                 wb * coeffs.B[n] * phi1.values[n] +
                                 wc * coeffs.C[n] * phi2.values[n]);
    sum += term;
    mags.push_back(std::abs(term));
    abs_terms += mags.back();
  }

  SeriesResult result;
  result.value = sum;
  result.terms_used = n_terms;
  result.est_error = series_error_estimate(mags, abs_terms, std::abs(sum));
  result.converged = result.est_error <= tol;
  return result;
}

}  // namespace hyp2f1
