#include "hyp2f1/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hyp2f1 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DOMAIN";
    case ErrorKind::Pole: return "POLE";
    case ErrorKind::OutsideDomain: return "OUTSIDE_DOMAIN";
    case ErrorKind::ParamDomain: return "PARAM_DOMAIN";
    case ErrorKind::BranchCut: return "BRANCH_CUT";
    case ErrorKind::IntegerDifference: return "INTEGER_DIFF";
    case ErrorKind::Singularity: return "SINGULARITY";
    case ErrorKind::RecurrenceBreakdown: return "RECURRENCE_BREAKDOWN";
    case ErrorKind::NoMethod: return "NO_METHOD";
    case ErrorKind::Config: return "CONFIG";
  }
  return "UNKNOWN";
}

namespace {

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::nearbyint(x);
}

}  // namespace

HypParams::HypParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("hypergeometric parameters must be finite");
  }
  if (is_nonpositive_integer(c)) {
    throw PoleError("c = " + std::to_string(c) + " is zero or a negative integer");
  }
}

Complex cpow_principal(Complex base, double exponent) {
  if (base == Complex(0.0, 0.0)) {
    if (exponent > 0.0) return {0.0, 0.0};
    throw DomainError("zero base with non-positive exponent");
  }
  if (exponent == 0.0) return {1.0, 0.0};
  double phase = std::arg(base);
  // Points on the negative real axis belong to the +pi side of the cut.
  if (base.imag() == 0.0 && base.real() < 0.0) phase = std::numbers::pi;
  const double log_mod = std::log(std::abs(base));
  return std::polar(std::exp(exponent * log_mod), exponent * phase);
}

double pochhammer(double x, std::size_t n) noexcept {
  double result = 1.0;
  for (std::size_t k = 0; k < n; ++k) result *= x + static_cast<double>(k);
  return result;
}

double gamma_real(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma pole at x = " + std::to_string(x));
  }
  return std::tgamma(x);
}

double log_gamma_real(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma pole at x = " + std::to_string(x));
  }
  return std::lgamma(x);
}

bool near_integer(double x, double tol) noexcept {
  return std::abs(x - std::nearbyint(x)) < tol;
}

double series_error_estimate(std::span<const double> term_magnitudes,
                             double abs_sum_of_terms, double abs_value) noexcept {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_value == 0.0) return std::numeric_limits<double>::infinity();
  double tail = 0.0;
  const std::size_t n = term_magnitudes.size();
  if (n >= 1) tail += term_magnitudes[n - 1];
  if (n >= 2) tail += term_magnitudes[n - 2];
  return (tail + eps * abs_sum_of_terms) / abs_value;
}

}  // namespace hyp2f1
