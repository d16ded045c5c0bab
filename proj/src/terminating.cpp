#include "hyp2f1/terminating.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace hyp2f1 {

namespace {

using wide = boost::multiprecision::cpp_bin_float_50;

void check_poles(std::size_t n, double c) {
  for (std::size_t k = 0; k < n; ++k) {
    if (c + static_cast<double>(k) == 0.0) {
      throw PoleError("(c)_k vanishes for c = " + std::to_string(c));
    }
  }
}

}  // namespace

double terminating_2f1(std::size_t n, double b, double c, double x) {
  check_poles(n, c);
  const wide wb(b), wc(c), wx(x);
  wide term = 1, sum = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const wide kk(static_cast<double>(k));
    term *= (kk - static_cast<double>(n)) * (wb + kk) / ((wc + kk) * (kk + 1)) * wx;
    sum += term;
  }
  return sum.convert_to<double>();
}

Complex terminating_2f1(std::size_t n, double b, double c, Complex x) {
  check_poles(n, c);
  const wide wb(b), wc(c), xr(x.real()), xi(x.imag());
  wide tr = 1, ti = 0, sr = 1, si = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const wide kk(static_cast<double>(k));
    const wide ratio = (kk - static_cast<double>(n)) * (wb + kk) / ((wc + kk) * (kk + 1));
    const wide nr = ratio * (tr * xr - ti * xi);
    const wide ni = ratio * (tr * xi + ti * xr);
    tr = nr;
    ti = ni;
    sr += tr;
    si += ti;
  }
  return {sr.convert_to<double>(), si.convert_to<double>()};
}

}  // namespace hyp2f1
