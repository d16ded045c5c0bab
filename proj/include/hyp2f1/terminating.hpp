#pragma once

#include <cstddef>

#include "hyp2f1/numerics.hpp"

namespace hyp2f1 {

/// 2F1(-n, b; c; x) as the finite sum over k = 0..n, accumulated in 50-digit
/// binary floating point. The terms grow like binomial(n, k)|x|^k while the
/// sum can be exponentially small, so double accumulation loses up to
/// n*log10(1 + |x|) digits. Throws PoleError if (c)_k vanishes for k <= n.
double terminating_2f1(std::size_t n, double b, double c, double x);
Complex terminating_2f1(std::size_t n, double b, double c, Complex x);

}  // namespace hyp2f1
