#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyp2f1/threepoint.hpp"
#include "oracle.hpp"

using namespace hyp2f1;

namespace {

const Complex kE = std::polar(1.0, std::numbers::pi / 3.0);

struct Row {
  double a, b, c;
  Complex z;
};

const std::vector<Row> kTable4 = {
    {1.2, 2.1, 3.0, kE},
    {1.2, 2.5, 3.0, kE},
    {1.2, 2.1, 3.0, -5.0},
    {1.2, 2.01, 3.0, -5.0},
};

// E[(t (t-1) (t-1/2))^n] under the Beta(b, c-b) density, from the expanded
// polynomial and the raw moments (b)_k / (c)_k, in 200-bit floats.
double beta_moment(std::size_t n, double b, double c) {
  // The expanded coefficients cancel down by ~45 digits at n = 25.
  using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
  std::vector<wide> poly{1};
  const wide cubic[] = {0, wide(1) / 2, wide(-3) / 2, 1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<wide> next(poly.size() + 3, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      for (std::size_t k = 0; k < 4; ++k) next[j + k] += poly[j] * cubic[k];
    }
    poly = std::move(next);
  }
  wide sum = 0, raw = 1;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    sum += poly[k] * raw;
    raw *= (b + wide(k)) / (c + wide(k));
  }
  return sum.convert_to<double>();
}

// In-region samples whose series contract by at least `ratio` per term.
std::vector<Complex> region_samples(int count, double ratio, unsigned seed) {
  std::vector<Complex> out;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  while (static_cast<int>(out.size()) < count) {
    const Complex z(u(rng), u(rng));
    const double contraction =
        std::pow(std::abs(z), 3) / (6.0 * std::sqrt(3.0) * std::abs((1.0 - z) * (2.0 - z)));
    if (contraction <= ratio) out.push_back(z);
  }
  return out;
}

// Sum with every coefficient against the unshifted moment and the combined
// parameter weights.
Complex combined_weight_sum(const HypParams& p, Complex z, std::size_t n_terms) {
  const double b = p.b(), c = p.c();
  const auto co = threepoint_coeffs(p.a(), z, n_terms);
  Complex sum = 0.0;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    sum += sign * (co.A[n] + b / c * co.B[n] + b * (b + 1.0) / (c * (c + 1.0)) * co.C[n]) *
           phi3(n, b, c);
  }
  return sum;
}

}  // namespace

TEST(ThreePointCoeffs, InitialValues) {
  const double a = 1.2;
  const Complex z(-1.0, 0.0);
  const auto co = threepoint_coeffs(a, z, 0);
  EXPECT_EQ(co.A[0], Complex(1.0, 0.0));
  const double b0 = 4.0 * std::pow(1.5, -a) - std::pow(2.0, -a) - 3.0;
  EXPECT_NEAR(co.B[0].real(), b0, 1e-15);
  EXPECT_NEAR(co.B[0].real(), -0.97632, 1e-5);
  EXPECT_NEAR(co.C[0].real(), 2.0 + 2.0 * std::pow(2.0, -a) - 4.0 * std::pow(1.5, -a), 1e-15);
}

TEST(ThreePointCoeffs, LeadingPolynomialInterpolates) {
  for (Complex z : {Complex(-1.0, 0.0), kE, Complex(0.3, -2.0), Complex(-4.0, 4.0)}) {
    const auto co = threepoint_coeffs(1.2, z, 0);
    for (double t : {0.0, 0.5, 1.0}) {
      const Complex p = co.A[0] + co.B[0] * t + co.C[0] * t * t;
      EXPECT_LE(oracle::rel_err(p, oracle::f_of_t(1.2, z, t)), 1e-13) << z << " " << t;
    }
  }
}

TEST(ThreePointCoeffs, ConstantFunctionAtOrigin) {
  const auto co = threepoint_coeffs(1.2, 0.0, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(co.A[n], Complex(n == 0 ? 1.0 : 0.0, 0.0)) << n;
    EXPECT_EQ(std::abs(co.B[n]), 0.0) << n;
    EXPECT_EQ(std::abs(co.C[n]), 0.0) << n;
  }
}

TEST(ThreePointCoeffs, ReconstructAtMinusOne) {
  const double a = 1.2;
  const auto co = threepoint_coeffs(a, -1.0, 10);
  const double t = 0.3;
  Complex sum = 0.0, basis = 1.0;
  for (std::size_t n = 0; n <= 10; ++n) {
    sum += (co.A[n] + co.B[n] * t + co.C[n] * t * t) * basis;
    basis *= t * (t - 1.0) * (t - 0.5);
  }
  EXPECT_LE(oracle::rel_err(sum, oracle::f_of_t(a, -1.0, t)), 1e-8);
}

TEST(ThreePointCoeffs, ReconstructFunction) {
  const double a = 1.2;
  for (Complex z : region_samples(20, 0.6, 29)) {
    const auto co = threepoint_coeffs(a, z, 80);
    for (double t : {0.2, 0.5, 0.9}) {
      Complex sum = 0.0, basis = 1.0;
      for (std::size_t n = 0; n <= 80; ++n) {
        sum += (co.A[n] + co.B[n] * t + co.C[n] * t * t) * basis;
        basis *= t * (t - 1.0) * (t - 0.5);
      }
      EXPECT_LE(oracle::rel_err(sum, oracle::f_of_t(a, z, t)), 1e-8) << z << " " << t;
    }
  }
}

TEST(ThreePointCoeffs, Singular) {
  EXPECT_THROW(threepoint_coeffs(1.2, 1.0, 3), SingularityError);
  EXPECT_THROW(threepoint_coeffs(1.2, 2.0, 3), SingularityError);
}

TEST(Phi3, Examples) {
  EXPECT_EQ(phi3(0, 2.1, 3.0, PhiMode::Direct), 1.0);
  EXPECT_EQ(phi3(0, 2.1, 3.0, PhiMode::Recurrence), 1.0);
  EXPECT_NEAR(phi3(1, 2.1, 3.0, PhiMode::Direct), 0.0189, 1e-15);
  EXPECT_NEAR(phi3(1, 2.1, 3.0, PhiMode::Recurrence), 0.0189, 1e-15);
}

TEST(Phi3, IsSignedBetaMoment) {
  for (auto [b, c] : {std::pair{2.1, 3.0}, std::pair{2.5, 3.0}, std::pair{2.01, 3.0},
                      std::pair{0.4, 1.7}}) {
    for (std::size_t n = 0; n <= 25; ++n) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      const double ref = sign * beta_moment(n, b, c);
      EXPECT_LE(std::abs(phi3(n, b, c) - ref), 1e-13 * std::abs(ref)) << b << " " << n;
    }
  }
}

TEST(Phi3, RecurrenceMatchesDirect) {
  for (auto [b, c] : {std::pair{2.1, 3.0}, std::pair{2.5, 3.0}, std::pair{2.01, 3.0},
                      std::pair{3.1, 4.0}, std::pair{4.5, 5.0}}) {
    const auto rec = phi3_sequence(25, b, c, PhiMode::Recurrence);
    const auto dir = phi3_sequence(25, b, c, PhiMode::Direct);
    for (std::size_t n = 0; n <= 25; ++n) {
      EXPECT_LE(std::abs(rec.values[n] - dir.values[n]), 1e-9 * std::abs(dir.values[n]))
          << b << " " << c << " " << n;
    }
  }
}

TEST(Phi3, RecurrenceCoefficientsAnnihilateDirectValues) {
  const double b = 2.1, c = 3.0;
  const auto dir = phi3_sequence(20, b, c, PhiMode::Direct);
  for (std::size_t n = 1; n < 20; ++n) {
    const auto r = phi3_recurrence(n, b, c);
    const double residual = r.X * dir.values[n - 1] + r.Y * dir.values[n] + r.Z * dir.values[n + 1];
    const double scale = std::abs(r.X * dir.values[n - 1]) + std::abs(r.Y * dir.values[n]);
    EXPECT_LE(std::abs(residual), 1e-12 * scale) << n;
  }
}

TEST(Phi3, ContiguousRelation) {
  const double b = 2.1, c = 3.0;
  for (std::size_t n = 0; n <= 15; ++n) {
    const double lhs = phi3(n + 1, b, c);
    const double rhs = b * (b + 1.0) * (c - b) / (c * (c + 1.0) * (c + 2.0)) * phi3(n, b + 2.0, c + 3.0) -
                       b * (c - b) / (2.0 * c * (c + 1.0)) * phi3(n, b + 1.0, c + 2.0);
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::abs(lhs)) << n;
  }
}

TEST(Phi3, BreakdownFallsBackToDirect) {
  // With c = 4b^2/(1+4b) the last factor of Z_1 vanishes.
  const double b = 1.0, c = 0.8;
  EXPECT_EQ(phi3_recurrence(1, b, c).Z, 0.0);
  EXPECT_THROW(phi3_next(1, b, c, 1.0, phi3(1, b, c)), RecurrenceBreakdown);
  const auto rec = phi3_sequence(10, b, c, PhiMode::Recurrence);
  const auto dir = phi3_sequence(10, b, c, PhiMode::Direct);
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_LE(std::abs(rec.values[n] - dir.values[n]), 1e-12 * std::abs(dir.values[n])) << n;
  }
}

TEST(Phi3, Pole) {
  EXPECT_THROW(phi3(2, 1.0, -3.0), PoleError);
}

TEST(ThreePointRegion, Examples) {
  EXPECT_TRUE(in_region_threepoint(0.0).inside);
  EXPECT_NEAR(in_region_threepoint(0.0).margin, 12.0 * std::sqrt(3.0), 1e-13);
  EXPECT_TRUE(in_region_threepoint(kE).inside);
  EXPECT_NEAR(in_region_threepoint(kE).margin, 17.0, 1e-13);
  EXPECT_FALSE(in_region_threepoint(2.0).inside);
  EXPECT_FALSE(in_region_threepoint(1.0).inside);
}

TEST(ThreePointRegion, CassiniImageForm) {
  // The image condition |(1/z)(1/z - 1)(1/z - 1/2)| > 1/(12 sqrt 3) is the
  // same inequality divided by |z|^3.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  const double r = 1.0 / (12.0 * std::sqrt(3.0));
  for (int i = 0; i < 2000; ++i) {
    const Complex z(u(rng), u(rng));
    const Complex s = 1.0 / z;
    const double image = std::abs(s * (s - 1.0) * (s - 0.5));
    if (std::abs(image - r) < 1e-12) continue;
    EXPECT_EQ(in_region_threepoint(z).inside, image > r) << z;
  }
}

TEST(ThreePointRegion, CubicMaximumOnUnitInterval) {
  // max of |t(t-1)(t-1/2)| on [0, 1] sits at t = (3 +- sqrt 3)/6.
  const double r = 1.0 / (12.0 * std::sqrt(3.0));
  double best = 0.0, arg = 0.0;
  for (int i = 0; i <= 1000000; ++i) {
    const double t = i / 1e6;
    const double v = std::abs(t * (t - 1.0) * (t - 0.5));
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  EXPECT_NEAR(best, r, 1e-12);
  EXPECT_NEAR(std::min(std::abs(arg - (3.0 - std::sqrt(3.0)) / 6.0),
                       std::abs(arg - (3.0 + std::sqrt(3.0)) / 6.0)),
              0.0, 1e-6);
  for (double t0 : {(1.0 - std::sqrt(3.0)) / 2.0, (1.0 + std::sqrt(3.0)) / 2.0}) {
    EXPECT_TRUE(t0 < 0.0 || t0 > 1.0);
  }
}

TEST(EvalThreePoint, ZeroArgument) {
  for (std::size_t n : {0u, 5u, 20u}) {
    EXPECT_EQ(eval_threepoint(HypParams(1.2, 2.1, 3.0), 0.0, n).value, Complex(1.0, 0.0));
  }
}

TEST(EvalThreePoint, PublishedRelativeErrors) {
  const Complex ref_e = oracle::hyp2f1(1.2, 2.1, 3.0, kE);
  EXPECT_LE(oracle::rel_err(eval_threepoint(HypParams(1.2, 2.1, 3.0), kE, 20).value, ref_e),
            1e-12);
  // The published n = 20 column corresponds to summation index 10.
  const double e10 =
      oracle::rel_err(eval_threepoint(HypParams(1.2, 2.1, 3.0), kE, 10).value, ref_e);
  EXPECT_GT(e10, 0.527e-14 / 10.0);
  EXPECT_LT(e10, 0.527e-14 * 10.0);
  const double m5 = oracle::rel_err(eval_threepoint(HypParams(1.2, 2.1, 3.0), -5.0, 10).value,
                                    oracle::hyp2f1(1.2, 2.1, 3.0, -5.0));
  EXPECT_NEAR(m5, 0.216e-6, 0.005e-6);
}

TEST(EvalThreePoint, NearIntegerDifferenceIsHarmless) {
  const HypParams p(1.2, 2.01, 3.0);
  const Complex ref = oracle::hyp2f1(1.2, 2.01, 3.0, -5.0);
  EXPECT_LE(oracle::rel_err(eval_threepoint(p, -5.0, 20).value, ref), 2e-5);
  EXPECT_LE(oracle::rel_err(eval_threepoint(p, -5.0, 30).value, ref), 1e-10);
  // Exactly integer b - a as well.
  const Complex ref_int = oracle::hyp2f1(1.0, 2.0, 3.0, kE);
  EXPECT_LE(oracle::rel_err(eval_threepoint(HypParams(1.0, 2.0, 3.0), kE, 30).value, ref_int),
            1e-13);
}

TEST(EvalThreePoint, EstimateBoundsActualError) {
  for (const auto& r : kTable4) {
    const HypParams p(r.a, r.b, r.c);
    const Complex ref = oracle::hyp2f1(r.a, r.b, r.c, r.z);
    for (std::size_t n : {3u, 5u, 8u, 10u, 20u, 30u}) {
      const auto res = eval_threepoint(p, r.z, n);
      EXPECT_LE(oracle::rel_err(res.value, ref), 10.0 * res.est_error) << r.z << " " << n;
    }
  }
}

TEST(EvalThreePoint, ModesAgree) {
  for (const auto& r : kTable4) {
    const HypParams p(r.a, r.b, r.c);
    const Complex rec = eval_threepoint(p, r.z, 25, PhiMode::Recurrence).value;
    const Complex dir = eval_threepoint(p, r.z, 25, PhiMode::Direct).value;
    EXPECT_LE(oracle::rel_err(rec, dir), 1e-13) << r.z;
  }
}

TEST(EvalThreePoint, CombinedWeightsDoNotReproduceFunction) {
  // Folding the shifted moments into a single Phi_n(b, c) with the parameter
  // weights b/c and b(b+1)/(c(c+1)) is not an identity; the shifted form is.
  for (const auto& r : kTable4) {
    const HypParams p(r.a, r.b, r.c);
    const Complex ref = oracle::hyp2f1(r.a, r.b, r.c, r.z);
    EXPECT_LE(oracle::rel_err(eval_threepoint(p, r.z, 30).value, ref), 1e-10) << r.z;
    EXPECT_GT(oracle::rel_err(combined_weight_sum(p, r.z, 30), ref), 1e-4) << r.z;
  }
}

TEST(EvalThreePoint, Errors) {
  const HypParams p(1.2, 2.1, 3.0);
  EXPECT_THROW(eval_threepoint(p, 1.0), SingularityError);
  EXPECT_THROW(eval_threepoint(p, 2.0), SingularityError);
  EXPECT_THROW(eval_threepoint(p, -50.0), OutsideDomain);
  EXPECT_THROW(eval_threepoint(HypParams(1.2, 3.0, 2.0), kE), ParamDomainError);
}
