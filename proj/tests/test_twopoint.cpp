#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyp2f1/twopoint.hpp"
#include "oracle.hpp"

using namespace hyp2f1;

namespace {

const Complex kE = std::polar(1.0, std::numbers::pi / 3.0);

struct Row {
  double a, b, c;
  Complex z;
};

const std::vector<Row> kTable3 = {
    {1.2, 2.1, 3.0, -1.0},
    {1.2, 2.5, 3.0, -2.0},
    {1.2, 2.1, 3.0, kE},
    {1.2, 2.5, 3.0, kE},
};

// Twenty points with margin at least 1 inside |z|^2 < 4|1 - z|.
std::vector<Complex> region_samples() {
  std::vector<Complex> out;
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  while (out.size() < 20) {
    const Complex z(u(rng), u(rng));
    if (in_region_twopoint(z).margin >= 1.0 && std::abs(z) >= 0.25) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(TwoPointCoeffs, InitialValues) {
  const auto [A0, B0] = twopoint_coeffs_explicit(1.2, -1.0, 0);
  EXPECT_EQ(A0, Complex(1.0, 0.0));
  EXPECT_NEAR(B0.real(), std::pow(2.0, -1.2) - 1.0, 1e-15);
  EXPECT_NEAR(B0.real(), -0.5647247, 1e-7);

  const auto rec = twopoint_coeffs_recursive(1.2, -1.0, 0);
  ASSERT_EQ(rec.A.size(), 1u);
  ASSERT_EQ(rec.B.size(), 1u);
  EXPECT_EQ(rec.A[0], Complex(1.0, 0.0));
  EXPECT_NEAR(rec.B[0].real(), B0.real(), 1e-15);
}

TEST(TwoPointCoeffs, FirstRecursionStep) {
  const auto rec = twopoint_coeffs_recursive(1.2, -1.0, 1);
  EXPECT_NEAR(rec.A[1].real(), 1.2 + std::pow(2.0, -1.2) - 1.0, 1e-15);
  EXPECT_NEAR(rec.A[1].real(), 0.6352753, 1e-7);
}

TEST(TwoPointCoeffs, ExplicitMatchesRecursiveOnRealAxis) {
  const auto rec = twopoint_coeffs_recursive(1.2, -1.0, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto [A, B] = twopoint_coeffs_explicit(1.2, -1.0, n);
    EXPECT_LE(oracle::rel_err(A, rec.A[n]), 1e-12) << n;
    EXPECT_LE(oracle::rel_err(B, rec.B[n]), 1e-12) << n;
  }
}

TEST(TwoPointCoeffs, ExplicitMatchesRecursiveInRegion) {
  std::vector<Complex> zs = region_samples();
  zs.push_back(kE);
  zs.push_back(std::conj(kE));
  for (Complex z : zs) {
    const auto rec = twopoint_coeffs_recursive(1.2, z, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto [A, B] = twopoint_coeffs_explicit(1.2, z, n);
      EXPECT_LE(oracle::rel_err(A, rec.A[n]), 1e-10) << z << " " << n;
      EXPECT_LE(oracle::rel_err(B, rec.B[n]), 1e-10) << z << " " << n;
    }
  }
}

TEST(TwoPointCoeffs, SingularAtOne) {
  EXPECT_THROW(twopoint_coeffs_explicit(1.2, 1.0, 3), SingularityError);
  EXPECT_THROW(twopoint_coeffs_recursive(1.2, 1.0, 3), SingularityError);
}

TEST(TwoPointCoeffs, ReconstructFunction) {
  const double a = 1.2;
  for (Complex z : region_samples()) {
    // Terms shrink like (|t(t-1)| |z|^2 / |1-z|)^n; keep the tail below 1e-14.
    if (0.25 * std::norm(z) / std::abs(1.0 - z) > 0.75) continue;
    const auto co = twopoint_coeffs_recursive(a, z, 120);
    for (double t : {0.25, 0.5, 0.75}) {
      Complex sum = 0.0, basis = 1.0;
      for (std::size_t n = 0; n <= 120; ++n) {
        sum += (co.A[n] + co.B[n] * t) * basis;
        basis *= t * (t - 1.0);
      }
      EXPECT_LE(oracle::rel_err(sum, oracle::f_of_t(a, z, t)), 1e-10) << z << " " << t;
    }
  }
}

TEST(TwoPointCoeffs, InterpolatesEndpoints) {
  // Only the n = 0 term survives at t = 0 and t = 1.
  const Complex z(-1.5, 0.7);
  const auto co = twopoint_coeffs_recursive(1.2, z, 0);
  EXPECT_EQ(co.A[0], oracle::f_of_t(1.2, z, 0.0));
  EXPECT_LE(oracle::rel_err(co.A[0] + co.B[0], oracle::f_of_t(1.2, z, 1.0)), 1e-15);
}

TEST(PhiPsiMoments, Examples) {
  const auto [phi0, psi0] = phi_psi_moments(0, 2.1, 3.0);
  EXPECT_EQ(phi0, 1.0);
  EXPECT_NEAR(psi0, 0.7, 1e-15);
  EXPECT_NEAR(phi_psi_moments(1, 2.1, 3.0).first, -0.1575, 1e-15);
  EXPECT_NEAR(phi_psi_moments(2, 2.1, 3.0).first, 2.1 * 3.1 * 0.9 * 1.9 / 360.0, 1e-15);
  EXPECT_NEAR(phi_psi_moments(2, 2.1, 3.0).first, 0.0309225, 1e-7);
}

TEST(PhiPsiMoments, AreBetaMoments) {
  // Beta(b, c-b) moments of t^n (t-1)^n and t^{n+1} (t-1)^n, expanded binomially.
  using oracle::wide;
  const double b = 2.1, c = 3.0;
  auto beta_moment = [&](int k) {  // E[t^k] = (b)_k / (c)_k
    wide m = 1;
    for (int i = 0; i < k; ++i) m *= (b + wide(i)) / (c + wide(i));
    return m;
  };
  for (int n = 0; n <= 12; ++n) {
    wide phi = 0, psi = 0, binom = 1;
    for (int j = 0; j <= n; ++j) {
      const int sign = (n - j) % 2 == 0 ? 1 : -1;
      phi += sign * binom * beta_moment(n + j);
      psi += sign * binom * beta_moment(n + j + 1);
      binom = binom * (n - j) / (j + 1);
    }
    const auto [lib_phi, lib_psi] = phi_psi_moments(n, b, c);
    const double ref_phi = phi.convert_to<double>(), ref_psi = psi.convert_to<double>();
    EXPECT_NEAR(lib_phi, ref_phi, 1e-13 * std::abs(ref_phi)) << n;
    EXPECT_NEAR(lib_psi, ref_psi, 1e-13 * std::abs(ref_psi)) << n;
  }
}

TEST(PhiPsiMoments, Pole) {
  EXPECT_THROW(phi_psi_moments(2, 1.0, -3.0), PoleError);
}

TEST(TwoPointRegion, Examples) {
  EXPECT_TRUE(in_region_twopoint(0.0).inside);
  EXPECT_DOUBLE_EQ(in_region_twopoint(0.0).margin, 4.0);
  EXPECT_TRUE(in_region_twopoint(kE).inside);
  EXPECT_NEAR(in_region_twopoint(kE).margin, 3.0, 1e-15);
  EXPECT_FALSE(in_region_twopoint(1.0).inside);
  EXPECT_DOUBLE_EQ(in_region_twopoint(1.0).margin, -1.0);
}

TEST(TwoPointRegion, CassiniImageForm) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(u(rng), u(rng));
    const Complex s = 1.0 / z;
    const double image = std::abs(s * (s - 1.0));
    if (std::abs(image - 0.25) < 1e-12) continue;
    EXPECT_EQ(in_region_twopoint(z).inside, image > 0.25) << z;
  }
}

TEST(EvalTwoPoint, ZeroArgument) {
  for (std::size_t n : {0u, 3u, 20u}) {
    EXPECT_NEAR(std::abs(eval_twopoint(HypParams(1.2, 2.1, 3.0), 0.0, n).value - 1.0), 0.0,
                1e-15);
  }
}

TEST(EvalTwoPoint, PublishedRelativeErrors) {
  const HypParams p(1.2, 2.1, 3.0);
  const double at_e =
      oracle::rel_err(eval_twopoint(p, kE, 20).value, oracle::hyp2f1(1.2, 2.1, 3.0, kE));
  EXPECT_LE(at_e, 1e-12);
  const double at_m1 =
      oracle::rel_err(eval_twopoint(p, -1.0, 10).value, oracle::hyp2f1(1.2, 2.1, 3.0, -1.0));
  EXPECT_NEAR(at_m1, 0.630e-10, 0.01e-10);
}

TEST(EvalTwoPoint, EstimateBoundsActualError) {
  for (const auto& r : kTable3) {
    const HypParams p(r.a, r.b, r.c);
    const Complex ref = oracle::hyp2f1(r.a, r.b, r.c, r.z);
    for (std::size_t n : {5u, 10u, 15u, 20u, 40u}) {
      const auto res = eval_twopoint(p, r.z, n);
      EXPECT_LE(oracle::rel_err(res.value, ref), 10.0 * res.est_error) << r.z << " " << n;
    }
  }
}

TEST(EvalTwoPoint, ConvergedAtDefaultTerms) {
  for (const auto& r : kTable3) {
    const auto res = eval_twopoint(HypParams(r.a, r.b, r.c), r.z);
    EXPECT_LE(oracle::rel_err(res.value, oracle::hyp2f1(r.a, r.b, r.c, r.z)), 1e-13) << r.z;
  }
}

TEST(EvalTwoPoint, Errors) {
  const HypParams p(1.2, 2.1, 3.0);
  EXPECT_THROW(eval_twopoint(p, 1.0), SingularityError);
  EXPECT_THROW(eval_twopoint(p, 6.0), OutsideDomain);
  EXPECT_THROW(eval_twopoint(p, Complex(-5.0, 0.0)), OutsideDomain);
  EXPECT_THROW(eval_twopoint(HypParams(1.2, 3.1, 3.0), kE), ParamDomainError);
}
