#include <gtest/gtest.h>

#include <cmath>

#include "elastics/core_model.hpp"
#include "elastics/errors.hpp"
#include "generators.hpp"

using namespace elastics;

TEST(Material, Validation) {
  EXPECT_NO_THROW(Material(-0.5, 1.0, 1.0));
  EXPECT_THROW(Material(1.0, 0.0, 1.0), InvalidArgument);
  EXPECT_THROW(Material(1.0, 1.0, -1.0), InvalidArgument);
  EXPECT_THROW(Material(-2.0, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(Material(NAN, 1.0, 1.0), InvalidArgument);
  const Material m(2.0, 1.0, 4.0);
  EXPECT_DOUBLE_EQ(m.p_modulus(), 4.0);
  EXPECT_DOUBLE_EQ(m.longitudinal_speed(), 1.0);
  EXPECT_DOUBLE_EQ(m.shear_speed(), 0.5);
  EXPECT_TRUE(Material(0.0, 1.0, 1.0).lambda_is_zero());
}

TEST(ModeParams, Validation) {
  EXPECT_THROW(ModeParams(1.0, 0.0, 0), TauZero);
  EXPECT_THROW(ModeParams(1.0, 1.0, -1), InvalidArgument);
  EXPECT_THROW(ModeParams(1.0, 1.0, 63), InvalidArgument);
  EXPECT_NO_THROW(ModeParams(0.0, -1.0, 3));
}

TEST(CoreModel, QuarticExamples) {
  const Material m(1, 1, 1);
  const auto q = quartic_coefficients(m, ModeParams(1.0, 0.5, 0));
  EXPECT_DOUBLE_EQ(q.a2, 3.0);
  EXPECT_DOUBLE_EQ(q.a1, 4.0);
  EXPECT_DOUBLE_EQ(q.a0, 1.25);
  EXPECT_EQ(quartic_coefficients(m, ModeParams(0.5, 0.5, 0)).a0, 0.0);
  const auto z = quartic_coefficients(m, ModeParams(0.0, 0.7, 0));
  EXPECT_DOUBLE_EQ(z.a0, 0.7 * 0.7);
  EXPECT_DOUBLE_EQ(z.a1, -4.0 * 0.7);
}

TEST(CoreModel, RootExamples) {
  const Material m(1, 1, 1);
  const auto r = helmholtz_roots(m, ModeParams(1.0, 0.5, 0));
  EXPECT_DOUBLE_EQ(r.minus, -5.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.plus, -0.5);
  EXPECT_EQ(helmholtz_roots(m, ModeParams(0.5 / 3.0, 0.5, 0)).minus, 0.0);
}

TEST(CoreModel, AlphaGammaExamples) {
  const Material m(1, 1, 1);
  const auto d = alpha_gamma(m, ModeParams(1.0, -0.5, 0));
  EXPECT_NEAR(d.alpha1, std::sqrt(1.0 + 1.0 / 6.0), 1e-15);
  EXPECT_NEAR(d.alpha2, std::sqrt(1.5), 1e-15);
  EXPECT_EQ(d.kind1, RadialKind::Oscillatory);
  EXPECT_EQ(d.kind2, RadialKind::Oscillatory);

  const auto c1 = alpha_gamma(m, ModeParams(-1.0, -0.5, 0));
  EXPECT_EQ(c1.kind1, RadialKind::Modified);
  EXPECT_EQ(c1.kind2, RadialKind::Modified);
  EXPECT_NEAR(c1.alpha1, std::sqrt(5.0 / 6.0), 1e-15);
  EXPECT_NEAR(c1.alpha2, std::sqrt(0.5), 1e-15);
  EXPECT_DOUBLE_EQ(c1.gamma1, 1.0);
  EXPECT_DOUBLE_EQ(c1.gamma2, 0.5);
  EXPECT_THROW(alpha_gamma(m, ModeParams(0.0, -0.5, 0)), KappaZero);
}

TEST(CoreModel, Kappa0Diagnostics) {
  const Material m(1, 1, 1);
  const auto d = kappa0_diagnostics(m, 1.0);
  EXPECT_NEAR(d.alpha1, std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(d.alpha2, 1.0, 1e-15);
  EXPECT_EQ(d.kind1, RadialKind::Modified);
  EXPECT_EQ(d.kind2, RadialKind::Modified);
  EXPECT_TRUE(d.kappa_zero);
  const auto o = kappa0_diagnostics(m, -2.0);
  EXPECT_EQ(o.kind1, RadialKind::Oscillatory);
  EXPECT_EQ(o.kind2, RadialKind::Oscillatory);
}

TEST(CoreModel, DegenerateGammaTwo) {
  // mu kappa = rho tau: second root vanishes and gamma_2 = 0.
  const Material m(1, 1, 1);
  const auto d = alpha_gamma(m, ModeParams(-1.0, -1.0, 0));
  EXPECT_EQ(d.kind2, RadialKind::LaplaceDegenerate);
  EXPECT_EQ(d.alpha2, 0.0);
  EXPECT_EQ(d.gamma2, 0.0);
}

TEST(CoreModelProperty, RootsSolveQuarticAndMatchAlphas) {
  gen::Rng rng(1234);
  for (int i = 0; i < 1000; ++i) {
    const Material mat = gen::material(rng);
    const double kappa = rng.sign() * rng.magnitude(1e-2, 1e2);
    const double tau = rng.sign() * rng.magnitude(1e-2, 1e2);
    const ModeParams mode(kappa, tau, rng.integer(0, 5));
    const auto q = quartic_coefficients(mat, mode);
    EXPECT_GT(q.a2, 0.0);
    const auto r = helmholtz_roots(mat, mode);
    for (double L : {r.minus, r.plus}) {
      const double scale = std::max({std::abs(q.a2 * L * L), std::abs(q.a1 * L),
                                     std::abs(q.a0)});
      EXPECT_LE(std::abs(q.a2 * L * L + q.a1 * L + q.a0), 1e-10 * scale) << i;
    }
    const auto d = alpha_gamma(mat, mode);
    EXPECT_EQ(d.gamma1, 1.0);
    // -alpha^2 restored with the branch sign reproduces the roots:
    // Oscillatory (J) means Lambda < 0, Modified means Lambda > 0.
    const auto signed_sq = [](RadialKind k, double a) {
      return k == RadialKind::Oscillatory ? -a * a : a * a;
    };
    EXPECT_LE(std::abs(signed_sq(d.kind1, d.alpha1) - r.minus), 1e-12 * std::abs(r.minus) + 1e-300);
    EXPECT_LE(std::abs(signed_sq(d.kind2, d.alpha2) - r.plus), 1e-12 * std::abs(r.plus) + 1e-300);
    const double want = kappa - mat.rho() * tau / mat.mu();
    EXPECT_LE(std::abs(d.gamma2 * kappa - want), 4 * 2.3e-16 * std::max(std::abs(want), std::abs(kappa)));
  }
}

TEST(CoreModelProperty, ClassificationFlipsAcrossThreshold) {
  gen::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Material mat = gen::material(rng);
    const double tau = rng.sign() * rng.magnitude(0.1, 10.0);
    const double thr = mat.rho() * tau / mat.mu();
    const double d = 1e-6 * std::max(1.0, std::abs(thr));
    const auto above = alpha_gamma(mat, ModeParams(thr + d, tau, 0));
    const auto below = alpha_gamma(mat, ModeParams(thr - d, tau, 0));
    EXPECT_EQ(above.kind2, RadialKind::Oscillatory);
    EXPECT_EQ(below.kind2, RadialKind::Modified);
    EXPECT_EQ(alpha_gamma(mat, ModeParams(thr, tau, 0)).kind2,
              RadialKind::LaplaceDegenerate);
    EXPECT_EQ(classify_radial(thr, thr), RadialKind::LaplaceDegenerate);
  }
}
