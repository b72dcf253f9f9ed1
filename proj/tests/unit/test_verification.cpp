#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "elastics/errors.hpp"
#include "elastics/verification.hpp"
#include "families.hpp"

using namespace elastics;
using namespace elastics::verify;

namespace {

constexpr double kPi = std::numbers::pi;

vibration::VibrationProblem case1() {
  return {Material(1, 1, 1), 2 * kPi, 1.0, 1.0, 1, std::sqrt(0.5)};
}

}  // namespace

TEST(Verify, Scales) {
  EXPECT_DOUBLE_EQ(spatial_scale(-1.0, 0.5), 2 * kPi);
  EXPECT_DOUBLE_EQ(spatial_scale(4.0, 0.1), 0.5);
  EXPECT_DOUBLE_EQ(spatial_scale(0.0, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(temporal_scale(-4.0), kPi);
  const StencilSteps h = default_steps(-1.0, 4.0, 1.0);
  EXPECT_DOUBLE_EQ(h.hr, 1e-4 * 2 * kPi);
  EXPECT_DOUBLE_EQ(h.hz, h.hr);
  EXPECT_DOUBLE_EQ(h.htheta, 1e-4);
  EXPECT_DOUBLE_EQ(h.ht, 0.5e-4);
}

TEST(Verify, SamplingRespectsDomain) {
  SampleSpec spec;
  spec.domain = {0.0, 2.0, -1.0, 1.0, 0.0, 3.0};
  const StencilSteps h{1e-3, 1e-3, 1e-3, 1e-3};
  const auto pts = sample_points(spec, h);
  ASSERT_EQ(pts.size(), 50u);
  for (const auto& p : pts) {
    EXPECT_GE(p.r - h.hr, 0.1 - 1e-15);
    EXPECT_LE(p.r + h.hr, 2.0);
    EXPECT_GE(p.z - h.hz, -1.0);
    EXPECT_LE(p.t + h.ht, 3.0);
  }
  // same seed, same points
  const auto again = sample_points(spec, h);
  EXPECT_EQ(pts[7].z, again[7].z);
  spec.seed = 1;
  EXPECT_NE(sample_points(spec, h)[7].z, pts[7].z);

  SampleSpec tiny;
  tiny.domain = {0.0, 1.0, 0.0, 1e-4, 0.0, 1.0};
  EXPECT_THROW(sample_points(tiny, h), DomainTooSmall);
  SampleSpec outside;
  outside.points = {{0.5, 0.0, 0.9999, 0.5}};
  EXPECT_THROW(sample_points(outside, h), DomainTooSmall);
}

TEST(Verify, ZeroFieldIsExact) {
  const VectorField zero = [](double, double, double, double) { return Displacement{}; };
  SampleSpec spec;
  const auto rep = nl_residual(Material(1, 1, 1), zero, spec, StencilSteps{});
  EXPECT_EQ(rep.max_rel_residual, 0.0);
  EXPECT_TRUE(rep.pass);

  FamilyCoefficients c;
  c.g = 1.0;
  const SolutionFamily fam(Material(1, 1, 1), ModeParams(-1.0, -0.5, 0), c);
  EXPECT_EQ(buchwald_system_residual(fam, spec, 1.0).max_rel_residual, 0.0);
}

TEST(Verify, Case1ResidualAndCorruption) {
  const auto prob = case1();
  const auto sol = vibration::solve(prob);
  SampleSpec spec;
  const auto rep = nl_residual(sol, prob, spec);
  EXPECT_TRUE(rep.pass) << rep.max_rel_residual;
  EXPECT_LE(rep.max_rel_residual, 1e-5);
  EXPECT_LE(rep.form_mismatch, kFormMismatchTol);
  EXPECT_EQ(rep.points.size(), 50u);
  EXPECT_EQ(rep.check, "navier_lame");

  const VectorField bad = [&sol](double r, double th, double z, double t) {
    Displacement u = displacement(sol.family, r, th, z, t);
    u.u_z *= 1.01;
    return u;
  };
  SampleSpec s2 = spec;
  s2.domain = {0.0, prob.R, 0.0, prob.L, 0.0, 2 * kPi / prob.omega};
  const auto corrupted = nl_residual(prob.material, bad, s2, rep.stencil);
  EXPECT_GT(corrupted.max_rel_residual, 1e-3);
  EXPECT_FALSE(corrupted.pass);
}

TEST(Verify, ConvergesAtSecondOrder) {
  const auto prob = case1();
  const auto sol = vibration::solve(prob);
  SampleSpec spec;
  spec.domain = {0.0, 4.0, 0.0, prob.L, 0.0, 2 * kPi / prob.omega};
  spec.points = {{1.0, 0.3, 1.2, 0.7}, {2.0, 1.0, 2.5, 3.0}, {3.0, 2.0, 4.0, 5.0}};
  double prev = 0.0;
  for (double h : {0.08, 0.04, 0.02, 0.01}) {
    spec.steps = StencilSteps{h, h, h, h};
    const double res = nl_residual(sol.family, spec, 4.0).max_rel_residual;
    if (prev > 0.0) {
      EXPECT_GT(prev / res, 3.5) << h;
      EXPECT_LT(prev / res, 4.5) << h;
    }
    prev = res;
  }
}

TEST(Verify, NodalPointStaysResolved) {
  // sin(w t) vanishes at t = pi / w; in double the second differences there
  // are rounding noise against a normaliser that scales with sin(w t).
  const auto prob = case1();
  const auto sol = vibration::solve(prob);
  SampleSpec spec;
  spec.domain = {0.0, prob.R, 0.0, prob.L, 0.0, 2 * kPi / prob.omega};
  spec.points = {{0.6, 0.0, 1.3, kPi / prob.omega + 1e-7}};
  const auto rep = nl_residual(sol.family, spec, prob.R);
  EXPECT_LE(rep.max_rel_residual, 1e-5);
  const VectorField narrow = [&sol](double r, double th, double z, double t) {
    return displacement(sol.family, r, th, z, t);
  };
  const auto coarse = nl_residual(prob.material, narrow, spec, rep.stencil);
  EXPECT_GT(coarse.max_rel_residual, 10 * rep.max_rel_residual);
}

TEST(Verify, ChiAffineBranch) {
  const Material m(1, 2, 1);
  // eta_r = 0 throughout, so the radial part is 1 + 0.5 ln r; without the
  // log every piece of the Laplacian is zero and the ratio means nothing.
  for (double eta_t : {-1.0, 0.0, 1.0}) {
    const SovChi chi = sov_chi(m, eta_t, eta_t, 0.0, {1.0, 0.5, 1.0, 0.5, 1.0, 0.3, 1.0, 0.2});
    SampleSpec spec;
    spec.domain = {0.0, 2.0, 0.0, 2.0, 0.0, 2.0};
    const auto rep = chi_residual(chi, spec, 2.0);
    EXPECT_LE(rep.max_rel_residual, 1e-5) << eta_t;
    EXPECT_EQ(rep.check, "chi_wave");
  }
}

TEST(Verify, BoundaryReports) {
  const auto prob = case1();
  const auto sol = vibration::solve(prob);
  const BcReport bc = bc_residual(sol, prob);
  EXPECT_TRUE(bc.pass);
  EXPECT_GE(bc.items.size(), 4u);
  EXPECT_EQ(bc.grid_points, 6 * 400);  // six conditions, 10 x 10 x 4 each
  // 1% on one coefficient breaks the surface conditions
  vibration::VibrationSolution bad = sol;
  bad.family = vibration::vibration_family(prob, 1.01 * sol.a_bar_1, sol.a_bar_2);
  const BcReport worse = bc_residual(bad, prob);
  EXPECT_GT(worse.max_rel_residual, 1e-3);
  EXPECT_FALSE(worse.pass);
}

TEST(VerifyProperty, RandomFamiliesPassAndDilatedFamiliesFail) {
  gen::Rng rng(8080);
  for (int i = 0; i < 60; ++i) {
    const gen::FamilyDraw d = gen::family(rng, gen::regime_for(i));
    SampleSpec spec;
    spec.domain = d.domain;
    spec.count = 10;
    spec.seed = 100 + i;
    const auto nl = nl_residual(d.family, spec, d.extent);
    EXPECT_LE(nl.max_rel_residual, 1e-5) << i << " " << d.label;
    EXPECT_LE(nl.form_mismatch, kFormMismatchTol) << i << " " << d.label;
    const auto bw = buchwald_system_residual(d.family, spec, d.extent);
    EXPECT_LE(bw.max_rel_residual, 1e-5) << i << " " << d.label;

    const auto bad = nl_residual(d.family.material(), gen::time_dilated(d.family, 1.01), spec,
                                 nl.stencil);
    EXPECT_GT(bad.max_rel_residual, 1e-3) << i << " " << d.label;
  }
}
