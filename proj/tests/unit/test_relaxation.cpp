#include <gtest/gtest.h>

#include <cmath>

#include "elastics/errors.hpp"
#include "elastics/relaxation.hpp"
#include "elastics/verification.hpp"
#include "generators.hpp"

using namespace elastics;
using namespace elastics::relaxation;

namespace {

// lambda = mu = rho = 1, L = k = 1, b = e, c = 1: surface at T = 1/sqrt(3).
RelaxationProblem base(EndVariant v = EndVariant::StressEnds) {
  RelaxationProblem p{Material(1, 1, 1), 1.0, 1.0, 2.0, 1.0, std::exp(1.0), 1.0,
                      1.0 / std::sqrt(3.0), v, {}};
  p.end_data = expected_end_data(p);
  return p;
}

// Random point on the solvability surface: T is chosen from the rest.
RelaxationProblem random_on_surface(gen::Rng& rng) {
  const Material m = gen::positive_lambda_material(rng);
  RelaxationProblem p{m,
                      rng.magnitude(0.2, 5.0),
                      rng.magnitude(0.2, 5.0),
                      rng.sign() * rng.magnitude(0.1, 10.0),
                      rng.magnitude(0.2, 3.0),
                      1.0 + rng.magnitude(0.1, 10.0),
                      rng.magnitude(0.2, 3.0),
                      1.0,
                      static_cast<EndVariant>(rng.integer(0, 3)),
                      {}};
  p.T = std::sqrt(m.rho() / m.p_modulus()) * p.c * std::log(p.b) * p.L / p.k;
  p.end_data = expected_end_data(p);
  return p;
}

}  // namespace

TEST(Relaxation, SolvabilityExample) {
  const SolvabilityReport s = solvability(base());
  EXPECT_TRUE(s.solvable);
  EXPECT_TRUE(s.on_surface);
  EXPECT_TRUE(s.decay_bound_ok);
  EXPECT_NEAR(s.lhs, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.rhs, 1.0);

  RelaxationProblem off = base();
  off.T *= 1.0 + 1e-6;
  EXPECT_FALSE(solvability(off).solvable);
  EXPECT_THROW(solve(off), NotClosedForm);
  EXPECT_THROW(table4_check(off), NotClosedForm);
}

TEST(Relaxation, AmplitudeFactor) {
  const RelaxationSolution s = solve(base());
  EXPECT_DOUBLE_EQ(s.amplitude_closed, 2.0);
  EXPECT_NEAR(s.amplitude_T, 2.0, 1e-14);
  const double b = std::exp(1.0), T = base().T;
  for (double z : {0.0, 0.3, 1.0}) {
    for (double t : {0.0, 0.2, 1.5}) {
      const Displacement u = displacement(s.family, 0.4, 0.0, z, t);
      EXPECT_EQ(u.u_r, 0.0);
      EXPECT_NEAR(u.u_z, 2.0 * std::sinh(z) * std::pow(b, -t / T), 1e-14);
    }
  }
}

TEST(Relaxation, StressClosedForms) {
  const RelaxationSolution s = solve(base());
  const double T = base().T;
  for (double r : {0.0, 0.5, 1.0}) {
    for (double z : {0.0, 0.4, 1.0}) {
      for (double t : {0.0, 0.3, 2.0}) {
        const AxisymStress st = axisym_stress(s.family, r, z, t);
        const double drive = 2.0 * std::cosh(z) * std::exp(-t / T);
        EXPECT_NEAR(st.sigma_rr, drive, 1e-13 * std::abs(drive));
        EXPECT_EQ(st.sigma_rz, 0.0);
        EXPECT_NEAR(st.sigma_zz / st.sigma_rr, 3.0, 1e-12);
      }
    }
  }
}

TEST(Relaxation, EndConditionRows) {
  const double A = 2.0, p = 3.0;
  const EndData e = expected_end_data(base());
  EXPECT_DOUBLE_EQ(*e.u1, A * std::sinh(1.0));
  EXPECT_EQ(*e.p1, 0.0);
  EXPECT_DOUBLE_EQ(*e.p2, p * A);
  EXPECT_DOUBLE_EQ(*e.p3, p * A * std::cosh(1.0));

  for (EndVariant v : {EndVariant::DisplacementEnds, EndVariant::StressEnds, EndVariant::MixedA,
                       EndVariant::MixedB}) {
    EXPECT_TRUE(table4_check(base(v)).compatible) << to_string(v);
    EXPECT_EQ(end_variant_from_string(to_string(v)), v);
  }
  EXPECT_THROW(end_variant_from_string("Clamped"), InvalidArgument);

  RelaxationProblem d = base(EndVariant::DisplacementEnds);
  *d.end_data.u1 *= 1.01;
  try {
    table4_check(d);
    FAIL();
  } catch (const IncompatibleEndData& err) {
    ASSERT_EQ(err.violated().size(), 1u);
    EXPECT_EQ(err.violated()[0].rfind("u1", 0), 0u);
  }
  RelaxationProblem missing = base(EndVariant::MixedB);
  missing.end_data.p1.reset();
  EXPECT_THROW(table4_report(missing), InvalidArgument);
}

TEST(Relaxation, Errors) {
  RelaxationProblem p = base();
  p.b = 1.0;
  EXPECT_THROW(solve(p), InvalidArgument);
  p = base();
  p.amplitude = 0;
  EXPECT_THROW(solve(p), InvalidArgument);
  // lambda = 0 on the surface: 2 T^2 = 1
  p = base();
  p.material = Material(0.0, 1, 1);
  p.T = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(solvability(p).solvable);
  EXPECT_THROW(solve(p), LambdaZeroExcluded);
}

TEST(RelaxationProperty, VariantsAcceptExactAndRejectPerturbed) {
  gen::Rng rng(606);
  for (int i = 0; i < 200; ++i) {
    const RelaxationProblem p = random_on_surface(rng);
    ASSERT_TRUE(solvability(p).solvable) << i;
    EXPECT_TRUE(table4_check(p).compatible) << i;
    const CompatibilityReport rep = table4_report(p);
    for (const auto& item : rep.items) {
      RelaxationProblem q = p;
      const double sgn = rng.sign();
      auto bump = [&](std::optional<double>& v) {
        *v = *v == 0.0 ? sgn * 1e-6 * std::abs(p.amplitude) : *v * (1.0 + sgn * 1e-6);
      };
      if (item.name == "u1") bump(q.end_data.u1);
      if (item.name == "p1") bump(q.end_data.p1);
      if (item.name == "p2") bump(q.end_data.p2);
      if (item.name == "p3") bump(q.end_data.p3);
      EXPECT_THROW(table4_check(q), IncompatibleEndData) << i << " " << item.name;
    }
  }
}

TEST(RelaxationProperty, AmplitudeProportionalToT) {
  RelaxationProblem p = base();
  const double ratio = amplitude_law(p) / p.T;
  for (double T : {0.1, 0.5, 1.0, 2.0, 7.0}) {
    // stay on the surface by moving k
    p.T = T;
    p.k = std::sqrt(p.material.rho() / p.material.p_modulus()) * p.c * std::log(p.b) * p.L / T;
    p.end_data = expected_end_data(p);
    const RelaxationSolution s = solve(p);
    EXPECT_NEAR(s.amplitude_T / T, ratio, 1e-12 * std::abs(ratio));
    EXPECT_NEAR(s.amplitude_T, s.amplitude_closed, 1e-12 * std::abs(s.amplitude_closed));
  }
}

TEST(RelaxationProperty, DependsOnlyOnDecayProduct) {
  gen::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const RelaxationProblem p = random_on_surface(rng);
    RelaxationProblem q = p;
    q.b = 1.0 + rng.magnitude(0.1, 10.0);
    q.c = p.c * std::log(p.b) / std::log(q.b);
    const RelaxationSolution a = solve(p), b = solve(q);
    const double r = 0.5 * p.R, z = rng.uniform(0, p.L), t = rng.uniform(0, 2 * p.T);
    const double ua = displacement(a.family, r, 0, z, t).u_z;
    const double ub = displacement(b.family, r, 0, z, t).u_z;
    EXPECT_NEAR(ua, ub, 1e-12 * std::abs(ua)) << i;
  }
}

TEST(RelaxationProperty, ResidualsAndBoundaries) {
  gen::Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    const RelaxationProblem p = random_on_surface(rng);
    const RelaxationSolution s = solve(p);
    verify::SampleSpec spec;
    spec.count = 20;
    const auto nl = verify::nl_residual(s, p, spec);
    EXPECT_TRUE(nl.pass) << i << " " << nl.max_rel_residual;
    const auto bc = verify::bc_residual(s, p);
    EXPECT_TRUE(bc.pass) << i << " " << bc.max_rel_residual;
  }
}
