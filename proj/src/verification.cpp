#include "elastics/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "elastics/errors.hpp"
#include "elastics/parallel.hpp"

namespace elastics::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFloor = 1e-30;

using Real = Extended;

struct Partials {
  Real v = 0;
  Real r = 0;
  Real th = 0;
  Real z = 0;
  Real rr = 0;
  Real thth = 0;
  Real zz = 0;
  Real tt = 0;
  Real rth = 0;
  Real rz = 0;
  Real thz = 0;
};

Real first(Real plus, Real minus, Real h) { return (plus - minus) / (2 * h); }

Real second(Real plus, Real centre, Real minus, Real h) {
  return (plus - 2 * centre + minus) / (h * h);
}

Real mixed(Real pp, Real pm, Real mp, Real mm, Real h1, Real h2) {
  return (pp - pm - mp + mm) / (4 * h1 * h2);
}

Real component(const DisplacementX& d, int i) {
  return i == 0 ? d.u_r : (i == 1 ? d.u_theta : d.u_z);
}

// 21 evaluations: centre, +-h on each axis, and the 4-point corners of the
// r-theta, r-z and theta-z planes.
std::array<Partials, 3> vector_partials(const VectorFieldX& u, const SamplePoint& p,
                                        const StencilSteps& steps) {
  const Real hr = steps.hr, hth = steps.htheta, hz = steps.hz, ht = steps.ht;
  const auto at = [&](Real dr, Real dth, Real dz, Real dt) {
    return u(Real(p.r) + dr, Real(p.theta) + dth, Real(p.z) + dz, Real(p.t) + dt);
  };
  const DisplacementX c = at(0, 0, 0, 0);
  const DisplacementX rp = at(hr, 0, 0, 0), rm = at(-hr, 0, 0, 0);
  const DisplacementX tp = at(0, hth, 0, 0), tm = at(0, -hth, 0, 0);
  const DisplacementX zp = at(0, 0, hz, 0), zm = at(0, 0, -hz, 0);
  const DisplacementX sp = at(0, 0, 0, ht), sm = at(0, 0, 0, -ht);
  const DisplacementX rt_pp = at(hr, hth, 0, 0), rt_pm = at(hr, -hth, 0, 0);
  const DisplacementX rt_mp = at(-hr, hth, 0, 0), rt_mm = at(-hr, -hth, 0, 0);
  const DisplacementX rz_pp = at(hr, 0, hz, 0), rz_pm = at(hr, 0, -hz, 0);
  const DisplacementX rz_mp = at(-hr, 0, hz, 0), rz_mm = at(-hr, 0, -hz, 0);
  const DisplacementX tz_pp = at(0, hth, hz, 0), tz_pm = at(0, hth, -hz, 0);
  const DisplacementX tz_mp = at(0, -hth, hz, 0), tz_mm = at(0, -hth, -hz, 0);

  std::array<Partials, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto f = [i](const DisplacementX& d) { return component(d, i); };
    Partials& q = out[i];
    q.v = f(c);
    q.r = first(f(rp), f(rm), hr);
    q.th = first(f(tp), f(tm), hth);
    q.z = first(f(zp), f(zm), hz);
    q.rr = second(f(rp), q.v, f(rm), hr);
    q.thth = second(f(tp), q.v, f(tm), hth);
    q.zz = second(f(zp), q.v, f(zm), hz);
    q.tt = second(f(sp), q.v, f(sm), ht);
    q.rth = mixed(f(rt_pp), f(rt_pm), f(rt_mp), f(rt_mm), hr, hth);
    q.rz = mixed(f(rz_pp), f(rz_pm), f(rz_mp), f(rz_mm), hr, hz);
    q.thz = mixed(f(tz_pp), f(tz_pm), f(tz_mp), f(tz_mm), hth, hz);
  }
  return out;
}

using ScalarField = std::function<Real(Real, Real, Real, Real)>;

// Centre and +-h on each axis (9 evaluations); no mixed partials needed.
Partials scalar_partials(const ScalarField& f, const SamplePoint& p,
                         const StencilSteps& steps) {
  const Real hr = steps.hr, hth = steps.htheta, hz = steps.hz, ht = steps.ht;
  const Real r = p.r, th = p.theta, z = p.z, t = p.t;
  Partials q;
  q.v = f(r, th, z, t);
  const Real rp = f(r + hr, th, z, t);
  const Real rm = f(r - hr, th, z, t);
  const Real tp = f(r, th + hth, z, t);
  const Real tm = f(r, th - hth, z, t);
  const Real zp = f(r, th, z + hz, t);
  const Real zm = f(r, th, z - hz, t);
  const Real sp = f(r, th, z, t + ht);
  const Real sm = f(r, th, z, t - ht);
  q.r = first(rp, rm, hr);
  q.th = first(tp, tm, hth);
  q.z = first(zp, zm, hz);
  q.rr = second(rp, q.v, rm, hr);
  q.thth = second(tp, q.v, tm, hth);
  q.zz = second(zp, q.v, zm, hz);
  q.tt = second(sp, q.v, sm, ht);
  return q;
}

Real laplacian(const Partials& f, Real r) {
  return f.rr + f.r / r + f.thth / (r * r) + f.zz;
}

// Largest magnitude among the pieces of the scalar Laplacian.
Real laplacian_scale(const Partials& f, Real r) {
  return std::max({std::abs(f.rr), std::abs(f.r / r), std::abs(f.thth / (r * r)),
                   std::abs(f.zz)});
}

Real norm3(Real a, Real b, Real c) { return std::sqrt(a * a + b * b + c * c); }

void finalize(ResidualReport& rep) {
  rep.max_rel_residual = 0.0;
  for (const auto& p : rep.points) {
    rep.max_rel_residual = std::max(rep.max_rel_residual, p.relative);
  }
  rep.pass = rep.max_rel_residual <= rep.tolerance &&
             (rep.check != "navier_lame" || rep.form_mismatch <= kFormMismatchTol);
}

double axial_scale(double kappa) {
  if (kappa < 0.0) return kTwoPi / std::sqrt(-kappa);
  if (kappa > 0.0) return 1.0 / std::sqrt(kappa);
  return 1.0;
}

StencilSteps steps_for(const SampleSpec& spec, const SolutionFamily& fam, double extent) {
  return spec.steps ? *spec.steps
                    : default_steps(fam.mode().kappa(), fam.mode().tau(), extent,
                                    spec.step_factor);
}

}  // namespace

double spatial_scale(double kappa, double radial_extent) {
  return std::max(radial_extent, axial_scale(kappa));
}

double temporal_scale(double tau) { return axial_scale(tau); }

StencilSteps default_steps(double kappa, double tau, double radial_extent,
                           double factor) {
  const double s = factor * spatial_scale(kappa, radial_extent);
  return {s, factor, s, factor * temporal_scale(tau)};
}

StencilSteps default_steps(const SovChi& chi, double radial_extent, double factor) {
  // chi_t'' = eta_t (mu / rho) chi_t
  const double tau = chi.eta_t() * chi.material().mu() / chi.material().rho();
  return default_steps(chi.eta_z(), tau, radial_extent, factor);
}

SampleDomain default_domain(const SolutionFamily& fam, double radial_extent) {
  SampleDomain d;
  d.r_min = 0.0;
  d.r_max = radial_extent;
  d.z_min = 0.0;
  d.z_max = axial_scale(fam.mode().kappa());
  d.t_min = 0.0;
  d.t_max = temporal_scale(fam.mode().tau());
  return d;
}

std::vector<SamplePoint> sample_points(const SampleSpec& spec,
                                       const StencilSteps& h) {
  const SampleDomain& d = spec.domain;
  if (!(h.hr > 0.0 && h.htheta > 0.0 && h.hz > 0.0 && h.ht > 0.0)) {
    throw InvalidArgument("stencil steps must be positive");
  }
  const auto inside = [&](const SamplePoint& p) {
    return p.r - h.hr >= d.r_min && p.r - h.hr > 0.0 && p.r + h.hr <= d.r_max &&
           p.z - h.hz >= d.z_min && p.z + h.hz <= d.z_max &&
           p.t - h.ht >= d.t_min && p.t + h.ht <= d.t_max;
  };
  if (!spec.points.empty()) {
    for (const auto& p : spec.points) {
      if (!inside(p)) {
        throw DomainTooSmall("stencil around (r=" + std::to_string(p.r) +
                             ", z=" + std::to_string(p.z) + ", t=" +
                             std::to_string(p.t) + ") leaves the domain");
      }
    }
    return spec.points;
  }
  if (spec.count < 1) throw InvalidArgument("sample count must be positive");
  const double r_lo = std::max(d.r_min + h.hr, 0.05 * d.r_max);
  const double r_hi = d.r_max - h.hr;
  const double z_lo = d.z_min + h.hz, z_hi = d.z_max - h.hz;
  const double t_lo = d.t_min + h.ht, t_hi = d.t_max - h.ht;
  if (!(r_lo < r_hi) || !(z_lo < z_hi) || !(t_lo < t_hi) || r_lo - h.hr <= 0.0) {
    throw DomainTooSmall("sample domain is smaller than the difference stencil");
  }
  std::mt19937_64 gen(spec.seed);
  std::uniform_real_distribution<double> ur(r_lo, r_hi), uth(0.0, kTwoPi),
      uz(z_lo, z_hi), ut(t_lo, t_hi);
  std::vector<SamplePoint> pts(static_cast<std::size_t>(spec.count));
  for (auto& p : pts) {
    p.r = ur(gen);
    p.theta = uth(gen);
    p.z = uz(gen);
    p.t = ut(gen);
  }
  return pts;
}

ResidualReport nl_residual(const Material& mat, const VectorFieldX& u,
                           const SampleSpec& spec, const StencilSteps& steps) {
  const std::vector<SamplePoint> pts = sample_points(spec, steps);
  const Real l = mat.lambda();
  const Real m = mat.mu();
  const Real rho = mat.rho();

  ResidualReport rep;
  rep.check = "navier_lame";
  rep.stencil = steps;
  rep.tolerance = spec.tolerance;
  rep.points.resize(pts.size());
  std::vector<double> mismatch(pts.size(), 0.0);

  parallel_for(pts.size(), [&](std::size_t i) {
    const SamplePoint& p = pts[i];
    const auto q = vector_partials(u, p, steps);
    const Partials& a = q[0];
    const Partials& b = q[1];
    const Partials& c = q[2];
    const Real r = p.r;
    const Real r2 = r * r;

    const Real gd_r = a.rr + a.r / r - a.v / r2 + b.rth / r - b.th / r2 + c.rz;
    const Real gd_t = (a.rth + a.th / r + b.thth / r + c.thz) / r;
    const Real gd_z = a.rz + a.z / r + b.thz / r + c.zz;

    const Real vl_r = laplacian(a, r) - a.v / r2 - 2 * b.th / r2;
    const Real vl_t = laplacian(b, r) - b.v / r2 + 2 * a.th / r2;
    const Real vl_z = laplacian(c, r);

    const Real cc_r = (b.rth + b.th / r - a.thth / r) / r - (a.zz - c.rz);
    const Real cc_t =
        c.thz / r - b.zz - (b.rr + b.r / r - b.v / r2 - a.rth / r + a.th / r2);
    const Real cc_z = (a.z - c.r) / r + a.rz - c.rr - (c.thth / r - b.thz) / r;

    const Real n1_r = m * vl_r + (l + m) * gd_r - rho * a.tt;
    const Real n1_t = m * vl_t + (l + m) * gd_t - rho * b.tt;
    const Real n1_z = m * vl_z + (l + m) * gd_z - rho * c.tt;
    const Real n2_r = (l + 2 * m) * gd_r - m * cc_r - rho * a.tt;
    const Real n2_t = (l + 2 * m) * gd_t - m * cc_t - rho * b.tt;
    const Real n2_z = (l + 2 * m) * gd_z - m * cc_z - rho * c.tt;

    const Real norm = std::max({rho * norm3(a.tt, b.tt, c.tt),
                                  m * norm3(vl_r, vl_t, vl_z),
                                  std::abs(l + m) * norm3(gd_r, gd_t, gd_z), Real(kFloor)});
    PointResidual& out = rep.points[i];
    out.point = p;
    const auto d = [](Real v) { return static_cast<double>(v); };
    out.residual = {d(n1_r), d(n1_t), d(n1_z)};
    out.normalizer = {d(norm), d(norm), d(norm)};
    out.relative = d(norm3(n1_r, n1_t, n1_z) / norm);
    mismatch[i] = d(norm3(n1_r - n2_r, n1_t - n2_t, n1_z - n2_z) / norm);
  });
  rep.form_mismatch = mismatch.empty() ? 0.0 : *std::max_element(mismatch.begin(), mismatch.end());
  finalize(rep);
  return rep;
}

ResidualReport nl_residual(const SolutionFamily& fam, const SampleSpec& spec,
                           double radial_extent) {
  const StencilSteps steps =
      steps_for(spec, fam, radial_extent);
  const VectorFieldX u = [&fam](Real r, Real th, Real z, Real t) {
    return displacement_ext(fam, r, th, z, t);
  };
  return nl_residual(fam.material(), u, spec, steps);
}

ResidualReport nl_residual(const Material& mat, const VectorField& u,
                           const SampleSpec& spec, const StencilSteps& steps) {
  const VectorFieldX wide = [&u](Real r, Real th, Real z, Real t) {
    const Displacement d = u(static_cast<double>(r), static_cast<double>(th),
                             static_cast<double>(z), static_cast<double>(t));
    return DisplacementX{d.u_r, d.u_theta, d.u_z};
  };
  return nl_residual(mat, wide, spec, steps);
}

ResidualReport nl_residual(const vibration::VibrationSolution& sol,
                           const vibration::VibrationProblem& prob,
                           const SampleSpec& spec) {
  SampleSpec s = spec;
  s.domain = {0.0, prob.R, 0.0, prob.L, 0.0, kTwoPi / prob.omega};
  return nl_residual(sol.family, s, prob.R);
}

ResidualReport nl_residual(const relaxation::RelaxationSolution& sol,
                           const relaxation::RelaxationProblem& prob,
                           const SampleSpec& spec) {
  SampleSpec s = spec;
  s.domain = {0.0, prob.R, 0.0, prob.L, 0.0, 2.0 * prob.T};
  return nl_residual(sol.family, s, prob.R);
}

ResidualReport buchwald_system_residual(const SolutionFamily& fam,
                                        const SampleSpec& spec,
                                        double radial_extent) {
  const StencilSteps steps =
      steps_for(spec, fam, radial_extent);
  const std::vector<SamplePoint> pts = sample_points(spec, steps);
  const Material& mat = fam.material();
  const Real l = mat.lambda();
  const Real m = mat.mu();
  const Real pm = mat.p_modulus();
  const Real rho = mat.rho();
  const ScalarField phi = [&fam](Real r, Real th, Real z, Real t) {
    return fam.phi_ext(r, th, z, t);
  };
  const ScalarField psi = [&fam](Real r, Real th, Real z, Real t) {
    return fam.psi_ext(r, th, z, t);
  };
  const ScalarField chi = [&fam](Real r, Real th, Real z, Real t) {
    return fam.chi_ext(r, th, z, t);
  };

  ResidualReport rep;
  rep.check = "buchwald";
  rep.stencil = steps;
  rep.tolerance = spec.tolerance;
  rep.points.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const SamplePoint& p = pts[i];
    const Real r = p.r;
    const Partials F = scalar_partials(phi, p, steps);
    const Partials S = scalar_partials(psi, p, steps);
    const Partials X = scalar_partials(chi, p, steps);
    const Real lapF = laplacian(F, r);
    const Real lapS = laplacian(S, r);
    const Real lapX = laplacian(X, r);

    const Real e1 = pm * lapF + (l + m) * S.zz - (l + m) * F.zz - rho * F.tt;
    const Real n1 = std::max({pm * laplacian_scale(F, r), std::abs(l + m) * std::abs(S.zz),
                                std::abs(l + m) * std::abs(F.zz), rho * std::abs(F.tt), Real(kFloor)});
    const Real e2 = (l + m) * (lapF - F.zz) + m * lapS + (l + m) * S.zz - rho * S.tt;
    const Real n2 = std::max({std::abs(l + m) * laplacian_scale(F, r),
                                m * laplacian_scale(S, r), std::abs(l + m) * std::abs(S.zz),
                                rho * std::abs(S.tt), Real(kFloor)});
    const Real e3 = m * lapX - rho * X.tt;
    const Real n3 = std::max({m * laplacian_scale(X, r), rho * std::abs(X.tt), Real(kFloor)});

    PointResidual& out = rep.points[i];
    out.point = p;
    out.residual = {double(e1), double(e2), double(e3)};
    out.normalizer = {double(n1), double(n2), double(n3)};
    out.relative = double(std::max({std::abs(e1) / n1, std::abs(e2) / n2, std::abs(e3) / n3}));
  });
  finalize(rep);
  return rep;
}

ResidualReport chi_residual(const SovChi& chi, const SampleSpec& spec,
                            double radial_extent) {
  const StencilSteps steps =
      spec.steps ? *spec.steps : default_steps(chi, radial_extent, spec.step_factor);
  const std::vector<SamplePoint> pts = sample_points(spec, steps);
  const Real m = chi.material().mu();
  const Real rho = chi.material().rho();
  const ScalarField f = [&chi](Real r, Real th, Real z, Real t) {
    return chi.value_ext(r, th, z, t);
  };
  ResidualReport rep;
  rep.check = "chi_wave";
  rep.stencil = steps;
  rep.tolerance = spec.tolerance;
  rep.points.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const SamplePoint& p = pts[i];
    const Partials X = scalar_partials(f, p, steps);
    const Real e = m * laplacian(X, p.r) - rho * X.tt;
    const Real n = std::max({m * laplacian_scale(X, p.r), rho * std::abs(X.tt), Real(kFloor)});
    PointResidual& out = rep.points[i];
    out.point = p;
    out.residual = {0.0, 0.0, double(e)};
    out.normalizer = {kFloor, kFloor, double(n)};
    out.relative = double(std::abs(e) / n);
  });
  finalize(rep);
  return rep;
}

namespace {

constexpr int kGridAlong = 10;
constexpr int kGridTheta = 10;
constexpr int kGridTime = 4;

double grid_value(double lo, double hi, int i, int count) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

// Times avoid the zeros of sin(w t) and cover one period / interval.
double grid_time(double span, int i) {
  return span * (static_cast<double>(i) + 0.5) / static_cast<double>(kGridTime);
}

double grid_theta(int j) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(kGridTheta);
}

struct BcAccumulator {
  BcReport report;

  void add(const std::string& name, double scale,
           const std::function<double(double along, double theta, double t)>& diff,
           double lo, double hi, double t_span) {
    BcItem item;
    item.name = name;
    item.scale = scale > 0.0 ? scale : 1.0;
    for (int i = 0; i < kGridAlong; ++i) {
      const double s = grid_value(lo, hi, i, kGridAlong);
      for (int j = 0; j < kGridTheta; ++j) {
        for (int k = 0; k < kGridTime; ++k) {
          item.max_abs = std::max(item.max_abs,
                                  std::abs(diff(s, grid_theta(j), grid_time(t_span, k))));
          ++report.grid_points;
        }
      }
    }
    item.relative = item.max_abs / item.scale;
    report.items.push_back(item);
  }

  BcReport finish(double tolerance) {
    report.tolerance = tolerance;
    report.max_rel_residual = 0.0;
    for (const auto& it : report.items) {
      report.max_rel_residual = std::max(report.max_rel_residual, it.relative);
    }
    report.pass = report.max_rel_residual <= tolerance;
    return report;
  }
};

}  // namespace

BcReport bc_residual(const vibration::VibrationSolution& sol,
                     const vibration::VibrationProblem& prob, double tolerance) {
  const SolutionFamily& fam = sol.family;
  const double A = prob.amplitude;
  const double K = prob.wavenumber();
  const double w = prob.omega;
  const double L = prob.L;
  const double R = prob.R;
  const double period = kTwoPi / w;
  const double s_scale = std::abs(A);
  const double u_scale = std::abs(A) * L / prob.material.mu();

  BcAccumulator acc;
  acc.add("sigma_rr(R,z,t) - A cos(Kz) sin(wt)", s_scale,
          [&](double z, double, double t) {
            return axisym_stress(fam, R, z, t).sigma_rr -
                   A * std::cos(K * z) * std::sin(w * t);
          },
          0.0, L, period);
  acc.add("sigma_rz(R,z,t)", s_scale,
          [&](double z, double, double t) { return axisym_stress(fam, R, z, t).sigma_rz; },
          0.0, L, period);
  for (const double zend : {0.0, L}) {
    const std::string tag = zend == 0.0 ? "0" : "L";
    acc.add("sigma_rz(r," + tag + ",t)", s_scale,
            [&](double r, double, double t) {
              return axisym_stress(fam, r, zend, t).sigma_rz;
            },
            0.0, R, period);
    acc.add("u_z(r," + tag + ",t)", u_scale,
            [&](double r, double th, double t) {
              return displacement(fam, r, th, zend, t).u_z;
            },
            0.0, R, period);
  }
  return acc.finish(tolerance);
}

BcReport bc_residual(const relaxation::RelaxationSolution& sol,
                     const relaxation::RelaxationProblem& prob, double tolerance) {
  using relaxation::EndVariant;
  const SolutionFamily& fam = sol.family;
  const double A = prob.amplitude;
  const double L = prob.L;
  const double R = prob.R;
  const double kl = prob.k / L;
  const double rate = prob.decay_rate();
  const double span = 2.0 * prob.T;
  const double s_scale = std::abs(A);
  const double u_scale = std::abs(A) * L / prob.material.mu();
  const auto decay = [rate](double t) { return std::exp(-rate * t); };
  const relaxation::EndData& ed = prob.end_data;
  const auto value = [](const std::optional<double>& v) { return v.value_or(0.0); };

  BcAccumulator acc;
  acc.add("sigma_rr(R,z,t) - A cosh(kz/L) b^(-ct/T)", s_scale,
          [&](double z, double, double t) {
            return axisym_stress(fam, R, z, t).sigma_rr - A * std::cosh(kl * z) * decay(t);
          },
          0.0, L, span);
  acc.add("sigma_rz(R,z,t)", s_scale,
          [&](double z, double, double t) { return axisym_stress(fam, R, z, t).sigma_rz; },
          0.0, L, span);

  const auto ur_end = [&](double zend, const std::string& tag) {
    acc.add("u_r(r," + tag + ",t)", u_scale,
            [&fam, zend](double r, double th, double t) {
              return displacement(fam, r, th, zend, t).u_r;
            },
            0.0, R, span);
  };
  const auto uz_end = [&](double zend, const std::string& tag, double target) {
    acc.add("u_z(r," + tag + ",t) - " + std::to_string(target) + " b^(-ct/T)", u_scale,
            [&fam, zend, target, decay](double r, double th, double t) {
              return displacement(fam, r, th, zend, t).u_z - target * decay(t);
            },
            0.0, R, span);
  };
  const auto srz_end = [&](double zend, const std::string& tag, double target) {
    acc.add("sigma_rz(r," + tag + ",t) - " + std::to_string(target) + " b^(-ct/T)", s_scale,
            [&fam, zend, target, decay](double r, double, double t) {
              return axisym_stress(fam, r, zend, t).sigma_rz - target * decay(t);
            },
            0.0, R, span);
  };
  const auto szz_end = [&](double zend, const std::string& tag, double target) {
    acc.add("sigma_zz(r," + tag + ",t) - " + std::to_string(target) + " b^(-ct/T)", s_scale,
            [&fam, zend, target, decay](double r, double, double t) {
              return axisym_stress(fam, r, zend, t).sigma_zz - target * decay(t);
            },
            0.0, R, span);
  };

  switch (prob.variant) {
    case EndVariant::DisplacementEnds:
      ur_end(0.0, "0");
      ur_end(L, "L");
      uz_end(0.0, "0", 0.0);
      uz_end(L, "L", value(ed.u1));
      break;
    case EndVariant::StressEnds:
      srz_end(0.0, "0", 0.0);
      srz_end(L, "L", value(ed.p1));
      szz_end(0.0, "0", value(ed.p2));
      szz_end(L, "L", value(ed.p3));
      break;
    case EndVariant::MixedA:
      ur_end(0.0, "0");
      ur_end(L, "L");
      szz_end(0.0, "0", value(ed.p2));
      szz_end(L, "L", value(ed.p3));
      break;
    case EndVariant::MixedB:
      uz_end(0.0, "0", 0.0);
      srz_end(0.0, "0", 0.0);
      uz_end(L, "L", value(ed.u1));
      srz_end(L, "L", value(ed.p1));
      break;
  }
  return acc.finish(tolerance);
}

}  // namespace elastics::verify
