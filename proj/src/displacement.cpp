#include "elastics/displacement.hpp"

#include <cmath>
#include <variant>

#include "elastics/errors.hpp"

namespace elastics {

const char* to_string(FamilyBranch branch) {
  return branch == FamilyBranch::GeneralKappa ? "GeneralKappa" : "KappaZero";
}

namespace {

BranchDiagnostics diagnostics_for(const Material& mat, const ModeParams& mode) {
  return mode.kappa() == 0.0 ? kappa0_diagnostics(mat, mode.tau())
                             : alpha_gamma(mat, mode);
}

}  // namespace

SolutionFamily::SolutionFamily(const Material& mat, const ModeParams& mode,
                               const FamilyCoefficients& coeffs)
    : material_(mat),
      mode_(mode),
      coeffs_(coeffs),
      diag_(diagnostics_for(mat, mode)),
      branch_(mode.kappa() == 0.0 ? FamilyBranch::KappaZero
                                  : FamilyBranch::GeneralKappa),
      chi_(build_chi(diag_, mode, coeffs.chi)),
      chi_perp_({chi_.transverse}),
      axial_(build_axial(mode.kappa(), coeffs.e, coeffs.f,
                         mode.kappa() == 0.0)),
      temporal_(build_temporal(mode.tau(), coeffs.g, coeffs.h)) {
  if (branch_ == FamilyBranch::KappaZero) {
    Kappa0Pair pair =
        build_kappa0_pair(mat, mode.tau(), mode.n(), coeffs.potentials);
    phi_ = std::move(pair.phi);
    psi_ = std::move(pair.psi);
  } else {
    phi_ = build_phi_perp(diag_, mode.n(), coeffs.potentials);
    psi_ = build_psi_perp(diag_, mode.n(), coeffs.potentials);
  }
}

void SolutionFamily::replace_chi(const SovChi& chi) {
  if (!chi.periodic()) {
    if (chi.eta_theta() == 0.0) {
      throw InvalidArgument(
          "chi angular part C + D theta is not periodic unless D = 0");
    }
    throw NonIntegerOrder(chi.eta_theta());
  }
  const int order = *chi.integer_order();
  const auto& radial = std::get<RadialFactor>(chi.radial());
  const Factor1D& ang = chi.angular();
  chi_.transverse = PotentialTerm{1.0, radial,
                                  AngularFactor{order, ang.c_first, ang.c_second}};
  chi_.axial = chi.axial();
  chi_.temporal = chi.temporal();
  chi_perp_ = TransversePotential({chi_.transverse});
}

bool SolutionFamily::finite_at_axis() const {
  return !phi_.singular_at_axis() && !psi_.singular_at_axis() &&
         !chi_perp_.singular_at_axis();
}

bool SolutionFamily::axisymmetric() const {
  return mode_.n() == 0 && chi_.transverse.angular.order == 0;
}

double SolutionFamily::phi(double r, double theta, double z, double t) const {
  return phi_.value(r, theta) * axial_.eval(z).v * temporal_.eval(t).v;
}

double SolutionFamily::psi(double r, double theta, double z, double t) const {
  return psi_.value(r, theta) * axial_.eval(z).v * temporal_.eval(t).v;
}

double SolutionFamily::chi(double r, double theta, double z, double t) const {
  return chi_perp_.value(r, theta) *
         chi_.axial.eval(z).v * chi_.temporal.eval(t).v;
}

Extended SolutionFamily::phi_ext(Extended r, Extended theta, Extended z,
                                 Extended t) const {
  return phi_.eval_ext(r, theta).v * axial_.eval_ext(z).v * temporal_.eval_ext(t).v;
}

Extended SolutionFamily::psi_ext(Extended r, Extended theta, Extended z,
                                 Extended t) const {
  return psi_.eval_ext(r, theta).v * axial_.eval_ext(z).v * temporal_.eval_ext(t).v;
}

Extended SolutionFamily::chi_ext(Extended r, Extended theta, Extended z,
                                 Extended t) const {
  return chi_perp_.eval_ext(r, theta).v * chi_.axial.eval_ext(z).v *
         chi_.temporal.eval_ext(t).v;
}

Displacement displacement(const SolutionFamily& fam, double r, double theta,
                          double z, double t) {
  const PolarJet sp = fam.phi_perp().eval(r, theta);
  const PolarJet ss = fam.psi_perp().eval(r, theta);
  const PolarJet sc = fam.chi_perp().eval(r, theta);
  const Jet zj = fam.axial().eval(z);
  const double tt = fam.temporal().eval(t).v;
  const double chi_zt =
      fam.chi_parts().axial.eval(z).v * fam.chi_parts().temporal.eval(t).v;

  Displacement u;
  u.u_r = sp.dr * zj.v * tt + sc.dt_over_r * chi_zt;
  u.u_theta = sp.dt_over_r * zj.v * tt - sc.dr * chi_zt;
  u.u_z = ss.v * zj.d1 * tt;
  return u;
}

DisplacementX displacement_ext(const SolutionFamily& fam, Extended r,
                               Extended theta, Extended z, Extended t) {
  const PolarJetX sp = fam.phi_perp().eval_ext(r, theta);
  const PolarJetX ss = fam.psi_perp().eval_ext(r, theta);
  const PolarJetX sc = fam.chi_perp().eval_ext(r, theta);
  const JetX zj = fam.axial().eval_ext(z);
  const Extended tt = fam.temporal().eval_ext(t).v;
  const Extended chi_zt =
      fam.chi_parts().axial.eval_ext(z).v * fam.chi_parts().temporal.eval_ext(t).v;

  DisplacementX u;
  u.u_r = sp.dr * zj.v * tt + sc.dt_over_r * chi_zt;
  u.u_theta = sp.dt_over_r * zj.v * tt - sc.dr * chi_zt;
  u.u_z = ss.v * zj.d1 * tt;
  return u;
}

namespace {

struct AxisymGradients {
  double ur = 0.0;
  double ur_r = 0.0;
  double ur_over_r = 0.0;
  double ur_z = 0.0;
  double uz_r = 0.0;
  double uz_z = 0.0;
};

AxisymGradients axisym_gradients(const SolutionFamily& fam, double r,
                                 double z, double t) {
  if (!fam.axisymmetric()) throw NotAxisymmetric();
  const PolarJet sp = fam.phi_perp().eval(r, 0.0);
  const PolarJet ss = fam.psi_perp().eval(r, 0.0);
  const Jet zj = fam.axial().eval(z);
  const double tt = fam.temporal().eval(t).v;
  AxisymGradients g;
  g.ur = sp.dr * zj.v * tt;
  g.ur_r = sp.drr * zj.v * tt;
  // u_r / r -> d u_r / d r on the axis.
  g.ur_over_r = r == 0.0 ? g.ur_r : g.ur / r;
  g.ur_z = sp.dr * zj.d1 * tt;
  g.uz_r = ss.dr * zj.d1 * tt;
  g.uz_z = ss.v * zj.d2 * tt;
  return g;
}

}  // namespace

AxisymStress axisym_stress(const SolutionFamily& fam, double r, double z,
                           double t) {
  const AxisymGradients g = axisym_gradients(fam, r, z, t);
  const double l = fam.material().lambda();
  const double m = fam.material().mu();
  AxisymStress s;
  s.sigma_rr = (l + 2.0 * m) * g.ur_r + l * g.ur_over_r + l * g.uz_z;
  s.sigma_thth = l * g.ur_r + (l + 2.0 * m) * g.ur_over_r + l * g.uz_z;
  s.sigma_zz = l * g.ur_r + l * g.ur_over_r + (l + 2.0 * m) * g.uz_z;
  s.sigma_rz = m * (g.ur_z + g.uz_r);
  return s;
}

AxisymStrain axisym_strain(const SolutionFamily& fam, double r, double z,
                           double t) {
  const AxisymGradients g = axisym_gradients(fam, r, z, t);
  AxisymStrain e;
  e.eps_rr = g.ur_r;
  e.eps_thth = g.ur_over_r;
  e.eps_zz = g.uz_z;
  e.vol_strain = e.eps_rr + e.eps_thth + e.eps_zz;
  return e;
}

FieldSample sample(const SolutionFamily& fam, double r, double theta,
                   double z, double t) {
  FieldSample s;
  s.u = displacement(fam, r, theta, z, t);
  if (fam.axisymmetric()) {
    s.stress = axisym_stress(fam, r, z, t);
    s.strain = axisym_strain(fam, r, z, t);
  }
  return s;
}

}  // namespace elastics
