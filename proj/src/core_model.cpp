#include "elastics/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastics/errors.hpp"
#include "elastics/specfun.hpp"

namespace elastics {

Material::Material(double lambda, double mu, double rho)
    : lambda_(lambda), mu_(mu), rho_(rho) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(rho)) {
    throw InvalidArgument("material constants must be finite");
  }
  if (mu <= 0.0) throw InvalidArgument("mu must be positive");
  if (rho <= 0.0) throw InvalidArgument("rho must be positive");
  if (lambda + 2.0 * mu <= 0.0) {
    throw InvalidArgument("lambda + 2 mu must be positive");
  }
}

double Material::longitudinal_speed() const {
  return std::sqrt(p_modulus() / rho_);
}

double Material::shear_speed() const { return std::sqrt(mu_ / rho_); }

ModeParams::ModeParams(double kappa, double tau, int n)
    : kappa_(kappa), tau_(tau), n_(n) {
  if (!std::isfinite(kappa) || !std::isfinite(tau)) {
    throw InvalidArgument("kappa and tau must be finite");
  }
  if (tau == 0.0) throw TauZero();
  // Radial jets need orders up to n + 2.
  if (n < 0 || n > specfun::kMaxOrder - 2) {
    throw InvalidArgument("angular index n must lie in [0, " +
                          std::to_string(specfun::kMaxOrder - 2) + "]");
  }
}

const char* to_string(RadialKind kind) {
  switch (kind) {
    case RadialKind::Oscillatory:
      return "Oscillatory";
    case RadialKind::Modified:
      return "Modified";
    case RadialKind::LaplaceDegenerate:
      return "LaplaceDegenerate";
  }
  return "?";
}

QuarticCoefficients quartic_coefficients(const Material& mat,
                                         const ModeParams& mode) {
  const double l = mat.lambda();
  const double m = mat.mu();
  const double rho_tau = mat.rho() * mode.tau();
  const double k = mode.kappa();
  return {m * (l + 2.0 * m), 2.0 * m * (l + 2.0 * m) * k - (l + 3.0 * m) * rho_tau,
          (m * k - rho_tau) * ((l + 2.0 * m) * k - rho_tau)};
}

HelmholtzRoots helmholtz_roots(const Material& mat, const ModeParams& mode) {
  const double rho_tau = mat.rho() * mode.tau();
  return {-(mode.kappa() - rho_tau / mat.p_modulus()),
          -(mode.kappa() - rho_tau / mat.mu())};
}

RadialKind classify_radial(double kappa, double threshold) {
  const double band =
      kDegeneracyTol * std::max(std::abs(kappa), std::abs(threshold));
  const double gap = kappa - threshold;
  if (std::abs(gap) <= band) return RadialKind::LaplaceDegenerate;
  return gap > 0.0 ? RadialKind::Oscillatory : RadialKind::Modified;
}

namespace {

double alpha_for(RadialKind kind, double gap) {
  return kind == RadialKind::LaplaceDegenerate ? 0.0 : std::sqrt(std::abs(gap));
}

}  // namespace

BranchDiagnostics alpha_gamma(const Material& mat, const ModeParams& mode) {
  if (mode.kappa() == 0.0) throw KappaZero();
  const double k = mode.kappa();
  const double t1 = mat.rho() * mode.tau() / mat.p_modulus();
  const double t2 = mat.rho() * mode.tau() / mat.mu();

  BranchDiagnostics d;
  const HelmholtzRoots roots = helmholtz_roots(mat, mode);
  const QuarticCoefficients q = quartic_coefficients(mat, mode);
  d.lambda_minus = roots.minus;
  d.lambda_plus = roots.plus;
  d.a2 = q.a2;
  d.a1 = q.a1;
  d.a0 = q.a0;
  d.kind1 = classify_radial(k, t1);
  d.kind2 = classify_radial(k, t2);
  d.alpha1 = alpha_for(d.kind1, k - t1);
  d.alpha2 = alpha_for(d.kind2, k - t2);
  d.gamma1 = 1.0;
  d.gamma2 = d.kind2 == RadialKind::LaplaceDegenerate ? 0.0 : (k - t2) / k;
  d.kappa_zero = false;
  d.lambda_zero = mat.lambda_is_zero();
  return d;
}

BranchDiagnostics kappa0_diagnostics(const Material& mat, double tau) {
  if (tau == 0.0) throw TauZero();
  const double rho_tau = mat.rho() * tau;
  BranchDiagnostics d;
  const ModeParams mode(0.0, tau, 0);
  const HelmholtzRoots roots = helmholtz_roots(mat, mode);
  const QuarticCoefficients q = quartic_coefficients(mat, mode);
  d.lambda_minus = roots.minus;
  d.lambda_plus = roots.plus;
  d.a2 = q.a2;
  d.a1 = q.a1;
  d.a0 = q.a0;
  d.alpha1 = std::sqrt(std::abs(rho_tau / mat.p_modulus()));
  d.alpha2 = std::sqrt(mat.rho() * std::abs(tau) / mat.mu());
  // lambda + 2 mu > 0, so both columns switch on the sign of tau.
  d.kind1 = tau < 0.0 ? RadialKind::Oscillatory : RadialKind::Modified;
  d.kind2 = d.kind1;
  d.gamma1 = 1.0;
  d.gamma2 = 1.0;
  d.kappa_zero = true;
  d.lambda_zero = mat.lambda_is_zero();
  return d;
}

}  // namespace elastics
