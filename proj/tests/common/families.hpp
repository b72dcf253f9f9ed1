#pragma once

// Random SolutionFamily draws for the residual sweeps. Regimes are picked
// explicitly so every radial kind and both degenerate roots turn up.

#include <cmath>
#include <numbers>
#include <string>

#include "elastics/displacement.hpp"
#include "elastics/verification.hpp"
#include "generators.hpp"

namespace gen {

enum class Regime { General, DegenerateP, DegenerateS, KappaZero };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::General: return "general";
    case Regime::DegenerateP: return "alpha1=0";
    case Regime::DegenerateS: return "alpha2=0";
    case Regime::KappaZero: return "kappa=0";
  }
  return "?";
}

struct FamilyDraw {
  elastics::SolutionFamily family;
  Regime regime;
  double extent;                       // radial extent used for scales
  elastics::verify::SampleDomain domain;
  std::string label;
};

inline elastics::TermCoefficients term(Rng& rng, bool singular) {
  return {rng.uniform(0.3, 1.0) * rng.sign(), singular ? rng.uniform(-1, 1) : 0.0,
          rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

inline FamilyDraw family(Rng& rng, Regime regime, double annulus = 0.3,
                         double cond = 1.0, double extent_lo = 1.0,
                         double extent_hi = 1.5) {
  using namespace elastics;
  const Material mat = material(rng);
  const double kmag = rng.magnitude(0.3, 3.0);
  const double ksign = rng.sign();
  const double shear_ratio = rng.magnitude(0.3, 3.0);  // rho |tau| / (mu |kappa|)
  double kappa = ksign * kmag;
  double tau = rng.sign() * shear_ratio * kmag * mat.mu() / mat.rho();
  switch (regime) {
    case Regime::General: break;
    case Regime::DegenerateP: tau = kappa * mat.p_modulus() / mat.rho(); break;
    case Regime::DegenerateS: tau = kappa * mat.mu() / mat.rho(); break;
    case Regime::KappaZero: kappa = 0.0; break;
  }
  const int n = rng.integer(0, 3);
  const bool singular = rng.coin();
  FamilyCoefficients c;
  c.potentials.phi[0] = term(rng, singular);
  c.potentials.phi[1] = term(rng, singular);
  c.chi.term = term(rng, singular);
  c.chi.e = rng.uniform(-1, 1);
  c.chi.f = rng.uniform(-1, 1);
  c.chi.g = rng.uniform(-1, 1);
  c.chi.h = rng.uniform(-1, 1);
  c.e = rng.uniform(-1, 1);
  c.f = rng.uniform(-1, 1);
  c.g = rng.uniform(-1, 1);
  c.h = rng.uniform(-1, 1);
  // The step rule ties h to max(extent, axial scale); drawing the extent at
  // about that scale, and at most a radial wavelength, keeps the field's
  // variation length commensurate with h.
  const BranchDiagnostics diag0 = kappa == 0.0
                                      ? kappa0_diagnostics(mat, tau)
                                      : alpha_gamma(mat, ModeParams(kappa, tau, 0));
  const double a2 = std::sqrt(std::abs(mat.rho() * tau / mat.mu()));
  double scale = kappa < 0.0   ? 2.0 * std::numbers::pi / std::sqrt(-kappa)
                 : kappa > 0.0 ? 1.0 / std::sqrt(kappa)
                               : 2.0 * std::numbers::pi / a2;
  const double alpha_max = std::max(diag0.alpha1, diag0.alpha2);
  if (alpha_max > 0.0) scale = std::min(scale, 2.0 * std::numbers::pi / alpha_max);
  const double extent = rng.uniform(extent_lo, extent_hi) * scale;
  FamilyDraw d{SolutionFamily(mat, ModeParams(kappa, tau, n), c), regime, extent, {}, {}};
  d.domain = verify::default_domain(d.family, extent);
  // Y, K, ln r and r^-n blow up on the axis; stay on an annulus. The
  // normaliser carries rho |tau| |u| and roughly mu |kappa| |u|, while the
  // n^2 u / r^2 pieces it must absorb grow like n^2 / (k r)^2 with k below;
  // keep that under 1 / cond^2 so truncation is not amplified past 1e-5.
  const double k_bal = std::sqrt(std::max(
      mat.rho() * std::abs(tau) / std::max(mat.mu(), std::abs(mat.lambda() + mat.mu())),
      std::abs(kappa)));
  const double conditioned = n / (cond * k_bal);
  if (singular) {
    d.domain.r_min = std::max(annulus * extent, conditioned);
  } else if (n >= 1) {
    d.domain.r_min = conditioned;
  }
  if (d.domain.r_min > 0.8 * extent) d.domain.r_min = 0.8 * extent;
  const auto& diag = d.family.diag();
  d.label = std::string(to_string(regime)) + " n=" + std::to_string(n) + " kinds=" +
            elastics::to_string(diag.kind1) + "/" + elastics::to_string(diag.kind2) +
            " axial=" + elastics::to_string(d.family.axial().branch) +
            " temporal=" + elastics::to_string(d.family.temporal().branch) +
            (singular ? " singular" : "");
  return d;
}

inline Regime regime_for(int i) { return static_cast<Regime>(i % 4); }

/// Field with time running 1% fast: rho u_tt grows by ~2% while the
/// spatial terms do not, so the balance breaks whatever the components.
inline elastics::verify::VectorField time_dilated(const elastics::SolutionFamily& fam,
                                                  double factor) {
  return [&fam, factor](double r, double th, double z, double t) {
    return elastics::displacement(fam, r, th, z, factor * t);
  };
}

}  // namespace gen
