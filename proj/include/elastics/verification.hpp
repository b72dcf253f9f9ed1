#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elastics/core_model.hpp"
#include "elastics/displacement.hpp"
#include "elastics/potentials.hpp"
#include "elastics/relaxation.hpp"
#include "elastics/vibration.hpp"

// Finite-difference checks that know nothing about how a field was built:
// second-order central differences on (r, theta, z, t).

namespace elastics::verify {

struct SamplePoint {
  double r = 0.0;
  double theta = 0.0;
  double z = 0.0;
  double t = 0.0;
};

/// Box the field is declared on. theta is periodic and never bounds the
/// stencil.
struct SampleDomain {
  double r_min = 0.0;
  double r_max = 1.0;
  double z_min = 0.0;
  double z_max = 1.0;
  double t_min = 0.0;
  double t_max = 1.0;
};

struct StencilSteps {
  double hr = 1e-4;
  double htheta = 1e-4;
  double hz = 1e-4;
  double ht = 1e-4;
};

struct SampleSpec {
  SampleDomain domain;
  int count = 50;
  std::uint64_t seed = 20240601;
  double tolerance = 1e-5;
  /// h = step_factor * characteristic scale unless steps is set.
  double step_factor = 1e-4;
  std::optional<StencilSteps> steps;
  /// Explicit points replace the random draw (still checked against the
  /// domain).
  std::vector<SamplePoint> points;
};

struct PointResidual {
  SamplePoint point;
  std::array<double, 3> residual{};
  std::array<double, 3> normalizer{};
  double relative = 0.0;
};

struct ResidualReport {
  std::string check;  // "navier_lame", "buchwald", "chi_wave"
  double max_rel_residual = 0.0;
  std::vector<PointResidual> points;
  StencilSteps stencil;
  double tolerance = 0.0;
  bool pass = false;
  /// navier_lame only: largest gap between the grad-div/curl-curl form and
  /// the vector-Laplacian form, over the normalizer.
  double form_mismatch = 0.0;
};

/// Internal agreement demanded between the two vector forms.
inline constexpr double kFormMismatchTol = 1e-8;

using VectorField =
    std::function<Displacement(double r, double theta, double z, double t)>;
/// Same in long double; the family overloads evaluate through this so the
/// second differences are not swamped by double rounding near nodal
/// surfaces of a separated factor.
using VectorFieldX =
    std::function<DisplacementX(Extended r, Extended theta, Extended z, Extended t)>;

/// Characteristic scales of a mode: spatial = max(radial extent, axial
/// scale), axial scale = 2 pi / sqrt|kappa| (kappa < 0), 1 / sqrt(kappa)
/// (kappa > 0), else 1; temporal likewise from tau. The theta step is
/// factor itself (radians).
double spatial_scale(double kappa, double radial_extent);
double temporal_scale(double tau);
StencilSteps default_steps(double kappa, double tau, double radial_extent,
                           double factor = 1e-4);

/// Domain r in [0, extent], z over one axial scale, t over one temporal
/// scale.
SampleDomain default_domain(const SolutionFamily& fam, double radial_extent);

/// Points used for a spec: the explicit list or a seeded uniform draw with
/// r >= 0.05 r_max and every stencil node inside the domain. Throws
/// DomainTooSmall.
std::vector<SamplePoint> sample_points(const SampleSpec& spec,
                                       const StencilSteps& steps);

/// mu lap u + (lambda + mu) grad div u - rho u_tt, with lap u from the
/// curl-curl identity; the vector-Laplacian form is evaluated alongside as a
/// cross-check.
ResidualReport nl_residual(const Material& mat, const VectorField& u,
                           const SampleSpec& spec, const StencilSteps& steps);
ResidualReport nl_residual(const Material& mat, const VectorFieldX& u,
                           const SampleSpec& spec, const StencilSteps& steps);
ResidualReport nl_residual(const SolutionFamily& fam, const SampleSpec& spec,
                           double radial_extent);
ResidualReport nl_residual(const vibration::VibrationSolution& sol,
                           const vibration::VibrationProblem& prob,
                           const SampleSpec& spec);
ResidualReport nl_residual(const relaxation::RelaxationSolution& sol,
                           const relaxation::RelaxationProblem& prob,
                           const SampleSpec& spec);

/// Residuals of the three scalar equations for the stored Phi, Psi, chi.
ResidualReport buchwald_system_residual(const SolutionFamily& fam,
                                        const SampleSpec& spec,
                                        double radial_extent);

/// mu lap chi - rho chi_tt for a separated chi.
ResidualReport chi_residual(const SovChi& chi, const SampleSpec& spec,
                            double radial_extent);
StencilSteps default_steps(const SovChi& chi, double radial_extent,
                           double factor = 1e-4);

struct BcItem {
  std::string name;
  double max_abs = 0.0;   // largest |left - right|
  double scale = 1.0;     // normaliser
  double relative = 0.0;  // max_abs / scale
};

struct BcReport {
  std::vector<BcItem> items;
  double max_rel_residual = 0.0;
  double tolerance = 1e-9;
  bool pass = false;
  int grid_points = 0;
};

inline constexpr double kBcTol = 1e-9;

/// Four vibration conditions on a 10 (r or z) x 10 theta x 4 t grid;
/// stresses normalised by |A|, displacements by |A| L / mu.
BcReport bc_residual(const vibration::VibrationSolution& sol,
                     const vibration::VibrationProblem& prob,
                     double tolerance = kBcTol);

/// Curved-surface conditions plus the variant's end conditions, using the
/// end data carried by the problem.
BcReport bc_residual(const relaxation::RelaxationSolution& sol,
                     const relaxation::RelaxationProblem& prob,
                     double tolerance = kBcTol);

}  // namespace elastics::verify
