#pragma once

#include <optional>

#include "elastics/core_model.hpp"
#include "elastics/potentials.hpp"

// Complete Buchwald solutions u = grad Phi + curl(chi z) + (Psi_z - Phi_z) z
// and the fields derived from them.

namespace elastics {

enum class FamilyBranch { GeneralKappa, KappaZero };

const char* to_string(FamilyBranch branch);

/// Constants of a family member. Phi and Psi share the axial constants
/// (e, f) and temporal constants (g, h); chi carries its own.
struct FamilyCoefficients {
  PotentialCoefficients potentials;
  ChiCoefficients chi;
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

template <class Real>
struct BasicDisplacement {
  Real u_r = 0;
  Real u_theta = 0;
  Real u_z = 0;
};

using Displacement = BasicDisplacement<double>;
using DisplacementX = BasicDisplacement<Extended>;

struct AxisymStress {
  double sigma_rr = 0.0;
  double sigma_thth = 0.0;
  double sigma_zz = 0.0;
  double sigma_rz = 0.0;
};

struct AxisymStrain {
  double eps_rr = 0.0;
  double eps_thth = 0.0;
  double eps_zz = 0.0;
  double vol_strain = 0.0;
};

struct FieldSample {
  Displacement u;
  std::optional<AxisymStress> stress;  // n = 0 only
  std::optional<AxisymStrain> strain;  // n = 0 only
};

class SolutionFamily {
 public:
  SolutionFamily(const Material& mat, const ModeParams& mode,
                 const FamilyCoefficients& coeffs);

  /// Swap in a separation-of-variables chi. Non-periodic angular parts are
  /// rejected (NonIntegerOrder / InvalidArgument).
  void replace_chi(const SovChi& chi);

  const Material& material() const { return material_; }
  const ModeParams& mode() const { return mode_; }
  const BranchDiagnostics& diag() const { return diag_; }
  FamilyBranch branch() const { return branch_; }
  const FamilyCoefficients& coefficients() const { return coeffs_; }

  const TransversePotential& phi_perp() const { return phi_; }
  const TransversePotential& psi_perp() const { return psi_; }
  const ChiFamily& chi_parts() const { return chi_; }
  const TransversePotential& chi_perp() const { return chi_perp_; }
  const AxialFactor& axial() const { return axial_; }
  const TemporalFactor& temporal() const { return temporal_; }

  bool finite_at_axis() const;
  /// Every angular part (including chi) has order 0.
  bool axisymmetric() const;

  double phi(double r, double theta, double z, double t) const;
  double psi(double r, double theta, double z, double t) const;
  double chi(double r, double theta, double z, double t) const;
  Extended phi_ext(Extended r, Extended theta, Extended z, Extended t) const;
  Extended psi_ext(Extended r, Extended theta, Extended z, Extended t) const;
  Extended chi_ext(Extended r, Extended theta, Extended z, Extended t) const;

 private:
  Material material_;
  ModeParams mode_;
  FamilyCoefficients coeffs_;
  BranchDiagnostics diag_;
  FamilyBranch branch_;
  TransversePotential phi_;
  TransversePotential psi_;
  ChiFamily chi_;
  TransversePotential chi_perp_;
  AxialFactor axial_;
  TemporalFactor temporal_;
};

/// Throws AxisSingularity at r = 0 when singular terms are present.
Displacement displacement(const SolutionFamily& fam, double r, double theta,
                          double z, double t);
DisplacementX displacement_ext(const SolutionFamily& fam, Extended r,
                               Extended theta, Extended z, Extended t);

/// Throws NotAxisymmetric unless the family is axisymmetric.
AxisymStress axisym_stress(const SolutionFamily& fam, double r, double z,
                           double t);

/// At r = 0 eps_thth takes its limit d u_r / d r.
AxisymStrain axisym_strain(const SolutionFamily& fam, double r, double z,
                           double t);

/// Displacement plus stress and strain when the family is axisymmetric.
FieldSample sample(const SolutionFamily& fam, double r, double theta,
                   double z, double t);

}  // namespace elastics
