#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "elastics/core_model.hpp"

// Separable factors for the three scalar potentials. Every factor stores its
// branch tag and constants and is evaluated on demand together with its
// first two derivatives. The *_ext evaluators repeat the work in long
// double for the finite-difference checks.

namespace elastics {

using Extended = long double;

template <class Real>
struct BasicJet {
  Real v = 0;
  Real d1 = 0;
  Real d2 = 0;
};

template <class Real>
struct BasicRadialJet {
  Real v = 0;
  Real d1 = 0;
  Real d2 = 0;
  Real over_r = 0;  // v / r, with the axis limit for order >= 1
};

using Jet = BasicJet<double>;
using JetX = BasicJet<Extended>;
using RadialJet = BasicRadialJet<double>;
using RadialJetX = BasicRadialJet<Extended>;

/// A Z_n(alpha r) + B W_n(alpha r), or the Laplace pair {1, ln r} /
/// {r^n, r^-n} when kind is LaplaceDegenerate (alpha is then 0).
class RadialFactor {
 public:
  RadialFactor(RadialKind kind, int order, double alpha, double c_first,
               double c_second);

  RadialKind kind() const { return kind_; }
  int order() const { return order_; }
  double alpha() const { return alpha_; }
  double c_first() const { return c_first_; }
  double c_second() const { return c_second_; }

  /// True when the singular member (Y, K, ln r, r^-n) is present.
  bool singular_at_axis() const { return c_second_ != 0.0; }

  /// Throws AxisSingularity at r = 0 when singular_at_axis().
  RadialJet eval(double r) const;
  RadialJetX eval_ext(Extended r) const;

 private:
  template <class Real>
  BasicRadialJet<Real> eval_impl(Real r) const;

  RadialKind kind_;
  int order_;
  double alpha_;
  double c_first_;
  double c_second_;
};

/// C cos(n theta) + D sin(n theta).
struct AngularFactor {
  int order = 0;
  double c_cos = 0.0;
  double c_sin = 0.0;

  Jet eval(double theta) const;
  JetX eval_ext(Extended theta) const;
};

/// One-dimensional factor: Trig  -> c1 cos(w x) + c2 sin(w x)
///                          Exp   -> c1 exp(-w x) + c2 exp(w x)
///                          Linear-> c1 + c2 x
struct Factor1D {
  enum class Branch { Trig, Exp, Linear };

  Branch branch = Branch::Linear;
  double rate = 0.0;
  double c_first = 0.0;
  double c_second = 0.0;

  Jet eval(double x) const;
  JetX eval_ext(Extended x) const;
  /// f'' = eigenvalue() f for every x.
  double eigenvalue() const;
};

using AxialFactor = Factor1D;
using TemporalFactor = Factor1D;

const char* to_string(Factor1D::Branch branch);

struct PotentialTerm {
  double weight = 1.0;
  RadialFactor radial;
  AngularFactor angular;
};

/// Derivatives of a transverse part S(r, theta).
template <class Real>
struct BasicPolarJet {
  Real v = 0;
  Real dr = 0;
  Real drr = 0;
  Real dt = 0;
  Real dtt = 0;
  Real drt = 0;
  Real dt_over_r = 0;  // (1/r) dS/dtheta with the axis limit
};

using PolarJet = BasicPolarJet<double>;
using PolarJetX = BasicPolarJet<Extended>;

class TransversePotential {
 public:
  TransversePotential() = default;
  explicit TransversePotential(std::vector<PotentialTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<PotentialTerm>& terms() const { return terms_; }
  bool singular_at_axis() const;
  PolarJet eval(double r, double theta) const;
  PolarJetX eval_ext(Extended r, Extended theta) const;
  double value(double r, double theta) const { return eval(r, theta).v; }

 private:
  template <class Real>
  BasicPolarJet<Real> eval_impl(Real r, Real theta) const;

  std::vector<PotentialTerm> terms_;
};

/// Constants of one radial/angular product: A, B (radial), C, D (angular).
struct TermCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct PotentialCoefficients {
  TermCoefficients phi[2];
};

/// phi_perp for kappa != 0: sum over s of the two radial pairs (J/Y, I/K or
/// constant/ln r per root).
TransversePotential build_phi_perp(const BranchDiagnostics& diag, int n,
                                   const PotentialCoefficients& coeffs);

/// psi_perp = sum_s gamma_s phi_perp^(s), kappa != 0.
TransversePotential build_psi_perp(const BranchDiagnostics& diag, int n,
                                   const PotentialCoefficients& coeffs);

struct Kappa0Pair {
  BranchDiagnostics diag;
  TransversePotential phi;
  TransversePotential psi;  // phi + W
};

/// kappa == 0: phi uses the s = 1 constants, W the s = 2 constants.
Kappa0Pair build_kappa0_pair(const Material& mat, double tau, int n,
                             const PotentialCoefficients& coeffs);

/// Throws KappaZeroNotAllowed when kappa == 0 and allow_linear is false.
AxialFactor build_axial(double kappa, double e, double f, bool allow_linear);

/// Throws TauZero.
TemporalFactor build_temporal(double tau, double g, double h);

struct ChiFamily {
  PotentialTerm transverse;
  AxialFactor axial;
  TemporalFactor temporal;
};

struct ChiCoefficients {
  TermCoefficients term;
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

/// chi with eta_z = kappa, eta_t = rho tau / mu: order-n radial part in
/// alpha_2 (diag from alpha_gamma or kappa0_diagnostics).
ChiFamily build_chi(const BranchDiagnostics& diag, const ModeParams& mode,
                    const ChiCoefficients& coeffs);

/// Power-series radial solution of r^2 R'' + r R' - (eta_r r^2 + eta_theta) R
/// = 0 for orders the Bessel kernels do not cover: non-integer real order
/// sqrt(eta_theta), or imaginary order when eta_theta < 0.
class FrobeniusRadial {
 public:
  FrobeniusRadial(double eta_r, double eta_theta, double c_first,
                  double c_second);

  double eta_r() const { return eta_r_; }
  double eta_theta() const { return eta_theta_; }
  double c_first() const { return c_first_; }
  double c_second() const { return c_second_; }

  /// r > 0 only.
  RadialJet eval(double r) const;
  RadialJetX eval_ext(Extended r) const;

 private:
  double eta_r_;
  double eta_theta_;
  double c_first_;
  double c_second_;
};

struct SovCoefficients {
  double a = 0.0;  // radial
  double b = 0.0;
  double c = 0.0;  // angular
  double d = 0.0;
  double e = 0.0;  // axial
  double f = 0.0;
  double g = 0.0;  // temporal
  double h = 0.0;
};

/// Full separation-of-variables solution of mu lap chi = rho chi_tt.
class SovChi {
 public:
  const Material& material() const { return material_; }
  double eta_t() const { return eta_t_; }
  double eta_z() const { return eta_z_; }
  double eta_r() const { return eta_t_ - eta_z_; }
  double eta_theta() const { return eta_theta_; }

  /// Angular part is 2 pi periodic (eta_theta = n^2, or eta_theta = 0 with
  /// a vanishing linear coefficient).
  bool periodic() const { return periodic_; }
  /// Order n when periodic and eta_theta = n^2.
  std::optional<int> integer_order() const { return integer_order_; }

  const std::variant<RadialFactor, FrobeniusRadial>& radial() const {
    return radial_;
  }
  const Factor1D& angular() const { return angular_; }
  const Factor1D& axial() const { return axial_; }
  const Factor1D& temporal() const { return temporal_; }

  double value(double r, double theta, double z, double t) const;
  Extended value_ext(Extended r, Extended theta, Extended z, Extended t) const;
  RadialJet radial_jet(double r) const;

 private:
  friend SovChi sov_chi(const Material&, double, double, double,
                        const SovCoefficients&, bool);
  SovChi(const Material& mat) : material_(mat) {}

  Material material_;
  double eta_t_ = 0.0;
  double eta_z_ = 0.0;
  double eta_theta_ = 0.0;
  bool periodic_ = false;
  std::optional<int> integer_order_;
  std::variant<RadialFactor, FrobeniusRadial> radial_ =
      RadialFactor(RadialKind::LaplaceDegenerate, 0, 0.0, 0.0, 0.0);
  Factor1D angular_;
  Factor1D axial_;
  Factor1D temporal_;
};

/// Tolerance on sqrt(eta_theta) being an integer.
inline constexpr double kIntegerOrderTol = 1e-9;

/// require_periodic throws NonIntegerOrder unless eta_theta is n^2.
SovChi sov_chi(const Material& mat, double eta_t, double eta_z,
               double eta_theta, const SovCoefficients& coeffs,
               bool require_periodic = false);

}  // namespace elastics
