#pragma once

// Materials, mode parameters and the characteristic-root machinery that
// decides which radial functions a solution family uses.

namespace elastics {

/// Relative band inside which kappa is considered equal to a threshold.
inline constexpr double kDegeneracyTol = 1e-12;

class Material {
 public:
  /// Throws InvalidArgument unless mu > 0, rho > 0 and lambda + 2 mu > 0.
  Material(double lambda, double mu, double rho);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double rho() const { return rho_; }

  double p_modulus() const { return lambda_ + 2.0 * mu_; }
  double longitudinal_speed() const;
  double shear_speed() const;
  /// lambda == 0 is admitted here but several solvers refuse it.
  bool lambda_is_zero() const { return lambda_ == 0.0; }

 private:
  double lambda_;
  double mu_;
  double rho_;
};

class ModeParams {
 public:
  /// Throws TauZero for tau == 0 and InvalidArgument for n < 0 or n > 62.
  ModeParams(double kappa, double tau, int n);

  double kappa() const { return kappa_; }
  double tau() const { return tau_; }
  int n() const { return n_; }

 private:
  double kappa_;
  double tau_;
  int n_;
};

enum class RadialKind { Oscillatory, Modified, LaplaceDegenerate };

const char* to_string(RadialKind kind);

struct QuarticCoefficients {
  double a2;
  double a1;
  double a0;
};

struct HelmholtzRoots {
  double minus;  // -(kappa - rho tau / (lambda + 2 mu))
  double plus;   // -(kappa - rho tau / mu)
};

struct BranchDiagnostics {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double gamma1 = 1.0;
  // For kappa == 0 this is the weight of the W term in psi (always 1).
  double gamma2 = 1.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
  RadialKind kind1 = RadialKind::Oscillatory;
  RadialKind kind2 = RadialKind::Oscillatory;
  bool kappa_zero = false;
  bool lambda_zero = false;
};

QuarticCoefficients quartic_coefficients(const Material& mat,
                                         const ModeParams& mode);

HelmholtzRoots helmholtz_roots(const Material& mat, const ModeParams& mode);

/// Kind for comparing kappa against a threshold rho tau / c^2:
/// kappa > threshold -> Oscillatory, below -> Modified, equal within the
/// relative band -> LaplaceDegenerate.
RadialKind classify_radial(double kappa, double threshold);

/// General branch (kappa != 0). Throws KappaZero otherwise.
BranchDiagnostics alpha_gamma(const Material& mat, const ModeParams& mode);

/// Decoupled branch used when kappa == 0.
BranchDiagnostics kappa0_diagnostics(const Material& mat, double tau);

}  // namespace elastics
