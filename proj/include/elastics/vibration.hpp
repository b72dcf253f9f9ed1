#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elastics/core_model.hpp"
#include "elastics/displacement.hpp"

// Forced vibration of a solid cylinder 0 <= z <= L, r <= R:
//   sigma_rr(R, z, t) = A cos(K z) sin(w t),  sigma_rz(R, z, t) = 0,
//   sigma_rz = u_z = 0 on both ends,          K = 2 k pi / L.

namespace elastics::vibration {

struct VibrationProblem {
  Material material;
  double L = 1.0;
  double R = 1.0;
  double amplitude = 1.0;
  int k = 1;
  double omega = 1.0;
  /// The unforced variant (amplitude must then be exactly 0).
  bool force_free = false;

  double wavenumber() const;  // K
  /// Throws InvalidArgument.
  void validate() const;
};

enum class CaseTag { Case1, Case2, Case3, Case4i, Case4ii, Case5, OutsideTable };

const char* to_string(CaseTag tag);

/// Relative band for the wavenumber-threshold equalities.
inline constexpr double kCaseTol = 1e-12;
/// Absolute band on J_1(alpha_2 R) / max |J_1| over [0, alpha_2 R].
inline constexpr double kJ1ZeroTol = 1e-9;

struct CaseClass {
  CaseTag tag = CaseTag::OutsideTable;
  double wavenumber_sq = 0.0;  // K^2
  double threshold_p = 0.0;    // rho w^2 / (lambda + 2 mu)
  double threshold_s = 0.0;    // rho w^2 / mu
  /// lambda > -mu, so threshold_p < threshold_s and the five rows are ordered.
  bool ladder_valid = true;
  /// Case 4 only: normalised J_1(alpha_2 R) and the nearest zero index.
  std::optional<double> j1_normalized;
  std::optional<int> j1_zero_index;
  std::vector<std::string> warnings;
};

struct BoundaryDiagnostics {
  double determinant = 0.0;
  double condition_number = 0.0;
  double residual_rr = 0.0;  // |sigma_rr equation| / |A|
  double residual_rz = 0.0;  // |sigma_rz equation| / |A|
  /// Closed form against the direct 2x2 solve (NaN when not applicable).
  double closed_form_mismatch = 0.0;
  double direct_a_bar_1 = 0.0;
  double direct_a_bar_2 = 0.0;
};

struct VibrationSolution {
  CaseClass case_class;
  double a_bar_1 = 0.0;
  double a_bar_2 = 0.0;
  std::optional<double> free_param_C;
  SolutionFamily family;
  BoundaryDiagnostics diagnostics;
};

struct SolveOptions {
  std::optional<double> case4_C;
  /// Use C = R^2 when Case 4(ii) arises and no C was given.
  bool allow_default_C = true;
};

CaseClass classify(const VibrationProblem& prob);

VibrationSolution solve_case1(const VibrationProblem& prob);
/// Throws NoSolution unless the problem is force-free (then u = 0).
VibrationSolution solve_case2(const VibrationProblem& prob);
VibrationSolution solve_case3(const VibrationProblem& prob);
VibrationSolution solve_case4(const VibrationProblem& prob,
                              const SolveOptions& opts = {});
VibrationSolution solve_case5(const VibrationProblem& prob);

VibrationSolution solve(const VibrationProblem& prob,
                        const SolveOptions& opts = {});

/// Coefficients of a_bar_s in the two curved-surface equations for a unit
/// radial factor of the given kind; row 2 is divided by -mu K.
struct BoundaryColumn {
  double rr = 0.0;
  double rz = 0.0;
};

BoundaryColumn boundary_column(const Material& mat, RadialKind kind,
                               double alpha, double gamma, double K, double R);

/// Family for given a_bar values: Phi = sum a_bar_s f_s(r) cos(Kz) sin(wt).
SolutionFamily vibration_family(const VibrationProblem& prob, double a_bar_1,
                                double a_bar_2);

}  // namespace elastics::vibration
