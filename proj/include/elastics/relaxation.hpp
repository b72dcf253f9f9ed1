#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elastics/core_model.hpp"
#include "elastics/displacement.hpp"

// Forced relaxation of a solid cylinder:
//   sigma_rr(R, z, t) = A cosh(k z / L) b^(-c t / T),  sigma_rz(R, z, t) = 0,
// plus one of four end-condition sets at z = 0, L.

namespace elastics::relaxation {

enum class EndVariant { DisplacementEnds, StressEnds, MixedA, MixedB };

const char* to_string(EndVariant v);
/// Throws InvalidArgument for unknown names.
EndVariant end_variant_from_string(const std::string& name);

struct EndData {
  std::optional<double> u1;
  std::optional<double> p1;
  std::optional<double> p2;
  std::optional<double> p3;
};

struct RelaxationProblem {
  Material material;
  double L = 1.0;
  double R = 1.0;
  double amplitude = 1.0;
  double k = 1.0;
  double b = 2.718281828459045;
  double c = 1.0;
  double T = 1.0;
  EndVariant variant = EndVariant::StressEnds;
  EndData end_data{};

  /// c ln b / T, the decay rate of b^(-c t / T).
  double decay_rate() const;
  /// Throws InvalidArgument.
  void validate() const;
};

inline constexpr double kSurfaceTol = 1e-12;
inline constexpr double kEndDataTol = 1e-9;

struct SolvabilityReport {
  bool solvable = false;
  double lhs = 0.0;  // (lambda + 2 mu) T^2
  double rhs = 0.0;  // rho (c ln b L / k)^2
  double relative_gap = 0.0;
  bool on_surface = false;
  /// (k/L)^2 < rho (c ln b / T)^2 / mu
  bool decay_bound_ok = false;
  std::string message;
};

SolvabilityReport solvability(const RelaxationProblem& prob);

struct CompatibilityItem {
  std::string name;  // "u1", "p1", ...
  double expected = 0.0;
  double given = 0.0;
  double rel_error = 0.0;
  bool ok = false;
};

struct CompatibilityReport {
  EndVariant variant = EndVariant::StressEnds;
  std::vector<CompatibilityItem> items;
  bool compatible = false;
};

/// End data the closed form requires: u1, p1, p2, p3.
EndData expected_end_data(const RelaxationProblem& prob);

/// Report without throwing. Throws InvalidArgument if the variant's data
/// are missing and LambdaZeroExcluded for lambda == 0.
CompatibilityReport table4_report(const RelaxationProblem& prob);

/// As table4_report; throws NotClosedForm off the solvability surface and
/// IncompatibleEndData listing violated conditions.
CompatibilityReport table4_check(const RelaxationProblem& prob);

/// A(T) = A sqrt((lambda + 2 mu) / rho) T / (lambda c ln b).
double amplitude_law(const RelaxationProblem& prob);

struct RelaxationSolution {
  SolvabilityReport solvability;
  CompatibilityReport compatibility;
  /// Amplitude of u_z from the law above.
  double amplitude_T = 0.0;
  /// A L / (lambda k), equal to amplitude_T on the surface.
  double amplitude_closed = 0.0;
  SolutionFamily family;
};

RelaxationSolution solve(const RelaxationProblem& prob);

}  // namespace elastics::relaxation
