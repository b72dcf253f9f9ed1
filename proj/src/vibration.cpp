#include "elastics/vibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "elastics/errors.hpp"
#include "elastics/specfun.hpp"

namespace elastics::vibration {

using specfun::BesselKind;
using specfun::bessel;

double VibrationProblem::wavenumber() const {
  return 2.0 * static_cast<double>(k) * std::numbers::pi / L;
}

void VibrationProblem::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidArgument("L must be positive");
  if (!(R > 0.0) || !std::isfinite(R)) throw InvalidArgument("R must be positive");
  if (k < 1) throw InvalidArgument("k must be a positive integer");
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("omega must be positive");
  }
  if (!std::isfinite(amplitude)) throw InvalidArgument("amplitude must be finite");
  if (force_free && amplitude != 0.0) {
    throw InvalidArgument("force-free variant requires amplitude 0");
  }
  if (!force_free && amplitude == 0.0) {
    throw InvalidArgument(
        "amplitude must be nonzero (set force_free for the unforced variant)");
  }
}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4i: return "Case4i";
    case CaseTag::Case4ii: return "Case4ii";
    case CaseTag::Case5: return "Case5";
    case CaseTag::OutsideTable: return "OutsideTable";
  }
  return "?";
}

namespace {

int compare(double a, double b) {
  const double band = kCaseTol * std::max(std::abs(a), std::abs(b));
  if (std::abs(a - b) <= band) return 0;
  return a > b ? 1 : -1;
}

// First maximum of J_1 and its value.
constexpr double kJ1ArgMax = 1.8411837813406593;
constexpr double kJ1Max = 0.58186522428159;

double j1_normalized(double x) {
  const double peak = x >= kJ1ArgMax ? kJ1Max : bessel(BesselKind::J, 1, x);
  if (peak == 0.0) return 1.0;
  return std::abs(bessel(BesselKind::J, 1, x)) / peak;
}

int nearest_j1_zero(double x) {
  int best = 1;
  double gap = std::numeric_limits<double>::infinity();
  const int guess = std::max(1, static_cast<int>(std::lround(x / std::numbers::pi - 0.25)));
  for (int m = std::max(1, guess - 1); m <= std::min(100, guess + 1); ++m) {
    const double d = std::abs(specfun::j1_zero(m) - x);
    if (d < gap) {
      gap = d;
      best = m;
    }
  }
  return best;
}

ModeParams vibration_mode(const VibrationProblem& prob) {
  const double K = prob.wavenumber();
  return ModeParams(-K * K, -prob.omega * prob.omega, 0);
}

struct Matrix2 {
  std::array<std::array<double, 2>, 2> m{};
  double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  double frob_sq() const {
    return m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] +
           m[1][1] * m[1][1];
  }
};

// Rows scaled to unit max-norm so the singularity test does not depend on
// the units of the two equations.
Matrix2 equilibrated(const Matrix2& a) {
  Matrix2 e = a;
  for (auto& row : e.m) {
    const double s = std::max(std::abs(row[0]), std::abs(row[1]));
    if (s > 0.0) {
      row[0] /= s;
      row[1] /= s;
    }
  }
  return e;
}

double condition_number(const Matrix2& a) {
  const double f2 = a.frob_sq();
  const double d = std::abs(a.det());
  const double disc = std::sqrt(std::max(0.0, f2 * f2 - 4.0 * d * d));
  const double s_max = std::sqrt(0.5 * (f2 + disc));
  // s_min = det / s_max avoids the cancellation in (f2 - disc) / 2.
  const double s_min = s_max > 0.0 ? d / s_max : 0.0;
  return s_min > 0.0 ? s_max / s_min : std::numeric_limits<double>::infinity();
}

// Gaussian elimination with partial pivoting.
std::array<double, 2> solve2(const Matrix2& a, std::array<double, 2> rhs) {
  Matrix2 w = a;
  if (std::abs(w.m[1][0]) > std::abs(w.m[0][0])) {
    std::swap(w.m[0], w.m[1]);
    std::swap(rhs[0], rhs[1]);
  }
  if (w.m[0][0] == 0.0) throw IllConditioned("singular boundary system", 0.0);
  const double factor = w.m[1][0] / w.m[0][0];
  const double u11 = w.m[1][1] - factor * w.m[0][1];
  const double r1 = rhs[1] - factor * rhs[0];
  if (u11 == 0.0) throw IllConditioned("singular boundary system", 0.0);
  const double x1 = r1 / u11;
  const double x0 = (rhs[0] - w.m[0][1] * x1) / w.m[0][0];
  return {x0, x1};
}

struct System {
  Matrix2 matrix;
  double K = 0.0;
};

System boundary_system(const VibrationProblem& prob, const BranchDiagnostics& d) {
  const double K = prob.wavenumber();
  const auto alpha_of = [](RadialKind kind, double a) {
    return kind == RadialKind::LaplaceDegenerate ? 0.0 : a;
  };
  const BoundaryColumn c1 = boundary_column(prob.material, d.kind1,
                                            alpha_of(d.kind1, d.alpha1),
                                            d.gamma1, K, prob.R);
  const BoundaryColumn c2 = boundary_column(prob.material, d.kind2,
                                            alpha_of(d.kind2, d.alpha2),
                                            d.gamma2, K, prob.R);
  System s;
  s.K = K;
  s.matrix.m = {{{c1.rr, c2.rr}, {c1.rz, c2.rz}}};
  return s;
}

void fill_residuals(const VibrationProblem& prob, const System& sys,
                    double a1, double a2, BoundaryDiagnostics& diag) {
  const double scale = prob.amplitude != 0.0 ? std::abs(prob.amplitude) : 1.0;
  const auto& m = sys.matrix.m;
  diag.residual_rr = std::abs(m[0][0] * a1 + m[0][1] * a2 - prob.amplitude) / scale;
  diag.residual_rz = std::abs(prob.material.mu() * sys.K *
                              (m[1][0] * a1 + m[1][1] * a2)) / scale;
}

double relative_mismatch(double a1, double a2, double b1, double b2) {
  const double scale = std::max(std::abs(a1), std::abs(a2));
  if (scale == 0.0) return std::max(std::abs(b1), std::abs(b2));
  return std::max(std::abs(a1 - b1), std::abs(a2 - b2)) / scale;
}

// Common tail for Cases 1, 3 and 5: direct solve, conditioning, residuals.
VibrationSolution finish_regular(const VibrationProblem& prob, CaseClass cls,
                                 const BranchDiagnostics& d, double closed_den,
                                 double a1, double a2) {
  const System sys = boundary_system(prob, d);
  const Matrix2 eq = equilibrated(sys.matrix);
  if (closed_den == 0.0 || !std::isfinite(a1) || !std::isfinite(a2) ||
      std::abs(eq.det()) < 1e-14 * eq.frob_sq()) {
    std::ostringstream msg;
    msg << to_string(cls.tag)
        << ": boundary system is singular (resonance); shared denominator = "
        << closed_den;
    throw IllConditioned(msg.str(), closed_den);
  }
  VibrationSolution sol{std::move(cls), a1, a2, std::nullopt,
                        vibration_family(prob, a1, a2), {}};
  auto& diag = sol.diagnostics;
  diag.determinant = sys.matrix.det();
  diag.condition_number = condition_number(eq);
  const auto direct = solve2(sys.matrix, {prob.amplitude, 0.0});
  diag.direct_a_bar_1 = direct[0];
  diag.direct_a_bar_2 = direct[1];
  diag.closed_form_mismatch = relative_mismatch(a1, a2, direct[0], direct[1]);
  fill_residuals(prob, sys, a1, a2, diag);
  return sol;
}

BranchDiagnostics checked_diag(const VibrationProblem& prob, const CaseClass& cls,
                               CaseTag expected) {
  if (cls.tag != expected) {
    throw InvalidArgument(std::string("problem is ") + to_string(cls.tag) +
                          ", not " + to_string(expected));
  }
  return alpha_gamma(prob.material, vibration_mode(prob));
}

}  // namespace

BoundaryColumn boundary_column(const Material& mat, RadialKind kind,
                               double alpha, double gamma, double K, double R) {
  const double eps = kind == RadialKind::Modified      ? 1.0
                     : kind == RadialKind::Oscillatory ? -1.0
                                                       : 0.0;
  const RadialJet f = RadialFactor(kind, 0, alpha, 1.0, 0.0).eval(R);
  const double l = mat.lambda();
  const double m = mat.mu();
  const double a2 = eps * alpha * alpha;
  BoundaryColumn c;
  c.rr = (l * (a2 - gamma * K * K) + 2.0 * m * a2) * f.v - 2.0 * m * f.d1 / R;
  c.rz = (1.0 + gamma) * f.d1;
  return c;
}

SolutionFamily vibration_family(const VibrationProblem& prob, double a_bar_1,
                                double a_bar_2) {
  FamilyCoefficients c;
  c.potentials.phi[0] = {a_bar_1, 0.0, 1.0, 0.0};
  c.potentials.phi[1] = {a_bar_2, 0.0, 1.0, 0.0};
  c.e = 1.0;
  c.f = 0.0;
  c.g = 0.0;
  c.h = 1.0;
  return SolutionFamily(prob.material, vibration_mode(prob), c);
}

CaseClass classify(const VibrationProblem& prob) {
  prob.validate();
  const Material& mat = prob.material;
  const double K = prob.wavenumber();
  const double w2 = prob.omega * prob.omega;
  CaseClass cls;
  cls.wavenumber_sq = K * K;
  cls.threshold_p = mat.rho() * w2 / mat.p_modulus();
  cls.threshold_s = mat.rho() * w2 / mat.mu();
  cls.ladder_valid = mat.lambda() > -mat.mu();
  if (mat.lambda() <= 0.0) {
    cls.warnings.emplace_back(
        "the five-case table presumes lambda > 0; lambda = " +
        std::to_string(mat.lambda()));
  }
  if (!cls.ladder_valid) {
    cls.warnings.emplace_back(
        "lambda <= -mu: thresholds are not ordered, pairwise comparisons used");
  }

  const int cp = compare(cls.wavenumber_sq, cls.threshold_p);
  const int cs = compare(cls.wavenumber_sq, cls.threshold_s);
  if (cp > 0 && cs > 0) {
    cls.tag = CaseTag::Case1;
  } else if (cp > 0 && cs == 0) {
    cls.tag = CaseTag::Case2;
  } else if (cp > 0 && cs < 0) {
    cls.tag = CaseTag::Case3;
  } else if (cp == 0 && cs < 0) {
    const double x = std::sqrt(cls.threshold_s - cls.wavenumber_sq) * prob.R;
    const double norm = j1_normalized(x);
    cls.j1_normalized = norm;
    if (norm <= kJ1ZeroTol) {
      cls.tag = CaseTag::Case4ii;
      cls.j1_zero_index = nearest_j1_zero(x);
    } else {
      cls.tag = CaseTag::Case4i;
    }
  } else if (cp < 0 && cs < 0) {
    cls.tag = CaseTag::Case5;
  } else {
    cls.tag = CaseTag::OutsideTable;
  }
  return cls;
}

VibrationSolution solve_case1(const VibrationProblem& prob) {
  CaseClass cls = classify(prob);
  const BranchDiagnostics d = checked_diag(prob, cls, CaseTag::Case1);
  const double R = prob.R;
  const double K = prob.wavenumber();
  const double l = prob.material.lambda();
  const double m = prob.material.mu();
  const double A = prob.amplitude;
  const double x1 = d.alpha1 * R;
  const double x2 = d.alpha2 * R;
  const double i0a = bessel(BesselKind::I, 0, x1);
  const double i1a = bessel(BesselKind::I, 1, x1);
  const double i0b = bessel(BesselKind::I, 0, x2);
  const double i1b = bessel(BesselKind::I, 1, x2);
  const double dp1 = d.alpha1 * i0a - i1a / R;
  const double dp2 = d.alpha2 * i0b - i1b / R;
  const double ups = (1.0 + d.gamma2) * dp1 * i1b - (1.0 + d.gamma1) * i1a * dp2;
  const double den = 2.0 * m * d.alpha1 * d.alpha2 * ups +
                     l * (d.alpha1 * d.alpha1 - K * K) * d.alpha2 *
                         (1.0 + d.gamma2) * i0a * i1b;
  const double a1 = d.alpha2 * (1.0 + d.gamma2) * i1b * A / den;
  const double a2 = -d.alpha1 * (1.0 + d.gamma1) * i1a * A / den;
  return finish_regular(prob, std::move(cls), d, den, a1, a2);
}

VibrationSolution solve_case2(const VibrationProblem& prob) {
  CaseClass cls = classify(prob);
  const BranchDiagnostics d = checked_diag(prob, cls, CaseTag::Case2);
  if (prob.force_free) {
    VibrationSolution sol{std::move(cls), 0.0, 0.0, std::nullopt,
                          vibration_family(prob, 0.0, 0.0), {}};
    sol.diagnostics.closed_form_mismatch = 0.0;
    return sol;
  }
  // gamma_2 = 0 and alpha_2 = 0: the s = 2 part is constant in r and drops
  // out of both equations, leaving two conditions on a_bar_1 alone.
  const double R = prob.R;
  const double K = prob.wavenumber();
  const double x1 = d.alpha1 * R;
  const double beta1 = prob.material.lambda() * (d.alpha1 * d.alpha1 - K * K) +
                       2.0 * prob.material.mu() * d.alpha1 * d.alpha1;
  std::ostringstream rr, rz;
  rr.precision(17);
  rz.precision(17);
  rr << "a_bar_1 * [" << beta1 << " * I0(" << x1 << ") - 2 mu alpha_1 I1(" << x1
     << ")/R] = A = " << prob.amplitude;
  rz << "a_bar_1 * alpha_1 (1 + gamma_1) I1(" << x1 << ") = 0";
  throw NoSolution(
      "Case 2 (K^2 = rho w^2 / mu): the radial-stress and shear conditions "
      "are inconsistent for nonzero amplitude; the second forces a_bar_1 = 0, "
      "the first then reads 0 = A",
      {rr.str(), rz.str()});
}

VibrationSolution solve_case3(const VibrationProblem& prob) {
  CaseClass cls = classify(prob);
  const BranchDiagnostics d = checked_diag(prob, cls, CaseTag::Case3);
  const double R = prob.R;
  const double K = prob.wavenumber();
  const double l = prob.material.lambda();
  const double m = prob.material.mu();
  const double A = prob.amplitude;
  const double x1 = d.alpha1 * R;
  const double x2 = d.alpha2 * R;
  const double i0a = bessel(BesselKind::I, 0, x1);
  const double i1a = bessel(BesselKind::I, 1, x1);
  const double j0b = bessel(BesselKind::J, 0, x2);
  const double j1b = bessel(BesselKind::J, 1, x2);
  const double dp1 = d.alpha1 * i0a - i1a / R;
  const double dp2 = d.alpha2 * j0b - j1b / R;
  const double ups = (1.0 + d.gamma2) * dp1 * j1b - (1.0 + d.gamma1) * i1a * dp2;
  const double den = 2.0 * m * d.alpha1 * d.alpha2 * ups +
                     l * (d.alpha1 * d.alpha1 - K * K) * d.alpha2 *
                         (1.0 + d.gamma2) * i0a * j1b;
  const double a1 = d.alpha2 * (1.0 + d.gamma2) * j1b * A / den;
  const double a2 = d.alpha1 * (1.0 + d.gamma1) * i1a * A / den;
  return finish_regular(prob, std::move(cls), d, den, a1, a2);
}

VibrationSolution solve_case4(const VibrationProblem& prob,
                              const SolveOptions& opts) {
  CaseClass cls = classify(prob);
  if (cls.tag != CaseTag::Case4i && cls.tag != CaseTag::Case4ii) {
    throw InvalidArgument(std::string("problem is ") + to_string(cls.tag) +
                          ", not Case4");
  }
  const Material& mat = prob.material;
  if (std::abs(mat.lambda()) <= 1e-12 * mat.mu()) throw LambdaZeroExcluded();
  const BranchDiagnostics d = alpha_gamma(mat, vibration_mode(prob));
  const double K = prob.wavenumber();
  const double l = mat.lambda();
  const double A = prob.amplitude;
  const System sys = boundary_system(prob, d);

  if (cls.tag == CaseTag::Case4i) {
    const double a1 = -A / (l * K * K);
    VibrationSolution sol{std::move(cls), a1, 0.0, std::nullopt,
                          vibration_family(prob, a1, 0.0), {}};
    auto& diag = sol.diagnostics;
    const Matrix2 eq = equilibrated(sys.matrix);
    diag.determinant = sys.matrix.det();
    diag.condition_number = condition_number(eq);
    if (std::abs(eq.det()) >= 1e-14 * eq.frob_sq()) {
      const auto direct = solve2(sys.matrix, {A, 0.0});
      diag.direct_a_bar_1 = direct[0];
      diag.direct_a_bar_2 = direct[1];
      diag.closed_form_mismatch = relative_mismatch(a1, 0.0, direct[0], direct[1]);
    } else {
      diag.closed_form_mismatch = std::numeric_limits<double>::quiet_NaN();
    }
    fill_residuals(prob, sys, a1, 0.0, diag);
    return sol;
  }

  double C = 0.0;
  if (opts.case4_C) {
    C = *opts.case4_C;
  } else if (opts.allow_default_C) {
    C = prob.R * prob.R;
  } else {
    throw MissingFreeParameter();
  }
  if (C == 0.0 || !std::isfinite(C)) {
    throw InvalidArgument("Case 4(ii) free parameter C must be finite and nonzero");
  }
  const double j0 = bessel(BesselKind::J, 0, d.alpha2 * prob.R);
  const double a1 =
      -(A + 2.0 * mat.mu() * C * d.alpha2 * d.alpha2 * j0) / (l * K * K);
  VibrationSolution sol{std::move(cls), a1, C, C, vibration_family(prob, a1, C), {}};
  auto& diag = sol.diagnostics;
  diag.determinant = sys.matrix.det();
  diag.condition_number = std::numeric_limits<double>::infinity();
  diag.closed_form_mismatch = std::numeric_limits<double>::quiet_NaN();
  diag.direct_a_bar_1 = std::numeric_limits<double>::quiet_NaN();
  diag.direct_a_bar_2 = std::numeric_limits<double>::quiet_NaN();
  fill_residuals(prob, sys, a1, C, diag);
  return sol;
}

VibrationSolution solve_case5(const VibrationProblem& prob) {
  CaseClass cls = classify(prob);
  const BranchDiagnostics d = checked_diag(prob, cls, CaseTag::Case5);
  const double R = prob.R;
  const double K = prob.wavenumber();
  const double l = prob.material.lambda();
  const double m = prob.material.mu();
  const double A = prob.amplitude;
  const double x1 = d.alpha1 * R;
  const double x2 = d.alpha2 * R;
  const double j0a = bessel(BesselKind::J, 0, x1);
  const double j1a = bessel(BesselKind::J, 1, x1);
  const double j0b = bessel(BesselKind::J, 0, x2);
  const double j1b = bessel(BesselKind::J, 1, x2);
  const double dp1 = d.alpha1 * j0a - j1a / R;
  const double dp2 = d.alpha2 * j0b - j1b / R;
  const double ups = (1.0 + d.gamma2) * dp1 * j1b - (1.0 + d.gamma1) * j1a * dp2;
  const double den = 2.0 * m * d.alpha1 * d.alpha2 * ups +
                     l * (d.alpha1 * d.alpha1 + K * K) * d.alpha2 *
                         (1.0 + d.gamma2) * j0a * j1b;
  const double a1 = -d.alpha2 * (1.0 + d.gamma2) * j1b * A / den;
  const double a2 = d.alpha1 * (1.0 + d.gamma1) * j1a * A / den;
  return finish_regular(prob, std::move(cls), d, den, a1, a2);
}

VibrationSolution solve(const VibrationProblem& prob, const SolveOptions& opts) {
  const CaseClass cls = classify(prob);
  switch (cls.tag) {
    case CaseTag::Case1: return solve_case1(prob);
    case CaseTag::Case2: return solve_case2(prob);
    case CaseTag::Case3: return solve_case3(prob);
    case CaseTag::Case4i:
    case CaseTag::Case4ii: return solve_case4(prob, opts);
    case CaseTag::Case5: return solve_case5(prob);
    case CaseTag::OutsideTable: break;
  }
  std::ostringstream msg;
  msg << "parameter combination outside the five-case table (K^2 = "
      << cls.wavenumber_sq << ", rho w^2/(lambda+2mu) = " << cls.threshold_p
      << ", rho w^2/mu = " << cls.threshold_s << ")";
  throw CaseNotCovered(msg.str());
}

}  // namespace elastics::vibration
