#include "elastics/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "elastics/errors.hpp"

namespace elastics::relaxation {

const char* to_string(EndVariant v) {
  switch (v) {
    case EndVariant::DisplacementEnds: return "DisplacementEnds";
    case EndVariant::StressEnds: return "StressEnds";
    case EndVariant::MixedA: return "MixedA";
    case EndVariant::MixedB: return "MixedB";
  }
  return "?";
}

EndVariant end_variant_from_string(const std::string& name) {
  for (EndVariant v : {EndVariant::DisplacementEnds, EndVariant::StressEnds,
                       EndVariant::MixedA, EndVariant::MixedB}) {
    if (name == to_string(v)) return v;
  }
  throw InvalidArgument("unknown end variant '" + name +
                        "' (DisplacementEnds, StressEnds, MixedA, MixedB)");
}

double RelaxationProblem::decay_rate() const { return c * std::log(b) / T; }

void RelaxationProblem::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(L)) throw InvalidArgument("L must be positive");
  if (!positive(R)) throw InvalidArgument("R must be positive");
  if (!positive(k)) throw InvalidArgument("k must be positive");
  if (!(std::isfinite(b) && b > 1.0)) throw InvalidArgument("b must exceed 1");
  if (!positive(c)) throw InvalidArgument("c must be positive");
  if (!positive(T)) throw InvalidArgument("T must be positive");
  if (!std::isfinite(amplitude) || amplitude == 0.0) {
    throw InvalidArgument("amplitude must be finite and nonzero");
  }
}

SolvabilityReport solvability(const RelaxationProblem& prob) {
  prob.validate();
  const Material& mat = prob.material;
  SolvabilityReport rep;
  const double clb = prob.c * std::log(prob.b);
  rep.lhs = mat.p_modulus() * prob.T * prob.T;
  const double q = clb * prob.L / prob.k;
  rep.rhs = mat.rho() * q * q;
  rep.relative_gap =
      std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.on_surface = rep.relative_gap <= kSurfaceTol;
  const double kl = prob.k / prob.L;
  const double rate = clb / prob.T;
  rep.decay_bound_ok = kl * kl < mat.rho() * rate * rate / mat.mu();
  rep.solvable = rep.on_surface && rep.decay_bound_ok;

  std::ostringstream msg;
  msg.precision(17);
  if (rep.solvable) {
    msg << "solvable: (lambda+2mu) T^2 = rho (c ln b L/k)^2 = " << rep.lhs;
  } else if (!rep.on_surface) {
    msg << "no closed form: (lambda+2mu) T^2 = " << rep.lhs
        << " differs from rho (c ln b L/k)^2 = " << rep.rhs
        << " (relative gap " << rep.relative_gap << ")";
  } else {
    msg << "no closed form: (k/L)^2 < rho (c ln b/T)^2 / mu is violated";
  }
  rep.message = msg.str();
  return rep;
}

namespace {

void require_lambda(const Material& mat) {
  if (std::abs(mat.lambda()) <= 1e-12 * mat.mu()) throw LambdaZeroExcluded();
}

}  // namespace

EndData expected_end_data(const RelaxationProblem& prob) {
  require_lambda(prob.material);
  const double l = prob.material.lambda();
  const double pm = prob.material.p_modulus();
  const double A = prob.amplitude;
  EndData e;
  e.u1 = A * prob.L * std::sinh(prob.k) / (l * prob.k);
  e.p1 = 0.0;
  e.p2 = pm * A / l;
  e.p3 = pm * A * std::cosh(prob.k) / l;
  return e;
}

CompatibilityReport table4_report(const RelaxationProblem& prob) {
  prob.validate();
  const EndData want = expected_end_data(prob);
  const EndData& have = prob.end_data;

  std::vector<std::pair<const char*, double>> needed;
  std::vector<std::string> missing;
  const auto need = [&](const char* name, const std::optional<double>& given,
                        const std::optional<double>& expected) {
    if (!given) {
      missing.emplace_back(name);
      return;
    }
    needed.emplace_back(name, *expected);
  };
  switch (prob.variant) {
    case EndVariant::DisplacementEnds:
      need("u1", have.u1, want.u1);
      break;
    case EndVariant::StressEnds:
      need("p1", have.p1, want.p1);
      need("p2", have.p2, want.p2);
      need("p3", have.p3, want.p3);
      break;
    case EndVariant::MixedA:
      need("p2", have.p2, want.p2);
      need("p3", have.p3, want.p3);
      break;
    case EndVariant::MixedB:
      need("u1", have.u1, want.u1);
      need("p1", have.p1, want.p1);
      break;
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw InvalidArgument(std::string(to_string(prob.variant)) +
                          " end conditions need: " + list);
  }

  const auto given_of = [&](const std::string& name) {
    if (name == "u1") return *have.u1;
    if (name == "p1") return *have.p1;
    if (name == "p2") return *have.p2;
    return *have.p3;
  };
  CompatibilityReport rep;
  rep.variant = prob.variant;
  rep.compatible = true;
  for (const auto& [name, expected] : needed) {
    CompatibilityItem item;
    item.name = name;
    item.expected = expected;
    item.given = given_of(name);
    // p1 = 0 has no natural scale of its own; measure it against |A|.
    const double scale =
        expected != 0.0 ? std::abs(expected) : std::abs(prob.amplitude);
    item.rel_error = std::abs(item.given - expected) / scale;
    item.ok = item.rel_error <= kEndDataTol;
    rep.compatible = rep.compatible && item.ok;
    rep.items.push_back(item);
  }
  return rep;
}

CompatibilityReport table4_check(const RelaxationProblem& prob) {
  const SolvabilityReport solv = solvability(prob);
  if (!solv.solvable) throw NotClosedForm(solv.message);
  CompatibilityReport rep = table4_report(prob);
  if (!rep.compatible) {
    std::vector<std::string> violated;
    std::ostringstream msg;
    msg.precision(17);
    msg << to_string(prob.variant) << " end data incompatible with the closed form:";
    for (const auto& item : rep.items) {
      if (item.ok) continue;
      std::ostringstream one;
      one.precision(17);
      one << item.name << " = " << item.given << " but must equal "
          << item.expected << " (relative error " << item.rel_error << ")";
      violated.push_back(one.str());
      msg << " " << one.str() << ";";
    }
    throw IncompatibleEndData(msg.str(), violated);
  }
  return rep;
}

double amplitude_law(const RelaxationProblem& prob) {
  require_lambda(prob.material);
  const Material& mat = prob.material;
  return prob.amplitude * std::sqrt(mat.p_modulus() / mat.rho()) * prob.T /
         (mat.lambda() * prob.c * std::log(prob.b));
}

RelaxationSolution solve(const RelaxationProblem& prob) {
  const SolvabilityReport solv = solvability(prob);
  if (!solv.solvable) throw NotClosedForm(solv.message);
  require_lambda(prob.material);
  CompatibilityReport compat = table4_check(prob);

  const Material& mat = prob.material;
  const double kappa = (prob.k / prob.L) * (prob.k / prob.L);
  double tau = prob.decay_rate() * prob.decay_rate();
  // On the surface kappa = rho tau / (lambda + 2 mu) up to rounding; pin the
  // s = 1 root to zero if the two expressions straddle the degeneracy band.
  if (classify_radial(kappa, mat.rho() * tau / mat.p_modulus()) !=
      RadialKind::LaplaceDegenerate) {
    tau = kappa * mat.p_modulus() / mat.rho();
  }

  FamilyCoefficients coeffs;
  coeffs.potentials.phi[0] = {
      prob.amplitude * prob.L * prob.L / (mat.lambda() * prob.k * prob.k), 0.0,
      1.0, 0.0};
  coeffs.e = 0.5;
  coeffs.f = 0.5;
  coeffs.g = 1.0;
  coeffs.h = 0.0;

  return RelaxationSolution{
      solv, std::move(compat), amplitude_law(prob),
      prob.amplitude * prob.L / (mat.lambda() * prob.k),
      SolutionFamily(mat, ModeParams(kappa, tau, 0), coeffs)};
}

}  // namespace elastics::relaxation
