#include "elastics/potentials.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include "elastics/errors.hpp"
#include "elastics/specfun.hpp"

namespace elastics {

using specfun::BesselKind;

RadialFactor::RadialFactor(RadialKind kind, int order, double alpha,
                           double c_first, double c_second)
    : kind_(kind),
      order_(order),
      alpha_(alpha),
      c_first_(c_first),
      c_second_(c_second) {
  if (order < 0 || order > specfun::kMaxOrder - 2) {
    throw InvalidArgument("radial order out of range: " +
                          std::to_string(order));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("radial parameter alpha must be finite and >= 0");
  }
  if (kind == RadialKind::LaplaceDegenerate && alpha != 0.0) {
    throw InvalidArgument("Laplace radial factor requires alpha = 0");
  }
  if (kind != RadialKind::LaplaceDegenerate && alpha == 0.0) {
    throw InvalidArgument("Bessel radial factor requires alpha > 0");
  }
}

template <class Real>
BasicRadialJet<Real> RadialFactor::eval_impl(Real r) const {
  if (!(r >= 0)) throw InvalidArgument("radial coordinate must be >= 0");
  const int n = order_;
  const Real a = c_first_;
  const Real b = c_second_;
  BasicRadialJet<Real> out;
  if (r == 0 && singular_at_axis()) throw AxisSingularity();

  if (kind_ == RadialKind::LaplaceDegenerate) {
    if (r == 0) {
      out.v = n == 0 ? a : 0;
      out.d1 = n == 1 ? a : 0;
      out.d2 = n == 2 ? 2 * a : 0;
      out.over_r = n >= 1 ? out.d1 : 0;
      return out;
    }
    if (n == 0) {
      out.v = a + b * std::log(r);
      out.d1 = b / r;
      out.d2 = -b / (r * r);
    } else {
      const Real rn = std::pow(r, n);
      const Real rmn = 1 / rn;
      out.v = a * rn + b * rmn;
      out.d1 = Real(n) * (a * rn - b * rmn) / r;
      out.d2 = (Real(n * (n - 1)) * a * rn + Real(n * (n + 1)) * b * rmn) / (r * r);
    }
    out.over_r = out.v / r;
    return out;
  }

  const bool osc = kind_ == RadialKind::Oscillatory;
  const BesselKind first = osc ? BesselKind::J : BesselKind::I;
  const BesselKind second = osc ? BesselKind::Y : BesselKind::K;
  const Real alpha = alpha_;
  const Real x = alpha * r;
  const auto jet = [n, x](BesselKind kind) {
    if constexpr (std::is_same_v<Real, double>) {
      return specfun::bessel_jet(kind, n, x);
    } else {
      return specfun::bessel_jet_ext(kind, n, x);
    }
  };
  Real v = 0;
  Real d1 = 0;
  Real d2 = 0;
  if (c_first_ != 0.0) {
    const auto j = jet(first);
    v += a * j.value;
    d1 += a * j.d1;
    d2 += a * j.d2;
  }
  if (c_second_ != 0.0) {
    const auto j = jet(second);
    v += b * j.value;
    d1 += b * j.d1;
    d2 += b * j.d2;
  }
  out.v = v;
  out.d1 = alpha * d1;
  out.d2 = alpha * alpha * d2;
  if (r == 0) {
    out.over_r = n >= 1 ? out.d1 : 0;
  } else {
    out.over_r = out.v / r;
  }
  return out;
}

RadialJet RadialFactor::eval(double r) const { return eval_impl(r); }
RadialJetX RadialFactor::eval_ext(Extended r) const { return eval_impl(r); }

namespace {

template <class Real>
BasicJet<Real> angular_jet(const AngularFactor& f, Real theta) {
  const Real n = f.order;
  const Real c = std::cos(n * theta);
  const Real s = std::sin(n * theta);
  const Real cc = f.c_cos;
  const Real cs = f.c_sin;
  BasicJet<Real> j;
  j.v = cc * c + cs * s;
  j.d1 = n * (-cc * s + cs * c);
  j.d2 = -n * n * j.v;
  return j;
}

template <class Real>
BasicJet<Real> factor_jet(const Factor1D& f, Real x) {
  const Real w = f.rate;
  const Real c1 = f.c_first;
  const Real c2 = f.c_second;
  BasicJet<Real> j;
  switch (f.branch) {
    case Factor1D::Branch::Trig: {
      const Real c = std::cos(w * x);
      const Real s = std::sin(w * x);
      j.v = c1 * c + c2 * s;
      j.d1 = w * (-c1 * s + c2 * c);
      j.d2 = -w * w * j.v;
      break;
    }
    case Factor1D::Branch::Exp: {
      const Real em = std::exp(-w * x);
      const Real ep = std::exp(w * x);
      j.v = c1 * em + c2 * ep;
      j.d1 = w * (-c1 * em + c2 * ep);
      j.d2 = w * w * j.v;
      break;
    }
    case Factor1D::Branch::Linear:
      j.v = c1 + c2 * x;
      j.d1 = c2;
      j.d2 = 0;
      break;
  }
  return j;
}

}  // namespace

Jet AngularFactor::eval(double theta) const { return angular_jet(*this, theta); }
JetX AngularFactor::eval_ext(Extended theta) const { return angular_jet(*this, theta); }

Jet Factor1D::eval(double x) const { return factor_jet(*this, x); }
JetX Factor1D::eval_ext(Extended x) const { return factor_jet(*this, x); }

double Factor1D::eigenvalue() const {
  switch (branch) {
    case Branch::Trig:
      return -rate * rate;
    case Branch::Exp:
      return rate * rate;
    case Branch::Linear:
      return 0.0;
  }
  return 0.0;
}

const char* to_string(Factor1D::Branch branch) {
  switch (branch) {
    case Factor1D::Branch::Trig:
      return "Trig";
    case Factor1D::Branch::Exp:
      return "Exp";
    case Factor1D::Branch::Linear:
      return "Linear";
  }
  return "?";
}

namespace {

bool term_active(const PotentialTerm& term) {
  if (term.weight == 0.0) return false;
  if (term.angular.c_cos == 0.0 && term.angular.c_sin == 0.0) return false;
  // sin(0 theta) vanishes identically.
  if (term.angular.order == 0 && term.angular.c_cos == 0.0) return false;
  return term.radial.c_first() != 0.0 || term.radial.c_second() != 0.0;
}

PotentialTerm make_term(double weight, RadialKind kind, int n, double alpha,
                        const TermCoefficients& k) {
  return PotentialTerm{weight, RadialFactor(kind, n, alpha, k.a, k.b),
                       AngularFactor{n, k.c, k.d}};
}

void require_general(const BranchDiagnostics& diag) {
  if (diag.kappa_zero) {
    throw InvalidArgument(
        "kappa == 0 diagnostics passed to the general-branch builder");
  }
}

}  // namespace

bool TransversePotential::singular_at_axis() const {
  for (const PotentialTerm& term : terms_) {
    if (term_active(term) && term.radial.singular_at_axis()) return true;
  }
  return false;
}

template <class Real>
BasicPolarJet<Real> TransversePotential::eval_impl(Real r, Real theta) const {
  BasicPolarJet<Real> out;
  for (const PotentialTerm& term : terms_) {
    if (!term_active(term)) continue;
    BasicRadialJet<Real> rj;
    BasicJet<Real> aj;
    if constexpr (std::is_same_v<Real, double>) {
      rj = term.radial.eval(r);
      aj = term.angular.eval(theta);
    } else {
      rj = term.radial.eval_ext(r);
      aj = term.angular.eval_ext(theta);
    }
    const Real w = term.weight;
    out.v += w * rj.v * aj.v;
    out.dr += w * rj.d1 * aj.v;
    out.drr += w * rj.d2 * aj.v;
    out.dt += w * rj.v * aj.d1;
    out.dtt += w * rj.v * aj.d2;
    out.drt += w * rj.d1 * aj.d1;
    out.dt_over_r += w * rj.over_r * aj.d1;
  }
  return out;
}

PolarJet TransversePotential::eval(double r, double theta) const {
  return eval_impl(r, theta);
}

PolarJetX TransversePotential::eval_ext(Extended r, Extended theta) const {
  return eval_impl(r, theta);
}

TransversePotential build_phi_perp(const BranchDiagnostics& diag, int n,
                                   const PotentialCoefficients& coeffs) {
  require_general(diag);
  return TransversePotential(
      {make_term(1.0, diag.kind1, n, diag.alpha1, coeffs.phi[0]),
       make_term(1.0, diag.kind2, n, diag.alpha2, coeffs.phi[1])});
}

TransversePotential build_psi_perp(const BranchDiagnostics& diag, int n,
                                   const PotentialCoefficients& coeffs) {
  require_general(diag);
  return TransversePotential(
      {make_term(diag.gamma1, diag.kind1, n, diag.alpha1, coeffs.phi[0]),
       make_term(diag.gamma2, diag.kind2, n, diag.alpha2, coeffs.phi[1])});
}

Kappa0Pair build_kappa0_pair(const Material& mat, double tau, int n,
                             const PotentialCoefficients& coeffs) {
  Kappa0Pair pair{kappa0_diagnostics(mat, tau), {}, {}};
  const BranchDiagnostics& d = pair.diag;
  PotentialTerm phi1 = make_term(1.0, d.kind1, n, d.alpha1, coeffs.phi[0]);
  PotentialTerm w = make_term(1.0, d.kind2, n, d.alpha2, coeffs.phi[1]);
  pair.phi = TransversePotential({phi1});
  pair.psi = TransversePotential({phi1, w});
  return pair;
}

AxialFactor build_axial(double kappa, double e, double f, bool allow_linear) {
  AxialFactor out;
  out.c_first = e;
  out.c_second = f;
  if (kappa < 0.0) {
    out.branch = Factor1D::Branch::Trig;
    out.rate = std::sqrt(-kappa);
  } else if (kappa > 0.0) {
    out.branch = Factor1D::Branch::Exp;
    out.rate = std::sqrt(kappa);
  } else {
    if (!allow_linear) throw KappaZeroNotAllowed();
    out.branch = Factor1D::Branch::Linear;
    out.rate = 0.0;
  }
  return out;
}

TemporalFactor build_temporal(double tau, double g, double h) {
  if (tau == 0.0) throw TauZero();
  TemporalFactor out;
  out.c_first = g;
  out.c_second = h;
  out.branch = tau < 0.0 ? Factor1D::Branch::Trig : Factor1D::Branch::Exp;
  out.rate = std::sqrt(std::abs(tau));
  return out;
}

ChiFamily build_chi(const BranchDiagnostics& diag, const ModeParams& mode,
                    const ChiCoefficients& coeffs) {
  return ChiFamily{
      make_term(1.0, diag.kind2, mode.n(), diag.alpha2, coeffs.term),
      build_axial(mode.kappa(), coeffs.e, coeffs.f, mode.kappa() == 0.0),
      build_temporal(mode.tau(), coeffs.g, coeffs.h)};
}

// ---------------------------------------------------------------------------

FrobeniusRadial::FrobeniusRadial(double eta_r, double eta_theta,
                                 double c_first, double c_second)
    : eta_r_(eta_r),
      eta_theta_(eta_theta),
      c_first_(c_first),
      c_second_(c_second) {}

namespace {

template <class Real>
struct SeriesJet {
  std::complex<Real> v;
  std::complex<Real> d1;
  std::complex<Real> d2;
};

// sum_k c_k r^(nu + 2k), c_0 = 1, c_k = c_{k-1} (eta_r / 4) / (k (nu + k)).
template <class Real>
SeriesJet<Real> frobenius_series(std::complex<Real> nu, Real eta_r, Real r) {
  using C = std::complex<Real>;
  const Real tiny = std::numeric_limits<Real>::epsilon() / 10;
  SeriesJet<Real> s{};
  C coef = 1;
  C power = std::exp(nu * std::log(r));
  const Real r2 = r * r;
  for (int k = 0; k < 2000; ++k) {
    const C e = nu + Real(2 * k);
    const C term = coef * power;
    s.v += term;
    s.d1 += term * e / r;
    s.d2 += term * e * (e - Real(1)) / r2;
    if (k > 2 && std::abs(term) * (1 + std::abs(e) * std::abs(e)) <=
                     tiny * (std::abs(s.v) + std::abs(s.d1) * r + std::abs(s.d2) * r2)) {
      break;
    }
    coef *= (eta_r / 4) / (Real(k + 1) * (nu + Real(k + 1)));
    power *= r2;
  }
  return s;
}

template <class Real>
BasicRadialJet<Real> frobenius_jet(const FrobeniusRadial& f, Real r) {
  if (!(r > 0)) {
    throw InvalidArgument("non-integer order radial part needs r > 0");
  }
  const Real eta_r = f.eta_r();
  const Real a = f.c_first();
  const Real b = f.c_second();
  BasicRadialJet<Real> out;
  if (f.eta_theta() > 0.0) {
    const Real nu = std::sqrt(Real(f.eta_theta()));
    const SeriesJet<Real> p = frobenius_series(std::complex<Real>(nu), eta_r, r);
    const SeriesJet<Real> m = frobenius_series(std::complex<Real>(-nu), eta_r, r);
    out.v = a * p.v.real() + b * m.v.real();
    out.d1 = a * p.d1.real() + b * m.d1.real();
    out.d2 = a * p.d2.real() + b * m.d2.real();
  } else {
    const Real beta = std::sqrt(-Real(f.eta_theta()));
    const SeriesJet<Real> s = frobenius_series(std::complex<Real>(0, beta), eta_r, r);
    out.v = a * s.v.real() + b * s.v.imag();
    out.d1 = a * s.d1.real() + b * s.d1.imag();
    out.d2 = a * s.d2.real() + b * s.d2.imag();
  }
  out.over_r = out.v / r;
  return out;
}

}  // namespace

RadialJet FrobeniusRadial::eval(double r) const { return frobenius_jet(*this, r); }
RadialJetX FrobeniusRadial::eval_ext(Extended r) const { return frobenius_jet(*this, r); }

namespace {

Factor1D three_way(double eta, double rate_scale, double c1, double c2) {
  Factor1D f;
  f.c_first = c1;
  f.c_second = c2;
  if (eta < 0.0) {
    f.branch = Factor1D::Branch::Trig;
    f.rate = std::sqrt(-eta) * rate_scale;
  } else if (eta > 0.0) {
    f.branch = Factor1D::Branch::Exp;
    f.rate = std::sqrt(eta) * rate_scale;
  } else {
    f.branch = Factor1D::Branch::Linear;
  }
  return f;
}

}  // namespace

double SovChi::value(double r, double theta, double z, double t) const {
  return radial_jet(r).v * angular_.eval(theta).v * axial_.eval(z).v *
         temporal_.eval(t).v;
}

Extended SovChi::value_ext(Extended r, Extended theta, Extended z, Extended t) const {
  const Extended radial =
      std::visit([r](const auto& f) { return f.eval_ext(r).v; }, radial_);
  return radial * angular_.eval_ext(theta).v * axial_.eval_ext(z).v *
         temporal_.eval_ext(t).v;
}

RadialJet SovChi::radial_jet(double r) const {
  return std::visit([r](const auto& radial) { return radial.eval(r); },
                    radial_);
}

SovChi sov_chi(const Material& mat, double eta_t, double eta_z,
               double eta_theta, const SovCoefficients& k,
               bool require_periodic) {
  if (!std::isfinite(eta_t) || !std::isfinite(eta_z) ||
      !std::isfinite(eta_theta)) {
    throw InvalidArgument("separation constants must be finite");
  }
  SovChi out(mat);
  out.eta_t_ = eta_t;
  out.eta_z_ = eta_z;
  out.eta_theta_ = eta_theta;

  std::optional<int> order;
  if (eta_theta == 0.0) {
    order = 0;
  } else if (eta_theta > 0.0) {
    const double root = std::sqrt(eta_theta);
    const double nearest = std::round(root);
    if (std::abs(root - nearest) <= kIntegerOrderTol && nearest >= 1.0 &&
        nearest <= specfun::kMaxOrder - 2) {
      order = static_cast<int>(nearest);
    }
  }

  // Angular part.
  if (eta_theta == 0.0) {
    out.angular_ = three_way(0.0, 1.0, k.c, k.d);
    out.periodic_ = k.d == 0.0;
  } else if (order) {
    out.angular_ = Factor1D{Factor1D::Branch::Trig, static_cast<double>(*order),
                            k.c, k.d};
    out.periodic_ = true;
  } else {
    out.angular_ = three_way(-eta_theta, 1.0, k.c, k.d);
    out.periodic_ = false;
  }
  if (require_periodic && !out.periodic_) {
    if (eta_theta == 0.0) {
      throw InvalidArgument(
          "angular part C + D theta is not periodic unless D = 0");
    }
    throw NonIntegerOrder(eta_theta);
  }
  if (out.periodic_) out.integer_order_ = order;

  out.axial_ = three_way(eta_z, 1.0, k.e, k.f);
  out.temporal_ = three_way(eta_t, mat.shear_speed(), k.g, k.h);

  const double eta_r = eta_t - eta_z;
  if (order) {
    const RadialKind kind = classify_radial(eta_z, eta_t);
    const double alpha =
        kind == RadialKind::LaplaceDegenerate ? 0.0 : std::sqrt(std::abs(eta_r));
    out.radial_ = RadialFactor(kind, *order, alpha, k.a, k.b);
  } else {
    out.radial_ = FrobeniusRadial(eta_r, eta_theta, k.a, k.b);
  }
  return out;
}

}  // namespace elastics
