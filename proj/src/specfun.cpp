#include "elastics/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "elastics/errors.hpp"

namespace elastics::specfun {
namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kEulerGammaL = std::numbers::egamma_v<long double>;
constexpr double kRescale = 1e250;

template <class Real>
using Table = std::vector<Real>;

template <class Real>
int miller_start(int nmax, Real x) {
  const double big = std::max(static_cast<double>(nmax), static_cast<double>(x));
  // a few more terms buy the extra digits of long double
  const double extra = sizeof(Real) > sizeof(double) ? 10.0 : 0.0;
  int start = static_cast<int>(big + 25.0 + extra + 8.0 * std::cbrt(big));
  if (start % 2 != 0) ++start;
  return start;
}

// Unnormalised backward recurrence. sign = -1 gives J (t[k-1] = 2k/x t[k] -
// t[k+1]), sign = +1 gives I.
template <class Real>
Table<Real> backward(int start, Real x, Real sign) {
  Table<Real> t(static_cast<size_t>(start) + 2, Real(0));
  t[static_cast<size_t>(start)] = 1;
  for (int k = start; k >= 1; --k) {
    const auto uk = static_cast<size_t>(k);
    t[uk - 1] = (Real(2 * k) / x) * t[uk] + sign * t[uk + 1];
    if (std::abs(t[uk - 1]) > Real(kRescale)) {
      for (size_t i = uk - 1; i < t.size(); ++i) t[i] /= Real(kRescale);
    }
  }
  return t;
}

// J_0 .. J_{start} for x > 0, normalised with J_0 + 2 sum J_{2k} = 1.
template <class Real>
Table<Real> j_table_full(int nmax, Real x) {
  const int start = miller_start(nmax, x);
  Table<Real> t = backward(start, x, Real(-1));
  Real sum = t[0];
  for (int k = 2; k <= start; k += 2) sum += 2 * t[static_cast<size_t>(k)];
  for (Real& v : t) v /= sum;
  return t;
}

template <class Real>
Table<Real> j_table(int nmax, Real x) {
  Table<Real> out(static_cast<size_t>(nmax) + 1, Real(0));
  if (x == 0) {
    out[0] = 1;
    return out;
  }
  const Table<Real> t = j_table_full(nmax, x);
  std::copy_n(t.begin(), out.size(), out.begin());
  return out;
}

// I_0 .. I_nmax, normalised with I_0 + 2 sum I_k = e^x.
template <class Real>
Table<Real> i_table(int nmax, Real x) {
  Table<Real> out(static_cast<size_t>(nmax) + 1, Real(0));
  if (x == 0) {
    out[0] = 1;
    return out;
  }
  const int start = miller_start(nmax, x);
  Table<Real> t = backward(start, x, Real(1));
  Real sum = t[0];
  for (int k = 1; k <= start; ++k) sum += 2 * t[static_cast<size_t>(k)];
  const Real scale = std::exp(x) / sum;
  for (size_t k = 0; k < out.size(); ++k) out[k] = t[k] * scale;
  return out;
}

// Neumann series for Y_0 and Y_1 in terms of the J table, then upward
// recurrence (stable for Y).
template <class Real>
Table<Real> y_table(int nmax, Real x) {
  const Real pi = static_cast<Real>(kPiL);
  const Table<Real> j = j_table_full(std::max(nmax, 1), x);
  const int top = static_cast<int>(j.size()) - 2;
  const Real log_term = std::log(x / 2) + static_cast<Real>(kEulerGammaL);

  Real s0 = 0;
  for (int k = 1; 2 * k <= top; ++k) {
    const Real sgn = (k % 2 == 0) ? 1 : -1;
    s0 += sgn * j[static_cast<size_t>(2 * k)] / Real(k);
  }
  Real s1 = 0;
  for (int k = 1; 2 * k + 1 <= top; ++k) {
    const Real sgn = (k % 2 == 0) ? 1 : -1;
    s1 += sgn * Real(2 * k + 1) * j[static_cast<size_t>(2 * k + 1)] /
          (Real(k) * Real(k + 1));
  }

  Table<Real> y(static_cast<size_t>(std::max(nmax, 1)) + 1, Real(0));
  y[0] = (2 / pi) * (log_term * j[0] - 2 * s0);
  y[1] = (2 / pi) * (-j[0] / x + (log_term - 1) * j[1] - s1);
  for (int k = 1; k < nmax; ++k) {
    const auto uk = static_cast<size_t>(k);
    y[uk + 1] = (Real(2 * k) / x) * y[uk] - y[uk - 1];
  }
  y.resize(static_cast<size_t>(nmax) + 1);
  return y;
}

// K_0 and K_1 for x > 0.
template <class Real>
void k01(Real x, Real& k0, Real& k1) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (x <= 2) {
    const Table<Real> i = i_table(1, x);
    const Real q = x * x / 4;
    Real term = 1;
    Real harmonic = 0;
    Real series = 0;
    for (int k = 1; k < 200; ++k) {
      term *= q / (Real(k) * Real(k));
      harmonic += Real(1) / Real(k);
      const Real add = term * harmonic;
      series += add;
      if (add < eps / 100 * std::abs(series)) break;
    }
    k0 = -(std::log(x / 2) + static_cast<Real>(kEulerGammaL)) * i[0] + series;
    // Wronskian I_0 K_1 + I_1 K_0 = 1/x
    k1 = (1 / x - i[1] * k0) / i[0];
    return;
  }
  // Steed's continued fraction with Temme's normalisation, order 0.
  Real b = 2 * (1 + x);
  Real d = 1 / b;
  Real h = d;
  Real delh = d;
  Real q1 = 0;
  Real q2 = 1;
  const Real a1 = Real(0.25);
  Real q = a1;
  Real c = a1;
  Real a = -a1;
  Real s = 1 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= Real(2 * (i - 1));
    c = -a * c / Real(i);
    const Real qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2;
    d = 1 / (b + a * d);
    delh = (b * d - 1) * delh;
    h += delh;
    const Real dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps / 10) break;
  }
  h *= a1;
  k0 = std::sqrt(static_cast<Real>(kPiL) / (2 * x)) * std::exp(-x) / s;
  k1 = k0 * (x + Real(0.5) - h) / x;
}

template <class Real>
Table<Real> k_table(int nmax, Real x) {
  Table<Real> k(static_cast<size_t>(std::max(nmax, 1)) + 1, Real(0));
  k01(x, k[0], k[1]);
  for (int n = 1; n < nmax; ++n) {
    const auto un = static_cast<size_t>(n);
    k[un + 1] = k[un - 1] + (Real(2 * n) / x) * k[un];
  }
  k.resize(static_cast<size_t>(nmax) + 1);
  return k;
}

template <class Real>
void check_domain(BesselKind kind, Real x) {
  if (std::isnan(x)) throw DomainError("Bessel argument is NaN");
  if (kind == BesselKind::Y || kind == BesselKind::K) {
    if (x <= 0.0) {
      throw DomainError(std::string("Bessel ") + to_string(kind) +
                        " requires x > 0");
    }
  } else if (x < 0.0) {
    throw DomainError(std::string("Bessel ") + to_string(kind) +
                      " requires x >= 0");
  }
}

template <class Real>
Table<Real> table(BesselKind kind, int nmax, Real x) {
  switch (kind) {
    case BesselKind::J:
      return j_table(nmax, x);
    case BesselKind::I:
      return i_table(nmax, x);
    case BesselKind::Y:
      return y_table(nmax, x);
    case BesselKind::K:
      return k_table(nmax, x);
  }
  return {};
}

// Z_m for any integer m (including negative) from a table holding |m|.
template <class Real>
Real signed_order(BesselKind kind, const Table<Real>& t, int m) {
  if (m >= 0) return t[static_cast<size_t>(m)];
  const Real v = t[static_cast<size_t>(-m)];
  const bool odd = ((-m) % 2) != 0;
  if ((kind == BesselKind::J || kind == BesselKind::Y) && odd) return -v;
  return v;
}

template <class Real>
Real deriv_from_table(BesselKind kind, const Table<Real>& t, int n, Real x) {
  if (x == 0) {
    // Only reachable for J and I: half-difference forms.
    const Real lo = signed_order(kind, t, n - 1);
    const Real hi = t[static_cast<size_t>(n + 1)];
    return kind == BesselKind::J ? (lo - hi) / 2 : (lo + hi) / 2;
  }
  switch (kind) {
    case BesselKind::J:
    case BesselKind::Y:
      if (n == 0) return -t[1];
      return t[static_cast<size_t>(n - 1)] - (Real(n) / x) * t[static_cast<size_t>(n)];
    case BesselKind::I:
      if (n == 0) return t[1];
      return t[static_cast<size_t>(n - 1)] - (Real(n) / x) * t[static_cast<size_t>(n)];
    case BesselKind::K:
      if (n == 0) return -t[1];
      return -t[static_cast<size_t>(n - 1)] - (Real(n) / x) * t[static_cast<size_t>(n)];
  }
  return 0;
}

template <class Real>
BasicBesselJet<Real> jet_impl(BesselKind kind, int n, Real x) {
  const Table<Real> t = table(kind, n + 2, x);
  BasicBesselJet<Real> jet{};
  jet.value = t[static_cast<size_t>(n)];
  jet.d1 = deriv_from_table(kind, t, n, x);
  const Real lo = signed_order(kind, t, n - 2);
  const Real hi = t[static_cast<size_t>(n + 2)];
  if (kind == BesselKind::J || kind == BesselKind::Y) {
    jet.d2 = (lo - 2 * jet.value + hi) / 4;
  } else {
    jet.d2 = (lo + 2 * jet.value + hi) / 4;
  }
  return jet;
}

void check_order(int n) {
  if (n < 0) throw DomainError("Bessel order must be non-negative");
  if (n > kMaxOrder) {
    throw OrderOverflow("Bessel order " + std::to_string(n) +
                        " exceeds the library ceiling " +
                        std::to_string(kMaxOrder));
  }
}

}  // namespace

const char* to_string(BesselKind kind) {
  switch (kind) {
    case BesselKind::J:
      return "J";
    case BesselKind::Y:
      return "Y";
    case BesselKind::I:
      return "I";
    case BesselKind::K:
      return "K";
  }
  return "?";
}

double bessel(BesselKind kind, int n, double x) {
  check_order(n);
  check_domain(kind, x);
  return table(kind, n, x)[static_cast<size_t>(n)];
}

double bessel_deriv(BesselKind kind, int n, double x) {
  check_order(n);
  check_domain(kind, x);
  const Table<double> t = table(kind, n + 1, x);
  return deriv_from_table(kind, t, n, x);
}

BesselJet bessel_jet(BesselKind kind, int n, double x) {
  check_order(n);
  check_domain(kind, x);
  return jet_impl(kind, n, x);
}

BasicBesselJet<long double> bessel_jet_ext(BesselKind kind, int n, long double x) {
  check_order(n);
  check_domain(kind, x);
  return jet_impl(kind, n, x);
}

double j1_zero(int m) {
  if (m < 1 || m > 100) {
    throw RangeError("j1_zero index must lie in [1, 100], got " +
                     std::to_string(m));
  }
  // McMahon's estimate is within ~1e-3 of the root, the bracket is +-0.5.
  const double beta = (m + 0.25) * std::numbers::pi;
  const double guess = beta - 3.0 / (8.0 * beta);
  double lo = guess - 0.5;
  double hi = guess + 0.5;
  double flo = bessel(BesselKind::J, 1, lo);
  for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = bessel(BesselKind::J, 1, mid);
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const BesselJet jet = bessel_jet(BesselKind::J, 1, x);
    const double step = jet.value / jet.d1;
    x -= step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

}  // namespace elastics::specfun
