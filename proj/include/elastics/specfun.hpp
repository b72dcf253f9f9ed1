#pragma once

// Integer-order Bessel functions J, Y, I, K of real argument.
//
// J and I come from Miller's backward recurrence normalised by the
// Neumann sums; Y from the Neumann series built on the same J table and
// then upward recurrence; K from its power series (x <= 2) or the
// Steed/Temme continued fraction (x > 2), then upward recurrence.
// Accuracy is ~1e-14 relative (absolute near zeros) for x <= 50. The same
// code runs in long double for the extended-precision field evaluations.

namespace elastics::specfun {

enum class BesselKind { J, Y, I, K };

inline constexpr int kMaxOrder = 64;

const char* to_string(BesselKind kind);

/// Value of Z_n(x). Throws DomainError / OrderOverflow.
double bessel(BesselKind kind, int n, double x);

/// dZ_n/dx via the standard recurrences.
double bessel_deriv(BesselKind kind, int n, double x);

template <class Real>
struct BasicBesselJet {
  Real value;
  Real d1;  // dZ_n/dx
  Real d2;  // d^2 Z_n/dx^2
};

using BesselJet = BasicBesselJet<double>;

/// Value and first two derivatives from a single recurrence pass. At x = 0
/// the J and I derivatives use the half-difference forms, which stay finite.
BesselJet bessel_jet(BesselKind kind, int n, double x);
BasicBesselJet<long double> bessel_jet_ext(BesselKind kind, int n, long double x);

/// m-th positive zero of J_1, 1 <= m <= 100.
double j1_zero(int m);

}  // namespace elastics::specfun
