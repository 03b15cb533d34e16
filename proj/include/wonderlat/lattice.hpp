#pragma once

#include "wonderlat/spherical.hpp"

namespace wonderlat {

/// Element of Pic(X) in the basis of colors (and Schubert divisors on X_I).
struct DivisorClass {
  DatumPtr datum;
  RatVector coeffs;
};

/// Element of N_1(X) in the basis dual to the Picard basis.
struct CurveClass {
  DatumPtr datum;
  IntVector coeffs;

  bool is_zero() const { return coeffs.isZero(); }
};

struct BoundaryDivisor {
  DatumPtr datum;
  int label = 0;
  DivisorClass expansion;
};

DivisorClass make_divisor(const DatumPtr& datum, RatVector coeffs);
CurveClass make_curve(const DatumPtr& datum, IntVector coeffs);
DivisorClass basis_divisor(const DatumPtr& datum, int k);
/// [C_D] for the k-th basis divisor D.
CurveClass dual_curve(const DatumPtr& datum, int k);

CurveClass operator+(const CurveClass& lhs, const CurveClass& rhs);
CurveClass operator-(const CurveClass& lhs, const CurveClass& rhs);
CurveClass operator*(Integer k, const CurveClass& c);
DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator*(const Rational& k, const DivisorClass& d);
bool operator==(const CurveClass& lhs, const CurveClass& rhs);
bool operator==(const DivisorClass& lhs, const DivisorClass& rhs);

/// <rho(D), gamma> for the k-th basis divisor D:
///   type a'  -> alpha^vee(gamma) / 2,
///   type b   -> alpha^vee(gamma),
/// and for a color moved by two roots both values, which must agree.
Rational rho_value(const SphericalDatum& datum, int k, const IntVector& gamma);

/// X_i = sum_D <rho(D), gamma_i> D.
BoundaryDivisor boundary_divisor(const DatumPtr& datum, int label);

/// Row per boundary label (datum order), column per basis divisor.
RatMatrix boundary_matrix(const DatumPtr& datum);

Rational pair(const DivisorClass& d, const CurveClass& c);

/// <X_i, c> for every boundary label of the datum, in datum order.
RatVector boundary_pairings(const CurveClass& c);

bool is_nef(const DivisorClass& d);
/// Nonnegative in the dual basis. Sufficient, not necessary.
bool is_effective_curve(const CurveClass& c);
/// Nonnegative on every basis divisor and every boundary divisor.
bool is_movable(const CurveClass& c);

/// iota_* from the closed orbit. `schubert` is indexed by all simple roots;
/// [C_alpha] goes to [C_D] for alpha of type b and to 2[C_D] for type a'.
CurveClass closed_orbit_pushforward(const DatumPtr& datum, const IntVector& schubert);

struct ClosedOrbitLift {
  IntVector schubert;
  int multiplier = 1;
};

/// Effective Schubert class whose pushforward is multiplier * c. The
/// multiplier is 1 whenever such a class exists (always for group data).
ClosedOrbitLift lift_to_closed_orbit(const CurveClass& c);

/// Matrix of the pullback Pic(X_I) -> Pic(X_{I + i0}) in the two bases.
IntMatrix boundary_pullback_matrix(const SphericalDatum& source, int i0, const SphericalDatum& target);

/// Pullback of a divisor on X_I along the inclusion of X_{I + i0}.
DivisorClass color_pullback(const DivisorClass& d, int i0);
DivisorClass color_pullback(const DivisorClass& d, int i0, const DatumPtr& target);

}  // namespace wonderlat
