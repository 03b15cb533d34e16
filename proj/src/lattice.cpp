#include "wonderlat/lattice.hpp"

#include <algorithm>

namespace wonderlat {

namespace {

void require_same(const DatumPtr& a, const DatumPtr& b) {
  if (!same_datum(a, b)) throw Error(ErrorCode::DatumMismatch, "classes live on different data");
}

void require_group(const SphericalDatum& d) {
  if (!d.group_based()) throw Error(ErrorCode::NotGroupKind, "operation defined for group compactifications only");
}

int boundary_row(const SphericalDatum& d, int label) {
  const int pos = d.boundary_position(label);
  if (pos < 0) throw Error(ErrorCode::IndexOutOfRange, "no boundary divisor with label " + std::to_string(label + 1));
  return pos;
}

}  // namespace

DivisorClass make_divisor(const DatumPtr& datum, RatVector coeffs) {
  if (coeffs.size() != datum->picard_rank()) {
    throw Error(ErrorCode::InvalidArgument, "divisor needs " + std::to_string(datum->picard_rank()) + " coefficients");
  }
  return {datum, std::move(coeffs)};
}

CurveClass make_curve(const DatumPtr& datum, IntVector coeffs) {
  if (coeffs.size() != datum->picard_rank()) {
    throw Error(ErrorCode::InvalidArgument, "curve needs " + std::to_string(datum->picard_rank()) + " coefficients");
  }
  return {datum, std::move(coeffs)};
}

DivisorClass basis_divisor(const DatumPtr& datum, int k) {
  datum->basis(k);
  RatVector v = RatVector::Zero(datum->picard_rank());
  v(k) = 1;
  return {datum, v};
}

CurveClass dual_curve(const DatumPtr& datum, int k) {
  datum->basis(k);
  IntVector v = IntVector::Zero(datum->picard_rank());
  v(k) = 1;
  return {datum, v};
}

CurveClass operator+(const CurveClass& lhs, const CurveClass& rhs) {
  require_same(lhs.datum, rhs.datum);
  return {lhs.datum, lhs.coeffs + rhs.coeffs};
}

CurveClass operator-(const CurveClass& lhs, const CurveClass& rhs) {
  require_same(lhs.datum, rhs.datum);
  return {lhs.datum, lhs.coeffs - rhs.coeffs};
}

CurveClass operator*(Integer k, const CurveClass& c) { return {c.datum, k * c.coeffs}; }

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs) {
  require_same(lhs.datum, rhs.datum);
  return {lhs.datum, lhs.coeffs + rhs.coeffs};
}

DivisorClass operator*(const Rational& k, const DivisorClass& d) { return {d.datum, k * d.coeffs}; }

bool operator==(const CurveClass& lhs, const CurveClass& rhs) {
  return same_datum(lhs.datum, rhs.datum) && lhs.coeffs.size() == rhs.coeffs.size() && lhs.coeffs == rhs.coeffs;
}

bool operator==(const DivisorClass& lhs, const DivisorClass& rhs) {
  return same_datum(lhs.datum, rhs.datum) && lhs.coeffs.size() == rhs.coeffs.size() && lhs.coeffs == rhs.coeffs;
}

Rational rho_value(const SphericalDatum& datum, int k, const IntVector& gamma) {
  const BasisDivisor d = datum.basis(k);
  if (d.type == ColorType::a) {
    throw Error(ErrorCode::TypeAColorUnsupported, "rho is not determined per color for type (a)");
  }
  if (d.type == ColorType::p || d.moved_by.empty()) {
    throw Error(ErrorCode::RootMovesNoColor, d.id + " is moved by no simple root");
  }
  const Rational scale = d.type == ColorType::a_prime ? Rational(1, 2) : Rational(1);
  const Rational value = scale * Rational(pairing_with_root(datum.root_system, d.moved_by.front(), gamma));
  for (std::size_t j = 1; j < d.moved_by.size(); ++j) {
    const Rational other = scale * Rational(pairing_with_root(datum.root_system, d.moved_by[j], gamma));
    if (other != value) {
      throw Error(ErrorCode::RhoInconsistent,
                  d.id + ": moving roots give " + format(value) + " and " + format(other));
    }
  }
  return value;
}

BoundaryDivisor boundary_divisor(const DatumPtr& datum, int label) {
  const auto& gamma = datum->spherical_roots[boundary_row(*datum, label)];
  RatVector coeffs(datum->picard_rank());
  for (int k = 0; k < datum->picard_rank(); ++k) coeffs(k) = rho_value(*datum, k, gamma);
  return {datum, label, {datum, coeffs}};
}

RatMatrix boundary_matrix(const DatumPtr& datum) {
  RatMatrix m(datum->rank(), datum->picard_rank());
  for (int row = 0; row < datum->rank(); ++row) {
    m.row(row) = boundary_divisor(datum, datum->labels[row]).expansion.coeffs.transpose();
  }
  return m;
}

Rational pair(const DivisorClass& d, const CurveClass& c) {
  require_same(d.datum, c.datum);
  return d.coeffs.dot(to_rational(c.coeffs));
}

RatVector boundary_pairings(const CurveClass& c) { return boundary_matrix(c.datum) * to_rational(c.coeffs); }

bool is_nef(const DivisorClass& d) {
  return std::all_of(d.coeffs.data(), d.coeffs.data() + d.coeffs.size(),
                     [](const Rational& q) { return q >= 0; });
}

bool is_effective_curve(const CurveClass& c) { return (c.coeffs.array() >= 0).all(); }

bool is_movable(const CurveClass& c) {
  if (!is_effective_curve(c)) return false;
  const RatVector b = boundary_pairings(c);
  return std::all_of(b.data(), b.data() + b.size(), [](const Rational& q) { return q >= 0; });
}

CurveClass closed_orbit_pushforward(const DatumPtr& datum, const IntVector& schubert) {
  const int n = datum->root_system.rank();
  if (schubert.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "Schubert class needs " + std::to_string(n) + " coefficients");
  }
  const auto types = classify_color_types(*datum);
  IntVector out = IntVector::Zero(datum->picard_rank());
  for (int root = 0; root < n; ++root) {
    if (schubert(root) == 0) continue;
    int target = -1;
    for (int k = 0; k < datum->picard_rank() && target < 0; ++k) {
      const auto moved = datum->basis(k).moved_by;
      if (std::find(moved.begin(), moved.end(), root) != moved.end()) target = k;
    }
    if (target < 0) {
      throw Error(ErrorCode::RootMovesNoColor, "alpha" + std::to_string(root + 1) + " moves no color");
    }
    out(target) += (types[root] == ColorType::a_prime ? 2 : 1) * schubert(root);
  }
  return {datum, out};
}

ClosedOrbitLift lift_to_closed_orbit(const CurveClass& c) {
  if (!is_movable(c)) throw Error(ErrorCode::NotMovable, "curve class is not movable");
  const auto& d = *c.datum;
  const auto types = classify_color_types(d);
  bool single = true;
  for (int k = 0; k < d.picard_rank(); ++k) {
    const auto b = d.basis(k);
    if (types[b.moved_by.front()] == ColorType::a_prime && c.coeffs(k) % 2 != 0) single = false;
  }

  ClosedOrbitLift lift;
  lift.schubert = IntVector::Zero(d.root_system.rank());
  lift.multiplier = single ? 1 : 2;
  for (int k = 0; k < d.picard_rank(); ++k) {
    const auto b = d.basis(k);
    const Integer cd = c.coeffs(k);
    const bool a_prime = types[b.moved_by.front()] == ColorType::a_prime;
    if (single) {
      // One moving root carries the coefficient; a' roots push forward doubled.
      lift.schubert(b.moved_by.front()) = a_prime ? cd / 2 : cd;
    } else if (b.moved_by.size() == 1 && !a_prime) {
      lift.schubert(b.moved_by.front()) = 2 * cd;
    } else {
      for (int root : b.moved_by) lift.schubert(root) = cd;
    }
  }
  return lift;
}

IntMatrix boundary_pullback_matrix(const SphericalDatum& source, int i0, const SphericalDatum& target) {
  require_group(source);
  boundary_row(source, i0);
  IntMatrix p = IntMatrix::Zero(target.picard_rank(), source.picard_rank());
  const std::string split = "D" + std::to_string(i0 + 1);
  for (int k = 0; k < source.picard_rank(); ++k) {
    const std::string id = source.basis(k).id;
    std::vector<std::string> images = id == split ? std::vector<std::string>{split + "+", split + "-"}
                                                  : std::vector<std::string>{id};
    for (const auto& image : images) {
      const int t = target.basis_index(image);
      if (t < 0) throw Error(ErrorCode::DatumMismatch, "target datum has no divisor " + image);
      p(t, k) = 1;
    }
  }
  return p;
}

DivisorClass color_pullback(const DivisorClass& d, int i0) {
  require_group(*d.datum);
  return color_pullback(d, i0, subvariety_datum(d.datum, {i0}));
}

DivisorClass color_pullback(const DivisorClass& d, int i0, const DatumPtr& target) {
  const IntMatrix p = boundary_pullback_matrix(*d.datum, i0, *target);
  return {target, to_rational(p) * d.coeffs};
}

}  // namespace wonderlat
