#include "doctest.h"

#include <random>

#include "test_util.hpp"
#include "wonderlat/datum_io.hpp"
#include "wonderlat/lattice.hpp"
#include "wonderlat/limit.hpp"
#include "wonderlat/oracle.hpp"

using namespace wonderlat;
using wonderlat::test::ivec;
using wonderlat::test::rvec;
using wonderlat::test::simple_types;

namespace {

std::string data(const std::string& name) { return std::string(WONDERLAT_TEST_DATA) + "/" + name; }

DatumPtr group(const char* name) { return group_datum(DynkinType::parse(name)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("rho values") {
  const auto a3 = group("A3");
  CHECK(rho_value(*a3, 1, a3->spherical_roots[0]) == Rational(-1));
  for (int i = 0; i < 3; ++i) CHECK(rho_value(*a3, i, a3->spherical_roots[i]) == Rational(2));
  const auto so = load_datum(data("sl2_so2.json"));
  CHECK(rho_value(*so, 0, ivec({2})) == Rational(2));
  // Half-integers come only from a' colors.
  CHECK(rho_value(*so, 0, ivec({1})) == Rational(1));
  CHECK(rho_value(*so, 0, ivec({3})) == Rational(3));
  const auto so3 = load_datum(data("sl3_so3.json"));
  CHECK(rho_value(*so3, 0, ivec({0, 1})) == Rational(-1, 2));
}

TEST_CASE("inconsistent rho values are reported") {
  SphericalDatum d = *group("A2");
  // Both roots of D1 must see gamma alike; alpha_1 alone breaks that.
  CHECK(code_of([&] { rho_value(d, 0, ivec({1, 0, 0, 0})); }) == ErrorCode::RhoInconsistent);
}

TEST_CASE("boundary divisors") {
  const auto a3 = group("A3");
  CHECK(boundary_divisor(a3, 1).expansion.coeffs == rvec({-1, 2, -1}));
  CHECK(boundary_divisor(group("A1"), 0).expansion.coeffs == rvec({2}));
  CHECK(code_of([&] { boundary_divisor(a3, 3); }) == ErrorCode::IndexOutOfRange);

  const auto x = subvariety_datum(a3, {1});
  const auto x1 = boundary_divisor(x, 0);
  CHECK(x->basis_ids() == std::vector<std::string>{"D1", "D3", "D2+", "D2-"});
  CHECK(x1.expansion.coeffs == rvec({2, 0, -1, -1}));
  const auto expected = oracle::subvariety_expansion_oracle("A3", {1}, 0);
  for (int k = 0; k < x->picard_rank(); ++k) {
    CHECK(x1.expansion.coeffs(k) == Rational(expected.at(x->basis(k).id)));
  }
}

TEST_CASE("subvariety expansions agree with the oracle") {
  for (const char* name : {"A4", "B3", "C3", "D4", "F4", "G2"}) {
    CAPTURE(name);
    const auto d = group(name);
    const int r = d->rank();
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const auto x = subvariety_datum(d, {i, j});
        for (int label : x->labels) {
          const auto expected = oracle::subvariety_expansion_oracle(name, {i, j}, label);
          const auto b = boundary_divisor(x, label);
          for (int k = 0; k < x->picard_rank(); ++k) {
            CHECK(b.expansion.coeffs(k) == Rational(expected.at(x->basis(k).id)));
          }
        }
      }
    }
  }
}

TEST_CASE("group boundary matrix equals the Cartan oracle") {
  for (const auto& name : simple_types(1, 8)) {
    CAPTURE(name);
    const auto d = group(name.c_str());
    CHECK(boundary_matrix(d) == to_rational(oracle::boundary_matrix_oracle(*d)));
  }
  CHECK(boundary_matrix(group("G2xA1")) == to_rational(oracle::boundary_matrix_oracle("G2xA1")));
}

TEST_CASE("duality of the bases") {
  for (const char* name : {"A3", "E6", "G2"}) {
    const auto d = group(name);
    for (const auto& x : {d, subvariety_datum(d, {0}), closed_orbit_datum(d)}) {
      for (int i = 0; i < x->picard_rank(); ++i) {
        for (int j = 0; j < x->picard_rank(); ++j) {
          CHECK(pair(basis_divisor(x, i), dual_curve(x, j)) == Rational(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const auto d = subvariety_datum(group("B4"), {2});
  const int n = d->picard_rank();
  auto rand_int = [&] {
    IntVector v(n);
    for (int k = 0; k < n; ++k) v(k) = coeff(rng);
    return v;
  };
  auto rand_rat = [&] {
    RatVector v(n);
    for (int k = 0; k < n; ++k) v(k) = Rational(coeff(rng), 2);
    return v;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto c1 = make_curve(d, rand_int());
    const auto c2 = make_curve(d, rand_int());
    const auto d1 = make_divisor(d, rand_rat());
    const auto d2 = make_divisor(d, rand_rat());
    CHECK(pair(d1, c1 + c2) == pair(d1, c1) + pair(d1, c2));
    CHECK(pair(d1 + d2, c1) == pair(d1, c1) + pair(d2, c1));
    CHECK(pair(Rational(3) * d1, c1) == Rational(3) * pair(d1, c1));
    CHECK(pair(d1, Integer(-2) * c1) == Rational(-2) * pair(d1, c1));
    CHECK((c1 + c2) - c2 == c1);
  }
}

TEST_CASE("datum and arity checks") {
  const auto a3 = group("A3");
  const auto b3 = group("B3");
  CHECK(code_of([&] { pair(basis_divisor(a3, 0), dual_curve(b3, 0)); }) == ErrorCode::DatumMismatch);
  CHECK(code_of([&] { make_curve(a3, ivec({1, 1})); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { make_divisor(a3, rvec({1})); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { basis_divisor(a3, 3); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("PGL4 pairings") {
  const auto a3 = group("A3");
  const auto g = oracle::pgl4_golden();
  CHECK(boundary_pairings(make_curve(a3, g.eta)) == to_rational(g.pair_eta));
  CHECK(boundary_pairings(make_curve(a3, g.eta1)) == to_rational(g.pair_eta1));
  CHECK(boundary_pairings(make_curve(a3, g.eta2)) == to_rational(g.pair_eta2));
}

TEST_CASE("cones") {
  const auto a3 = group("A3");
  CHECK(is_movable(make_curve(a3, ivec({1, 1, 1}))));
  CHECK_FALSE(is_movable(make_curve(a3, ivec({1, 0, 0}))));
  CHECK(is_effective_curve(make_curve(a3, ivec({1, 0, 0}))));
  CHECK_FALSE(is_effective_curve(make_curve(a3, ivec({1, -1, 0}))));
  CHECK(is_nef(basis_divisor(a3, 0)));
  CHECK_FALSE(is_nef(boundary_divisor(a3, 1).expansion));
  // Movable classes are nonnegative on every color and boundary divisor.
  for (Integer a = 0; a <= 3; ++a) {
    for (Integer b = 0; b <= 3; ++b) {
      for (Integer c = 0; c <= 3; ++c) {
        const auto eta = make_curve(a3, ivec({a, b, c}));
        if (!is_movable(eta)) continue;
        for (int k = 0; k < 3; ++k) {
          CHECK(pair(basis_divisor(a3, k), eta) >= Rational(0));
          CHECK(pair(boundary_divisor(a3, k).expansion, eta) >= Rational(0));
        }
      }
    }
  }
}

TEST_CASE("closed-orbit pushforward") {
  const auto a3 = group("A3");
  CHECK(closed_orbit_pushforward(a3, ivec({0, 1, 0, 0, 0, 0})).coeffs == ivec({0, 1, 0}));
  CHECK(closed_orbit_pushforward(a3, ivec({0, 0, 0, 0, 0, 0})).is_zero());
  const auto so = load_datum(data("sl2_so2.json"));
  CHECK(closed_orbit_pushforward(so, ivec({1})).coeffs == ivec({2}));
  const auto sp = load_datum(data("sl4_sp4.json"));
  CHECK(code_of([&] { closed_orbit_pushforward(sp, ivec({1, 0, 0})); }) == ErrorCode::RootMovesNoColor);
  CHECK(closed_orbit_pushforward(sp, ivec({0, 3, 0})).coeffs == ivec({3}));
}

TEST_CASE("lift to the closed orbit") {
  const auto a3 = group("A3");
  const auto lift = lift_to_closed_orbit(make_curve(a3, ivec({1, 1, 1})));
  CHECK(lift.multiplier == 1);
  CHECK(lift.schubert == ivec({1, 1, 1, 0, 0, 0}));
  const auto zero = lift_to_closed_orbit(make_curve(a3, ivec({0, 0, 0})));
  CHECK(zero.multiplier == 1);
  CHECK(zero.schubert.isZero());

  const auto so = load_datum(data("sl2_so2.json"));
  const auto half = lift_to_closed_orbit(make_curve(so, ivec({1})));
  CHECK(half.multiplier == 2);
  CHECK(half.schubert == ivec({1}));
  CHECK(closed_orbit_pushforward(so, half.schubert).coeffs == ivec({2}));

  CHECK(code_of([&] { lift_to_closed_orbit(make_curve(a3, ivec({1, 0, 0}))); }) == ErrorCode::NotMovable);

  for (const char* file : {"sl3_so3.json", "sl3_gl2.json", "sl4_sp4.json", "group_a2.json"}) {
    CAPTURE(file);
    const auto d = load_datum(data(file));
    const int n = d->picard_rank();
    for (int t = 0; t < 81; ++t) {
      IntVector c(n);
      int rest = t;
      for (int k = 0; k < n; ++k, rest /= 9) c(k) = rest % 9;
      const auto eta = make_curve(d, c);
      if (!is_movable(eta)) continue;
      const auto l = lift_to_closed_orbit(eta);
      CHECK((l.schubert.array() >= 0).all());
      CHECK(closed_orbit_pushforward(d, l.schubert).coeffs == Integer(l.multiplier) * c);
      if (d->group_based()) CHECK(l.multiplier == 1);
    }
  }
}

TEST_CASE("color pullback") {
  const auto a3 = group("A3");
  const auto x = subvariety_datum(a3, {1});
  const auto d2 = color_pullback(basis_divisor(a3, 1), 1);
  CHECK(*d2.datum == *x);
  CHECK(d2.coeffs == rvec({0, 0, 1, 1}));
  CHECK(color_pullback(basis_divisor(a3, 0), 1).coeffs == rvec({1, 0, 0, 0}));
  CHECK(code_of([&] { color_pullback(basis_divisor(x, 0), 1); }) == ErrorCode::IndexOutOfRange);
  const auto so = load_datum(data("sl2_so2.json"));
  CHECK(code_of([&] { color_pullback(basis_divisor(so, 0), 0); }) == ErrorCode::NotGroupKind);
}

TEST_CASE("color pullbacks commute") {
  const auto a3 = group("A3");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto target = subvariety_datum(a3, {i, j});
      for (int k = 0; k < 3; ++k) {
        const auto d = basis_divisor(a3, k);
        const auto ij = color_pullback(color_pullback(d, i), j, target);
        const auto ji = color_pullback(color_pullback(d, j), i, target);
        CHECK(ij.coeffs == ji.coeffs);
      }
    }
  }
}

TEST_CASE("projection formula for random classes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const char* name : {"A3", "C4", "E6"}) {
    const auto d = group(name);
    for (int i0 = 0; i0 < d->rank(); ++i0) {
      const auto target = subvariety_datum(d, {i0});
      for (int trial = 0; trial < 10; ++trial) {
        IntVector c(target->picard_rank());
        for (int k = 0; k < c.size(); ++k) c(k) = coeff(rng);
        const CurveClass eta_bar = make_curve(target, c);
        const CurveClass eta = inclusion_pushforward(eta_bar, i0, d);
        for (int k = 0; k < d->picard_rank(); ++k) {
          const auto D = basis_divisor(d, k);
          CHECK(pair(color_pullback(D, i0, target), eta_bar) == pair(D, eta));
        }
      }
    }
  }
}
