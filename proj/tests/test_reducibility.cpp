#include "doctest.h"

#include "test_util.hpp"
#include "wonderlat/datum_io.hpp"
#include "wonderlat/oracle.hpp"
#include "wonderlat/reducibility.hpp"

using namespace wonderlat;
using wonderlat::test::ivec;
using wonderlat::test::simple_types;

namespace {

std::string data(const std::string& name) { return std::string(WONDERLAT_TEST_DATA) + "/" + name; }

DatumPtr group(const std::string& name) { return group_datum(DynkinType::parse(name)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

bool contains(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

// Every nonzero movable class of a group compactification with
// coefficients in 0..bound.
std::vector<IntVector> movable_box(const std::string& type, int bound) {
  const int r = oracle::cartan_fixture(type).rows();
  std::vector<IntVector> out;
  IntVector c = IntVector::Zero(r);
  while (true) {
    int k = r - 1;
    while (k >= 0 && c(k) == bound) c(k--) = 0;
    if (k < 0) break;
    ++c(k);
    if (oracle::movable_oracle(type, c)) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("M° nonemptiness") {
  const auto a3 = group("A3");
  CHECK(m_circ_nonempty(make_curve(a3, ivec({1, 1, 1}))) == MCircStatus::yes_group_direct);
  CHECK(code_of([&] { m_circ_nonempty(make_curve(a3, ivec({1, 0, 0}))); }) == ErrorCode::NotMovable);
  const auto so3 = load_datum(data("sl3_so3.json"));
  CHECK(m_circ_nonempty(make_curve(so3, ivec({2, 2}))) == MCircStatus::yes_for_doubled);
  CHECK(m_circ_nonempty(make_curve(so3, ivec({1, 1}))) == MCircStatus::unknown);
  // (4, 2) halves to the movable class (2, 1).
  CHECK(m_circ_nonempty(make_curve(so3, ivec({4, 2}))) == MCircStatus::yes_for_doubled);
  CHECK(m_circ_nonempty(make_curve(so3, ivec({2, 1}))) == MCircStatus::unknown);
}

TEST_CASE("reducibility gap") {
  const auto a3 = group("A3");
  CHECK(reducibility_gap(make_curve(a3, ivec({0, 1, 0})), make_curve(a3, ivec({1, 0, 1}))) == Rational(0));
  CHECK(reducibility_gap(make_curve(a3, ivec({1, 1, 1})), make_curve(a3, ivec({1, 1, 1}))) == Rational(1));
  CHECK(code_of([&] { reducibility_gap(make_curve(a3, ivec({-1, 1, 0})), make_curve(a3, ivec({1, 0, 1}))); }) ==
        ErrorCode::NotEffective);
  CHECK(code_of([&] { reducibility_gap(make_curve(a3, ivec({0, 1, 0})), make_curve(group("B3"), ivec({1, 0, 1}))); }) ==
        ErrorCode::DatumMismatch);

  const auto a4 = group("A4");
  const IntVector eta = ivec({1, 1, 1, 1});
  const IntVector e1 = ivec({0, 1, 0, 0});
  CHECK(reducibility_gap(make_curve(a4, e1), make_curve(a4, eta - e1)) == Rational(oracle::gap_oracle("A4", e1, eta - e1)));
}

TEST_CASE("checking certificates") {
  const auto a3 = group("A3");
  const auto eta = make_curve(a3, ivec({1, 1, 1}));
  SUBCASE("the PGL4 decomposition") {
    const auto cert = check_certificate(eta, make_curve(a3, ivec({0, 1, 0})), make_curve(a3, ivec({1, 0, 1})));
    CHECK(cert.valid);
    CHECK(cert.witness == 1);
    CHECK(cert.gap == Rational(0));
    CHECK(cert.mode == NonemptinessMode::group_direct);
  }
  SUBCASE("eta2 = 0") {
    const auto cert = check_certificate(eta, eta, make_curve(a3, ivec({0, 0, 0})));
    CHECK_FALSE(cert.valid);
    CHECK(contains(cert.violations, "eta2 is zero"));
  }
  SUBCASE("eta1 = (1,0,0)") {
    const IntVector e1 = ivec({1, 0, 0});
    const auto cert = check_certificate(eta, make_curve(a3, e1), make_curve(a3, eta.coeffs - e1));
    const IntVector p2 = oracle::boundary_pairings_oracle("A3", eta.coeffs - e1);
    CHECK(p2 == ivec({-1, 1, 1}));
    CHECK_FALSE(cert.witness.has_value());
    CHECK_FALSE(cert.valid);
    CHECK(contains(cert.violations, "<= -2"));
  }
  SUBCASE("sum mismatch and other data") {
    const auto cert = check_certificate(eta, make_curve(a3, ivec({0, 1, 0})), make_curve(a3, ivec({1, 1, 1})));
    CHECK(contains(cert.violations, "eta != eta1 + eta2"));
    const auto b3 = group("B3");
    const auto other = check_certificate(eta, make_curve(b3, ivec({0, 1, 0})), make_curve(a3, ivec({1, 0, 1})));
    CHECK_FALSE(other.valid);
  }
  SUBCASE("unknown nonemptiness can be overridden") {
    const auto so3 = load_datum(data("sl3_so3.json"));
    const auto e = make_curve(so3, ivec({1, 1}));
    const auto c = check_certificate(e, make_curve(so3, ivec({1, 0})), make_curve(so3, ivec({0, 1})));
    CHECK(c.mode == NonemptinessMode::unknown);
    CHECK(contains(c.violations, "nonemptiness"));
    const auto assumed = check_certificate(e, make_curve(so3, ivec({1, 0})), make_curve(so3, ivec({0, 1})), true);
    CHECK(assumed.mode == NonemptinessMode::assumed);
  }
}

TEST_CASE("valid certificates satisfy the gap chain and scale") {
  for (const auto& type : {std::string("A4"), std::string("B3"), std::string("D4")}) {
    const auto d = group(type);
    for (const auto& c : movable_box(type, 2)) {
      const auto cert = find_certificate(make_curve(d, c));
      REQUIRE(cert);
      CHECK(*cert->gap <= Rational(0));
      for (Integer k = 2; k <= 3; ++k) {
        const auto scaled = check_certificate(make_curve(d, k * c), make_curve(d, k * cert->eta1.coeffs),
                                              make_curve(d, k * cert->eta2.coeffs));
        CHECK(scaled.valid);
      }
    }
  }
}

TEST_CASE("find_certificate examples") {
  SUBCASE("A3") {
    const auto a3 = group("A3");
    const auto cert = find_certificate(make_curve(a3, ivec({1, 1, 1})));
    REQUIRE(cert);
    CHECK(cert->stage == 1);
    CHECK(cert->eta1.coeffs == ivec({0, 1, 0}));
    CHECK(cert->eta2.coeffs == ivec({1, 0, 1}));
    CHECK(cert->witness == 1);
  }
  SUBCASE("A1 never certifies") {
    const auto a1 = group("A1");
    for (Integer c = 0; c <= 6; ++c) CHECK_FALSE(find_certificate(make_curve(a1, ivec({c}))));
  }
  SUBCASE("D4 central node") {
    const auto d4 = group("D4");
    // (1,1,1,1) pairs to -1 with X2, so the smallest movable class with full
    // support doubles the central coefficient.
    CHECK(code_of([&] { find_certificate(make_curve(d4, ivec({1, 1, 1, 1}))); }) == ErrorCode::NotMovable);
    const auto cert = find_certificate(make_curve(d4, ivec({1, 2, 1, 1})));
    REQUIRE(cert);
    CHECK(cert->stage == 1);
    CHECK(cert->eta1.coeffs == ivec({0, 2, 0, 0}));
    CHECK(cert->eta2.coeffs == ivec({1, 0, 1, 1}));
    CHECK(boundary_pairings(cert->eta2)(1) == Rational(-3));
    const auto exhaustive = oracle::exhaustive_certificate_oracle("D4", ivec({1, 2, 1, 1}));
    CHECK(exhaustive.has_value());
  }
  SUBCASE("B3 agrees with the exhaustive oracle") {
    const auto b3 = group("B3");
    // (1,1,1) pairs to -1 with X2 since alpha3^vee(alpha2) = -2.
    CHECK_FALSE(is_movable(make_curve(b3, ivec({1, 1, 1}))));
    const auto c = ivec({1, 2, 1});
    REQUIRE(is_movable(make_curve(b3, c)));
    const auto cert = find_certificate(make_curve(b3, c));
    const auto split = oracle::exhaustive_certificate_oracle("B3", c);
    REQUIRE(cert);
    REQUIRE(split);
    const auto s2 = stage2_certificate(make_curve(b3, c));
    REQUIRE(s2);
    CHECK(s2->eta1.coeffs == split->eta1);
    CHECK(s2->witness == split->witness);
    CHECK(s2->gap == Rational(split->gap));
  }
  SUBCASE("preconditions") {
    const auto a3 = group("A3");
    CHECK(code_of([&] { find_certificate(make_curve(a3, ivec({1, 0, 0}))); }) == ErrorCode::NotMovable);
    CHECK_FALSE(find_certificate(make_curve(a3, ivec({0, 0, 0}))));
  }
  SUBCASE("rank two is outside stage 1") {
    for (const char* type : {"A2", "B2", "G2"}) {
      const auto d = group(type);
      for (const auto& c : movable_box(type, 3)) CHECK_FALSE(stage1_certificate(make_curve(d, c)));
    }
  }
}

TEST_CASE("stage 1 and stage 2 agree on validity") {
  for (const auto& type : simple_types(3, 6)) {
    CAPTURE(type);
    const auto d = group(type);
    for (const auto& c : movable_box(type, 2)) {
      const auto eta = make_curve(d, c);
      const auto s1 = stage1_certificate(eta);
      const auto s2 = stage2_certificate(eta);
      CHECK((s1 && s1->valid) == s2.has_value());
    }
  }
}

TEST_CASE("stage 1 uses a factor of rank at least 3") {
  const auto d = group("A1xA3");
  const auto cert = find_certificate(make_curve(d, ivec({1, 1, 1, 1})));
  REQUIRE(cert);
  CHECK(cert->stage == 1);
  CHECK(cert->eta1.coeffs == ivec({0, 0, 1, 0}));
}

TEST_CASE("expected dimension") {
  const auto a3 = group("A3");
  const auto eta = make_curve(a3, ivec({1, 1, 1}));
  const IntVector a = ivec({2, 2, 2});
  const auto r0 = expected_dimension(eta, 0, 15, a);
  const auto r1 = expected_dimension(eta, 1, 15, a);
  REQUIRE(r0.expected_dim);
  CHECK(*r1.expected_dim == *r0.expected_dim + 1);
  CHECK(*r0.expected_dim == Rational(oracle::expected_dimension_oracle("A3", eta.coeffs, a, 15, 0)));
  CHECK(r0.m_circ_dim == r0.expected_dim);
  CHECK(r0.boundary_sum == Rational(2));
  CHECK(*r0.pairing_minus_kx == Rational(8));

  const auto zero = expected_dimension(make_curve(a3, ivec({0, 0, 0})), 3, 15, a);
  CHECK(*zero.expected_dim == Rational(15));

  const auto partial = expected_dimension(eta, 0, std::nullopt, std::nullopt);
  CHECK_FALSE(partial.pairing_minus_kx);
  CHECK_FALSE(partial.expected_dim);
  CHECK(partial.boundary_sum == Rational(2));
  const auto no_dim = expected_dimension(eta, 0, std::nullopt, a);
  CHECK(no_dim.pairing_minus_kx);
  CHECK_FALSE(no_dim.expected_dim);

  CHECK(code_of([&] { expected_dimension(eta, 0, 15, ivec({1, -1, 0})); }) == ErrorCode::NegativeAnticanonicalCoeff);
  CHECK(code_of([&] { expected_dimension(eta, 0, 15, ivec({1})); }) == ErrorCode::InvalidArgument);
}
