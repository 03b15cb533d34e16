#include "doctest.h"

#include "test_util.hpp"
#include "wonderlat/oracle.hpp"
#include "wonderlat/rootsys.hpp"

using namespace wonderlat;
using wonderlat::test::simple_types;

TEST_CASE("A3 Cartan matrix matches the fixture") {
  const auto rs = build_root_system(DynkinType::parse("A3"));
  CHECK(rs.cartan == oracle::cartan_fixture("A3"));
  CHECK(pairing(rs, 1, 0) == -1);
}

TEST_CASE("A1 Cartan matrix is [[2]]") {
  const auto rs = build_root_system(DynkinType::parse("A1"));
  REQUIRE(rs.cartan.rows() == 1);
  CHECK(rs.cartan(0, 0) == 2);
}

TEST_CASE("product types are block diagonal") {
  const auto rs = build_root_system(DynkinType::parse("A3xA3"));
  REQUIRE(rs.rank() == 6);
  const IntMatrix a3 = oracle::cartan_fixture("A3");
  CHECK(rs.cartan.block(0, 0, 3, 3) == a3);
  CHECK(rs.cartan.block(3, 3, 3, 3) == a3);
  CHECK(rs.cartan.block(0, 3, 3, 3).isZero());
  CHECK(rs.cartan.block(3, 0, 3, 3).isZero());
  CHECK(pairing(rs, 1, 4) == 0);
  CHECK(rs.factor_of == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(rs.factor_offset(1) == 3);
}

TEST_CASE("every fixture type: Cartan, adjacency and weight duality") {
  for (const auto& name : simple_types(1, 8)) {
    CAPTURE(name);
    const auto rs = build_root_system(DynkinType::parse(name));
    CHECK(rs.cartan == oracle::cartan_fixture(name));
    CHECK(rs.adjacency == oracle::adjacency_fixture(name));
    const int n = rs.rank();
    for (int i = 0; i < n; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan(i, j) <= 0);
        CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        CHECK((rs.cartan(i, j) != 0) == rs.adjacency(i, j));
      }
      for (int j = 0; j < n; ++j) {
        const Rational delta = i == j ? 1 : 0;
        CHECK(pairing_with_weight(rs, i, RatVector(RatVector::Unit(n, j))) == delta);
        CHECK(coweight_pairing(rs, i, RatVector(RatVector::Unit(n, j))) == delta);
        const RatVector omega = rs.fundamental_weights.col(j);
        CHECK(pairing_with_root(rs, i, omega) == delta);
      }
    }
  }
}

TEST_CASE("construction is deterministic") {
  const auto a = build_root_system(DynkinType::parse("E8"));
  const auto b = build_root_system(DynkinType::parse("E8"));
  CHECK(a.cartan == b.cartan);
  CHECK(a.fundamental_weights == b.fundamental_weights);
  CHECK(a.fundamental_coweights == b.fundamental_coweights);
}

TEST_CASE("root and weight coordinates convert both ways") {
  const auto rs = build_root_system(DynkinType::parse("G2"));
  const RatVector root = RatVector::Unit(2, 1);
  CHECK(weight_to_root_coords(rs, root_to_weight_coords(rs, root)) == root);
}

TEST_CASE("nonextremal simple roots") {
  const auto a3 = build_root_system(DynkinType::parse("A3"));
  CHECK(is_nonextremal(a3, 1));
  CHECK_FALSE(is_nonextremal(a3, 0));
  const auto d4 = build_root_system(DynkinType::parse("D4"));
  CHECK(is_nonextremal(d4, 1));
  CHECK(dynkin_degree(d4, 1) == 3);
  const auto fixture = oracle::adjacency_fixture("D4");
  CHECK(fixture.row(1).count() == 3);
  CHECK_THROWS_AS(is_nonextremal(a3, 5), Error);
}

TEST_CASE("invalid types and indices") {
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "Q2", "", "A3x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_root_system(DynkinType::parse(bad)), Error);
  }
  try {
    DynkinType::parse("E9");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRank);
  }
  const auto rs = build_root_system(DynkinType::parse("A2"));
  try {
    pairing(rs, 0, 2);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK(DynkinType::parse("g2xa1").name() == "G2xA1");
}
