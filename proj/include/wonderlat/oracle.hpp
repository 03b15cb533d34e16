#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wonderlat/spherical.hpp"

namespace wonderlat::oracle {

// Independent recomputations used by the test suites. Everything here works
// from the hand-entered tables under fixtures/ and plain loops; nothing calls
// into the lattice, reducibility or limit code.

/// WONDERLAT_FIXTURES if set, else the fixtures/ directory of the source tree.
std::string fixture_dir();

/// Cartan table of a simple type such as "F4", or block-diagonal for a
/// product "G2xA1". Throws FixtureMissing.
IntMatrix cartan_fixture(const std::string& type);
BoolMatrix adjacency_fixture(const std::string& type);

/// <X_i, [C_{D_j}]> = alpha_j^vee(alpha_i), read straight from the table.
/// Throws NotGroupKind for data that are not group compactifications.
IntMatrix boundary_matrix_oracle(const SphericalDatum& datum);
IntMatrix boundary_matrix_oracle(const std::string& type);

/// (<X_i, eta>)_i for a group compactification of `type`.
IntVector boundary_pairings_oracle(const std::string& type, const IntVector& eta);

/// Expansion of X_label on X_I for the group compactification of `type`,
/// keyed by basis id ("D1", "D2+", ...).
std::map<std::string, Integer> subvariety_expansion_oracle(const std::string& type, const std::vector<int>& removed,
                                                           int label);

bool movable_oracle(const std::string& type, const IntVector& eta);

Integer gap_oracle(const std::string& type, const IntVector& eta1, const IntVector& eta2);

struct Split {
  IntVector eta1;
  IntVector eta2;
  int witness;
  Integer gap;
};

/// First split of the box 0 <= eta1 <= eta (lexicographic) that satisfies
/// every hypothesis of the reducibility criterion, nonemptiness taken as
/// given for group compactifications.
std::optional<Split> exhaustive_certificate_oracle(const std::string& type, const IntVector& eta);

/// Basis id -> coefficient after running the limit bookkeeping along
/// `order` (0-based labels).
std::map<std::string, Integer> limit_chain_oracle(const IntVector& eta, const std::vector<int>& order);

/// Fundamental-coweight pairings <omega_{i0}^vee, alpha_i + beta_i>, by a
/// floating-point solve on the doubled table, rounded.
IntVector adapted_pairings_oracle(const std::string& type, int i0);

/// Color weight in fundamental-weight coordinates from the case table:
/// 2 omega (2 alpha spherical), omega_alpha + omega_alpha' (two roots),
/// omega_alpha otherwise. Nonexceptional colors only.
IntVector color_weight_oracle(int n, const std::vector<IntVector>& spherical_roots, const std::vector<int>& moved_by);

/// dim X + sum_i <X_i, eta> + a . eta + n - 3 for a group compactification.
Integer expected_dimension_oracle(const std::string& type, const IntVector& eta, const IntVector& a, Integer dim_x,
                                  int n);

struct Pgl4Golden {
  IntVector eta, eta1, eta2;
  IntVector pair_eta, pair_eta1, pair_eta2;
};

/// The worked PGL4 example, entered by hand.
Pgl4Golden pgl4_golden();

}  // namespace wonderlat::oracle
