#pragma once

#include <string>
#include <vector>

#include "wonderlat/types.hpp"

namespace wonderlat {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleFactor {
  Series series;
  int rank;

  std::string name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
  bool operator==(const SimpleFactor&) const = default;
};

/// A product of simple Dynkin types, e.g. "G2xA1".
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<SimpleFactor> factors);

  /// Accepts "A3", "A3xA3", "G2xA1" (case-insensitive series letters).
  static DynkinType parse(const std::string& text);
  static DynkinType simple(Series series, int rank) { return DynkinType({{series, rank}}); }

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const;
  bool is_simple() const { return factors_.size() == 1; }
  std::string name() const;

  /// The type of G x G.
  DynkinType doubled() const;

  bool operator==(const DynkinType&) const = default;

 private:
  std::vector<SimpleFactor> factors_;
};

bool valid_rank(Series series, int rank);

/// Finite root system with exact Cartan data. Simple roots are numbered
/// Bourbaki-style inside each factor, factors in input order.
///
/// Conventions:
///  - cartan(i, j) = alpha_i^vee(alpha_j), so rows are coroots.
///  - roots are vectors in simple-root coordinates; weights in
///    fundamental-weight coordinates.
///  - fundamental_weights.col(i) is omega_i in simple-root coordinates,
///    fundamental_coweights.col(i) is omega_i^vee in simple-coroot coordinates.
struct RootSystem {
  DynkinType dynkin;
  IntMatrix cartan;
  BoolMatrix adjacency;
  RatMatrix fundamental_weights;
  RatMatrix fundamental_coweights;
  std::vector<int> factor_of;  // simple root -> factor index

  int rank() const { return static_cast<int>(cartan.rows()); }

  /// First simple-root index of each factor.
  int factor_offset(int factor) const;
};

RootSystem build_root_system(const DynkinType& dynkin);

/// alpha_i^vee(alpha_j).
Integer pairing(const RootSystem& rs, int coroot_index, int root_index);

/// alpha_i^vee applied to a vector in simple-root coordinates.
template <typename Derived>
typename Derived::Scalar pairing_with_root(const RootSystem& rs, int coroot_index,
                                          const Eigen::MatrixBase<Derived>& root) {
  using Scalar = typename Derived::Scalar;
  return rs.cartan.row(coroot_index).template cast<Scalar>().dot(root.derived());
}

/// alpha_i^vee applied to a weight given in fundamental-weight coordinates.
Rational pairing_with_weight(const RootSystem& rs, int coroot_index, const RatVector& weight);

/// omega_i^vee applied to a vector in simple-root coordinates. Computed
/// through the coroot expansion of the coweight and the Cartan matrix.
Rational coweight_pairing(const RootSystem& rs, int coweight_index, const RatVector& root);

RatVector root_to_weight_coords(const RootSystem& rs, const RatVector& root);
RatVector weight_to_root_coords(const RootSystem& rs, const RatVector& weight);

int dynkin_degree(const RootSystem& rs, int i);
bool is_nonextremal(const RootSystem& rs, int i);

}  // namespace wonderlat
