#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonderlat/lattice.hpp"

namespace wonderlat {

enum class MCircStatus { yes_group_direct, yes_for_doubled, unknown };
enum class NonemptinessMode { group_direct, doubled_class, assumed, unknown };

const char* to_string(MCircStatus status);
const char* to_string(NonemptinessMode mode);

/// Whether M°_{0,0}(X, eta) is known to be nonempty. Group compactifications
/// answer directly; otherwise only eta = 2 eta' with eta' movable is known.
/// Throws NotMovable.
MCircStatus m_circ_nonempty(const CurveClass& eta);

struct Certificate {
  CurveClass eta;
  CurveClass eta1;
  CurveClass eta2;
  std::optional<int> witness;  // boundary label with <X_i, eta2> <= -2
  std::optional<Rational> gap;
  NonemptinessMode mode = NonemptinessMode::unknown;
  bool valid = false;
  std::vector<std::string> violations;
  int stage = 0;  // 1 constructive, 2 exhaustive, 0 checked directly
};

/// 1 + |I1| + |I2| + sum_{I1} <X_i, eta1> + sum_{I2} <X_i, eta2> with
/// I_j = { i : <X_i, eta_j> < 0 }. Throws DatumMismatch, NotEffective.
Rational reducibility_gap(const CurveClass& eta1, const CurveClass& eta2);

/// Validates a decomposition eta = eta1 + eta2; never throws on bad input,
/// every failed hypothesis is listed in the certificate.
Certificate check_certificate(const CurveClass& eta, const CurveClass& eta1, const CurveClass& eta2,
                              bool assume_nonempty = false);

/// Constructive search at a nonextremal simple root of a factor of rank >= 3.
/// Group compactifications only; nullopt when no candidate exists.
std::optional<Certificate> stage1_certificate(const CurveClass& eta, bool assume_nonempty = false);

/// First valid decomposition with 0 <= eta1 <= eta in lexicographic order.
std::optional<Certificate> stage2_certificate(const CurveClass& eta, bool assume_nonempty = false);

/// Stage 1, then stage 2. Throws NotMovable; nullopt for eta = 0.
std::optional<Certificate> find_certificate(const CurveClass& eta, bool assume_nonempty = false);

struct DimensionReport {
  std::optional<Integer> dim_x;
  Rational boundary_sum;                    // sum_i <X_i, eta>
  std::optional<Rational> pairing_minus_kx; // <-K_X, eta>
  int n = 0;
  std::optional<Rational> expected_dim;
  std::optional<Rational> m_circ_dim;
};

/// <-K_X, eta> = sum_i <X_i, eta> + sum_D a_D c_D and
/// dim X + <-K_X, eta> + n - 3, when a_D and dim X are supplied.
/// Throws NegativeAnticanonicalCoeff, InvalidArgument on arity mismatch.
DimensionReport expected_dimension(const CurveClass& eta, int n, std::optional<Integer> dim_x,
                                   const std::optional<IntVector>& anticanonical_color_coeffs);

}  // namespace wonderlat
