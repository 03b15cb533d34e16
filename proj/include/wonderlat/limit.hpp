#pragma once

#include <optional>
#include <vector>

#include "wonderlat/lattice.hpp"

namespace wonderlat {

/// One application of the limit map X_I -> X_{I + i0} at class level.
struct LimitStep {
  DatumPtr source;
  int i0 = 0;
  DatumPtr target;
  CurveClass input;
  CurveClass output;
};

struct DegenerationChain {
  CurveClass initial;
  std::vector<LimitStep> steps;

  /// The class on the last datum of the chain (the input when empty).
  const CurveClass& terminal() const { return steps.empty() ? initial : steps.back().output; }
};

/// <omega_{i0}^vee, alpha_i + beta_i> for every boundary label i of the
/// group compactification, with omega_{i0}^vee a fundamental coweight of the
/// first factor. Throws NotGroupKind, IndexOutOfRange, and ConsistencyFailure
/// if the result is not the unit vector at i0.
IntVector adapted_pairings(const SphericalDatum& datum, int i0);

/// iota_* from X_{I + i0} to X_I: c_{i0} = a_{i0} + b_{i0}, everything else
/// carried over. `source` is the datum of X_I.
CurveClass inclusion_pushforward(const CurveClass& c, int i0, const DatumPtr& source);

/// eta-bar on X_{I + i0}: c_i kept for i outside I + i0, a_{i0} = 0,
/// b_{i0} = c_{i0}, existing Schubert coefficients kept. Every step invariant
/// is verified; a breach throws ConsistencyFailure.
/// Throws NotGroupKind, IndexOutOfRange, NotMovable.
LimitStep limit_pushforward(const CurveClass& eta, int i0);

/// Applies limit_pushforward along `order` (boundary labels, default
/// descending) down to the closed orbit.
DegenerationChain degeneration_chain(const CurveClass& eta, std::optional<std::vector<int>> order = std::nullopt);

}  // namespace wonderlat
