#include "wonderlat/limit.hpp"

#include <algorithm>

namespace wonderlat {

namespace {

void require_group(const SphericalDatum& d) {
  if (!d.group_based()) throw Error(ErrorCode::NotGroupKind, "limit maps are defined for group compactifications only");
}

void consistency(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ConsistencyFailure, what);
}

}  // namespace

IntVector adapted_pairings(const SphericalDatum& datum, int i0) {
  require_group(datum);
  const int r = datum.top_rank;
  if (i0 < 0 || i0 >= r) throw Error(ErrorCode::IndexOutOfRange, "label " + std::to_string(i0 + 1));
  const RootSystem& rs = datum.root_system;
  IntVector out(r);
  for (int i = 0; i < r; ++i) {
    RatVector alpha_bar = RatVector::Zero(rs.rank());
    alpha_bar(i) = 1;
    alpha_bar(r + i) = 1;
    const Rational value = coweight_pairing(rs, i0, alpha_bar);
    consistency(is_integral(value) && value == Rational(i == i0 ? 1 : 0),
                "coweight " + std::to_string(i0 + 1) + " is not adapted: pairing " + format(value) +
                    " with spherical root " + std::to_string(i + 1));
    out(i) = value.numerator();
  }
  return out;
}

CurveClass inclusion_pushforward(const CurveClass& c, int i0, const DatumPtr& source) {
  const IntMatrix p = boundary_pullback_matrix(*source, i0, *c.datum);
  if (c.coeffs.size() != p.rows()) throw Error(ErrorCode::InvalidArgument, "curve does not live on the stratum");
  return {source, p.transpose() * c.coeffs};
}

LimitStep limit_pushforward(const CurveClass& eta, int i0) {
  const DatumPtr& source = eta.datum;
  require_group(*source);
  if (source->boundary_position(i0) < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "boundary label " + std::to_string(i0 + 1) + " not present");
  }
  if (!is_movable(eta)) throw Error(ErrorCode::NotMovable, "curve class is not movable");
  adapted_pairings(*source, i0);

  const DatumPtr target = subvariety_datum(source, {i0});
  const std::string split = "D" + std::to_string(i0 + 1);
  IntVector out = IntVector::Zero(target->picard_rank());
  for (int t = 0; t < target->picard_rank(); ++t) {
    const std::string id = target->basis(t).id;
    if (id == split + "+") {
      out(t) = 0;
    } else if (id == split + "-") {
      out(t) = eta.coeffs(source->basis_index(split));
    } else {
      const int k = source->basis_index(id);
      consistency(k >= 0, "basis divisor " + id + " has no source");
      out(t) = eta.coeffs(k);
    }
  }
  LimitStep step{source, i0, target, eta, {target, out}};

  consistency(out(target->basis_index(split + "+")) == 0, "a_{i0} is nonzero");
  consistency(inclusion_pushforward(step.output, i0, source) == eta, "pushforward does not recover the input class");
  for (int k = 0; k < source->picard_rank(); ++k) {
    const DivisorClass d = basis_divisor(source, k);
    consistency(pair(color_pullback(d, i0, target), step.output) == pair(d, eta),
                "projection formula fails for " + source->basis(k).id);
  }
  return step;
}

DegenerationChain degeneration_chain(const CurveClass& eta, std::optional<std::vector<int>> order) {
  require_group(*eta.datum);
  std::vector<int> labels = eta.datum->labels;
  if (!order) {
    order = labels;
    std::reverse(order->begin(), order->end());
  } else {
    std::vector<int> sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != labels) {
      throw Error(ErrorCode::InvalidArgument, "order must be a permutation of the boundary labels");
    }
  }
  DegenerationChain chain{eta, {}};
  CurveClass current = eta;
  for (int i0 : *order) {
    chain.steps.push_back(limit_pushforward(current, i0));
    current = chain.steps.back().output;
  }
  return chain;
}

}  // namespace wonderlat
