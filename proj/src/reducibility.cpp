#include "wonderlat/reducibility.hpp"

#include <algorithm>

namespace wonderlat {

const char* to_string(MCircStatus status) {
  switch (status) {
    case MCircStatus::yes_group_direct: return "yes_group_direct";
    case MCircStatus::yes_for_doubled: return "yes_for_doubled";
    case MCircStatus::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(NonemptinessMode mode) {
  switch (mode) {
    case NonemptinessMode::group_direct: return "group_direct";
    case NonemptinessMode::doubled_class: return "doubled_class";
    case NonemptinessMode::assumed: return "assumed";
    case NonemptinessMode::unknown: return "unknown";
  }
  return "?";
}

MCircStatus m_circ_nonempty(const CurveClass& eta) {
  if (!is_movable(eta)) throw Error(ErrorCode::NotMovable, "curve class is not movable");
  if (eta.datum->group_based()) return MCircStatus::yes_group_direct;
  const bool even = eta.coeffs.unaryExpr([](Integer x) { return x % 2; }).isZero();
  if (even && is_movable(CurveClass{eta.datum, eta.coeffs / 2})) return MCircStatus::yes_for_doubled;
  return MCircStatus::unknown;
}

namespace {

NonemptinessMode mode_of(MCircStatus status) {
  switch (status) {
    case MCircStatus::yes_group_direct: return NonemptinessMode::group_direct;
    case MCircStatus::yes_for_doubled: return NonemptinessMode::doubled_class;
    case MCircStatus::unknown: return NonemptinessMode::unknown;
  }
  return NonemptinessMode::unknown;
}

Rational gap_from_pairings(const RatVector& p1, const RatVector& p2) {
  Rational gap = 1;
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    if (p1(i) < 0) gap += 1 + p1(i);
    if (p2(i) < 0) gap += 1 + p2(i);
  }
  return gap;
}

// Everything that depends on eta alone, shared across candidate splits.
struct Context {
  CurveClass eta;
  RatMatrix boundary;
  RatVector eta_pairings;
  bool movable = false;
  NonemptinessMode mode = NonemptinessMode::unknown;

  Context(const CurveClass& c, bool assume_nonempty) : eta(c) {
    boundary = boundary_matrix(c.datum);
    eta_pairings = boundary * to_rational(c.coeffs);
    movable = is_effective_curve(c) &&
              std::all_of(eta_pairings.data(), eta_pairings.data() + eta_pairings.size(),
                          [](const Rational& q) { return q >= 0; });
    if (assume_nonempty) {
      mode = NonemptinessMode::assumed;
    } else if (movable) {
      mode = mode_of(m_circ_nonempty(c));
    }
  }

  Certificate check(const CurveClass& eta1, const CurveClass& eta2) const {
    Certificate cert;
    cert.eta = eta;
    cert.eta1 = eta1;
    cert.eta2 = eta2;
    cert.mode = mode;
    auto& v = cert.violations;
    if (!same_datum(eta.datum, eta1.datum) || !same_datum(eta.datum, eta2.datum)) {
      v.push_back("classes live on different data");
      return cert;
    }
    if (eta1.coeffs.size() != eta.coeffs.size() || eta2.coeffs.size() != eta.coeffs.size()) {
      v.push_back("coefficient count differs from the Picard rank");
      return cert;
    }
    if (eta1.coeffs + eta2.coeffs != eta.coeffs) v.push_back("eta != eta1 + eta2");
    if (eta1.is_zero()) v.push_back("eta1 is zero");
    if (eta2.is_zero()) v.push_back("eta2 is zero");
    const bool effective = is_effective_curve(eta1) && is_effective_curve(eta2);
    if (!is_effective_curve(eta1)) v.push_back("eta1 is not effective");
    if (!is_effective_curve(eta2)) v.push_back("eta2 is not effective");
    if (!movable) v.push_back("eta is not movable");

    const RatVector p1 = boundary * to_rational(eta1.coeffs);
    const RatVector p2 = boundary * to_rational(eta2.coeffs);
    for (Eigen::Index i = 0; i < p1.size(); ++i) {
      if (p1(i) < 0 && p2(i) < 0) {
        v.push_back("I1 and I2 share boundary label " + std::to_string(eta.datum->labels[i] + 1));
      }
      if (!cert.witness && p2(i) <= -2) cert.witness = eta.datum->labels[i];
    }
    if (!cert.witness) v.push_back("no boundary divisor with <X_i, eta2> <= -2");
    if (effective) {
      cert.gap = gap_from_pairings(p1, p2);
      if (*cert.gap > 0) v.push_back("dimension gap " + format(*cert.gap) + " is positive");
    }
    if (mode == NonemptinessMode::unknown) v.push_back("nonemptiness of M°(X, eta) is not established");
    cert.valid = v.empty();
    return cert;
  }
};

std::optional<int> stage1_root(const SphericalDatum& d, const IntVector& c) {
  const RootSystem& rs = d.root_system;
  const auto& factors = d.group_type->factors();
  int offset = 0;
  for (const auto& factor : factors) {
    const int begin = offset;
    const int end = offset + factor.rank;
    offset = end;
    if (factor.rank < 3) continue;
    if ((c.segment(begin, factor.rank).array() == 0).all()) continue;
    for (int i = begin; i < end; ++i) {
      if (is_nonextremal(rs, i) && c(i) > 0) return i;
    }
    for (int i = begin; i < end; ++i) {
      if (is_nonextremal(rs, i) || c(i) <= 0) continue;
      for (int j = begin; j < end; ++j) {
        if (rs.adjacency(i, j) && is_nonextremal(rs, j)) return j;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> stage1(const Context& ctx) {
  const auto& d = *ctx.eta.datum;
  if (d.kind != DatumKind::group_compactification || !d.group_type) return std::nullopt;
  const auto i0 = stage1_root(d, ctx.eta.coeffs);
  if (!i0) return std::nullopt;
  IntVector e1 = IntVector::Zero(ctx.eta.coeffs.size());
  e1(*i0) = ctx.eta.coeffs(*i0);
  Certificate cert = ctx.check({ctx.eta.datum, e1}, {ctx.eta.datum, ctx.eta.coeffs - e1});
  cert.stage = 1;
  return cert;
}

std::optional<Certificate> stage2(const Context& ctx) {
  const IntVector& c = ctx.eta.coeffs;
  if ((c.array() < 0).any()) return std::nullopt;
  IntVector e1 = IntVector::Zero(c.size());
  while (true) {
    if (!e1.isZero() && e1 != c) {
      Certificate cert = ctx.check({ctx.eta.datum, e1}, {ctx.eta.datum, c - e1});
      if (cert.valid) {
        cert.stage = 2;
        return cert;
      }
    }
    // Next vector in lexicographic order, last coordinate fastest.
    Eigen::Index k = c.size() - 1;
    while (k >= 0 && e1(k) == c(k)) e1(k--) = 0;
    if (k < 0) return std::nullopt;
    ++e1(k);
  }
}

}  // namespace

Rational reducibility_gap(const CurveClass& eta1, const CurveClass& eta2) {
  if (!same_datum(eta1.datum, eta2.datum)) throw Error(ErrorCode::DatumMismatch, "classes live on different data");
  if (!is_effective_curve(eta1) || !is_effective_curve(eta2)) {
    throw Error(ErrorCode::NotEffective, "both parts of the decomposition must be effective");
  }
  return gap_from_pairings(boundary_pairings(eta1), boundary_pairings(eta2));
}

Certificate check_certificate(const CurveClass& eta, const CurveClass& eta1, const CurveClass& eta2,
                              bool assume_nonempty) {
  return Context(eta, assume_nonempty).check(eta1, eta2);
}

std::optional<Certificate> stage1_certificate(const CurveClass& eta, bool assume_nonempty) {
  return stage1(Context(eta, assume_nonempty));
}

std::optional<Certificate> stage2_certificate(const CurveClass& eta, bool assume_nonempty) {
  return stage2(Context(eta, assume_nonempty));
}

std::optional<Certificate> find_certificate(const CurveClass& eta, bool assume_nonempty) {
  const Context ctx(eta, assume_nonempty);
  if (!ctx.movable) throw Error(ErrorCode::NotMovable, "curve class is not movable");
  if (eta.is_zero()) return std::nullopt;
  if (auto cert = stage1(ctx); cert && cert->valid) return cert;
  return stage2(ctx);
}

DimensionReport expected_dimension(const CurveClass& eta, int n, std::optional<Integer> dim_x,
                                   const std::optional<IntVector>& anticanonical_color_coeffs) {
  DimensionReport report;
  report.dim_x = dim_x;
  report.n = n;
  report.boundary_sum = boundary_pairings(eta).sum();
  if (anticanonical_color_coeffs) {
    const IntVector& a = *anticanonical_color_coeffs;
    if (a.size() != eta.coeffs.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "anticanonical coefficients need " + std::to_string(eta.coeffs.size()) + " entries");
    }
    if ((a.array() < 0).any()) {
      throw Error(ErrorCode::NegativeAnticanonicalCoeff, "anticanonical color coefficients must be nonnegative");
    }
    report.pairing_minus_kx = report.boundary_sum + Rational(a.dot(eta.coeffs));
    if (dim_x) {
      report.expected_dim = Rational(*dim_x) + *report.pairing_minus_kx + Rational(n - 3);
      report.m_circ_dim = report.expected_dim;
    }
  }
  return report;
}

}  // namespace wonderlat
