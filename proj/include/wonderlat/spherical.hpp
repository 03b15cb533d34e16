#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wonderlat/error.hpp"
#include "wonderlat/rootsys.hpp"

namespace wonderlat {

/// How a simple root acts on the colors: moves none (p), two with alpha a
/// spherical root (a), one with 2 alpha spherical (a'), one otherwise (b).
enum class ColorType { p, a, a_prime, b };

const char* to_string(ColorType type);

enum class DatumKind { group_compactification, generic_symmetric, subvariety };

const char* to_string(DatumKind kind);

struct Color {
  std::string id;
  std::vector<int> moved_by;  // sorted simple-root indices
  ColorType type = ColorType::b;
  // B^- weight of the restriction to the closed orbit, in fundamental-weight
  // coordinates. Empty for colors moved by an exceptional simple root.
  std::optional<IntVector> weight;
};

/// Pulled-back Schubert divisor on a boundary stratum X_I. In the group case
/// each removed label i contributes D_i^+ (moved by alpha_i) and D_i^- (moved
/// by beta_i).
struct SchubertDivisor {
  std::string id;
  int moving_root = 0;
  int label = 0;  // boundary label whose removal produced it
  IntVector weight;
};

/// Element of the Picard basis: colors first, then Schubert divisors.
struct BasisDivisor {
  std::string id;
  std::vector<int> moved_by;
  ColorType type;
  bool schubert;
};

/// Combinatorial data of a wonderful symmetric variety or of one of its
/// closed G-stable subvarieties X_I. Boundary divisors keep the label of the
/// top-level variety, so the strata of X_I are indexed by labels not in I.
struct SphericalDatum {
  RootSystem root_system;
  std::vector<int> s_p;
  std::vector<IntVector> spherical_roots;
  std::vector<int> labels;  // boundary label of each spherical root
  std::vector<Color> colors;
  std::vector<SchubertDivisor> schubert_extras;

  DatumKind kind = DatumKind::generic_symmetric;
  DatumKind base_kind = DatumKind::generic_symmetric;
  std::optional<DynkinType> group_type;  // G, when base_kind is a group compactification
  int top_rank = 0;                      // rank of the top-level variety
  std::vector<int> removed;              // I
  std::vector<int> levi_roots;           // S_I

  int rank() const { return static_cast<int>(spherical_roots.size()); }
  int picard_rank() const { return static_cast<int>(colors.size() + schubert_extras.size()); }
  bool group_based() const { return base_kind == DatumKind::group_compactification; }

  BasisDivisor basis(int k) const;
  int basis_index(const std::string& id) const;  // -1 when absent
  int boundary_position(int label) const;        // -1 when absent
  std::vector<std::string> basis_ids() const;

  /// A_{G,X}; always empty since type-(a) roots are rejected.
  std::vector<std::string> a_colors() const { return {}; }
};

bool operator==(const SphericalDatum& lhs, const SphericalDatum& rhs);

using DatumPtr = std::shared_ptr<const SphericalDatum>;

bool same_datum(const DatumPtr& lhs, const DatumPtr& rhs);

/// Wonderful compactification of the adjoint group with root system `g`,
/// seen as a symmetric space of G x G. Roots 0..r-1 are the alpha_i, r..2r-1
/// the beta_i, with spherical roots alpha_i + beta_i.
DatumPtr group_datum(const RootSystem& g);
DatumPtr group_datum(const DynkinType& g);

struct ColorSpec {
  std::string id;
  std::vector<int> moved_by;
};

/// Builds and validates a generic symmetric datum. Color types and weights
/// are derived; throws ValidationError with every violated invariant.
DatumPtr make_symmetric_datum(const DynkinType& dynkin, std::vector<int> s_p,
                              std::vector<IntVector> spherical_roots, std::vector<ColorSpec> colors);

/// Color type of every simple root. Throws TypeAColorUnsupported if a simple
/// root is itself a spherical root.
std::vector<ColorType> classify_color_types(const SphericalDatum& datum);

/// Boundary label of the spherical root associated with a simple root
/// outside S^p (the root with that simple root in its support), or -1.
int associated_label(const SphericalDatum& datum, int simple_root);

/// Labels of spherical roots alpha - sigma(alpha) with alpha exceptional.
std::vector<int> exceptional_labels(const SphericalDatum& datum);

/// Datum of X_I. Labels in I must be boundary labels of `datum`.
DatumPtr subvariety_datum(const DatumPtr& datum, std::vector<int> removed);

/// Datum of the closed orbit.
DatumPtr closed_orbit_datum(const DatumPtr& datum);

int picard_rank(const SphericalDatum& datum);

/// Checks every structural invariant; empty on success.
std::vector<Violation> validate_datum(const SphericalDatum& datum);

}  // namespace wonderlat
