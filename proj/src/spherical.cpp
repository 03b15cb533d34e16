#include "wonderlat/spherical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wonderlat {

namespace {

bool same_vector(const IntVector& a, const IntVector& b) { return a.size() == b.size() && a == b; }

IntVector unit(int n, int i, Integer value = 1) {
  IntVector v = IntVector::Zero(n);
  v(i) = value;
  return v;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string root_name(int i) { return "alpha" + std::to_string(i + 1); }

// 2 alpha is a spherical root.
bool doubled_is_spherical(const SphericalDatum& d, int root) {
  const IntVector twice = unit(d.root_system.rank(), root, 2);
  return std::any_of(d.spherical_roots.begin(), d.spherical_roots.end(),
                     [&](const IntVector& g) { return same_vector(g, twice); });
}

ColorType color_type_of(const SphericalDatum& d, const std::vector<int>& moved_by) {
  for (int root : moved_by) {
    if (doubled_is_spherical(d, root)) return ColorType::a_prime;
  }
  return ColorType::b;
}

void assign_weights(SphericalDatum& d) {
  const int n = d.root_system.rank();
  const auto exceptional = exceptional_labels(d);
  for (auto& color : d.colors) {
    if (color.moved_by.size() == 2) {
      color.weight = unit(n, color.moved_by[0]) + unit(n, color.moved_by[1]);
      continue;
    }
    if (color.moved_by.size() != 1) {
      color.weight.reset();
      continue;
    }
    const int root = color.moved_by[0];
    if (contains(exceptional, associated_label(d, root))) {
      color.weight.reset();
    } else {
      color.weight = unit(n, root, color.type == ColorType::a_prime ? 2 : 1);
    }
  }
}

void compute_levi_roots(SphericalDatum& d) {
  d.levi_roots.clear();
  for (int root = 0; root < d.root_system.rank(); ++root) {
    const bool in_sp = contains(d.s_p, root);
    const int label = in_sp ? -1 : associated_label(d, root);
    if (in_sp || (label >= 0 && d.boundary_position(label) >= 0)) d.levi_roots.push_back(root);
  }
}

}  // namespace

const char* to_string(ColorType type) {
  switch (type) {
    case ColorType::p: return "p";
    case ColorType::a: return "a";
    case ColorType::a_prime: return "a'";
    case ColorType::b: return "b";
  }
  return "?";
}

const char* to_string(DatumKind kind) {
  switch (kind) {
    case DatumKind::group_compactification: return "group_compactification";
    case DatumKind::generic_symmetric: return "generic_symmetric";
    case DatumKind::subvariety: return "subvariety";
  }
  return "?";
}

BasisDivisor SphericalDatum::basis(int k) const {
  const int ncolors = static_cast<int>(colors.size());
  if (k < 0 || k >= picard_rank()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(k));
  if (k < ncolors) return {colors[k].id, colors[k].moved_by, colors[k].type, false};
  const auto& extra = schubert_extras[k - ncolors];
  return {extra.id, {extra.moving_root}, ColorType::b, true};
}

int SphericalDatum::basis_index(const std::string& id) const {
  for (int k = 0; k < static_cast<int>(colors.size()); ++k) {
    if (colors[k].id == id) return k;
  }
  for (int k = 0; k < static_cast<int>(schubert_extras.size()); ++k) {
    if (schubert_extras[k].id == id) return static_cast<int>(colors.size()) + k;
  }
  return -1;
}

int SphericalDatum::boundary_position(int label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<std::string> SphericalDatum::basis_ids() const {
  std::vector<std::string> ids;
  for (int k = 0; k < picard_rank(); ++k) ids.push_back(basis(k).id);
  return ids;
}

bool operator==(const SphericalDatum& lhs, const SphericalDatum& rhs) {
  if (!(lhs.root_system.dynkin == rhs.root_system.dynkin) || lhs.s_p != rhs.s_p || lhs.labels != rhs.labels ||
      lhs.kind != rhs.kind || lhs.base_kind != rhs.base_kind || lhs.group_type != rhs.group_type ||
      lhs.top_rank != rhs.top_rank || lhs.removed != rhs.removed ||
      lhs.spherical_roots.size() != rhs.spherical_roots.size() || lhs.colors.size() != rhs.colors.size() ||
      lhs.schubert_extras.size() != rhs.schubert_extras.size()) {
    return false;
  }
  for (std::size_t k = 0; k < lhs.spherical_roots.size(); ++k) {
    if (!same_vector(lhs.spherical_roots[k], rhs.spherical_roots[k])) return false;
  }
  for (std::size_t k = 0; k < lhs.colors.size(); ++k) {
    const auto& a = lhs.colors[k];
    const auto& b = rhs.colors[k];
    if (a.id != b.id || a.moved_by != b.moved_by || a.type != b.type || a.weight.has_value() != b.weight.has_value())
      return false;
    if (a.weight && !same_vector(*a.weight, *b.weight)) return false;
  }
  for (std::size_t k = 0; k < lhs.schubert_extras.size(); ++k) {
    const auto& a = lhs.schubert_extras[k];
    const auto& b = rhs.schubert_extras[k];
    if (a.id != b.id || a.moving_root != b.moving_root || a.label != b.label || !same_vector(a.weight, b.weight))
      return false;
  }
  return true;
}

bool same_datum(const DatumPtr& lhs, const DatumPtr& rhs) {
  if (lhs == rhs) return true;
  return lhs && rhs && *lhs == *rhs;
}

DatumPtr group_datum(const DynkinType& g) { return group_datum(build_root_system(g)); }

DatumPtr group_datum(const RootSystem& g) {
  auto d = std::make_shared<SphericalDatum>();
  const int r = g.rank();
  d->root_system = build_root_system(g.dynkin.doubled());
  d->kind = DatumKind::group_compactification;
  d->base_kind = DatumKind::group_compactification;
  d->group_type = g.dynkin;
  d->top_rank = r;
  for (int i = 0; i < r; ++i) {
    d->spherical_roots.push_back(unit(2 * r, i) + unit(2 * r, r + i));
    d->labels.push_back(i);
    Color color;
    color.id = "D" + std::to_string(i + 1);
    color.moved_by = {i, r + i};
    color.type = ColorType::b;
    color.weight = unit(2 * r, i) + unit(2 * r, r + i);
    d->colors.push_back(std::move(color));
  }
  compute_levi_roots(*d);
  return d;
}

DatumPtr make_symmetric_datum(const DynkinType& dynkin, std::vector<int> s_p, std::vector<IntVector> spherical_roots,
                              std::vector<ColorSpec> colors) {
  auto d = std::make_shared<SphericalDatum>();
  d->root_system = build_root_system(dynkin);
  std::sort(s_p.begin(), s_p.end());
  d->s_p = std::move(s_p);
  d->spherical_roots = std::move(spherical_roots);
  for (int i = 0; i < static_cast<int>(d->spherical_roots.size()); ++i) d->labels.push_back(i);
  d->top_rank = static_cast<int>(d->spherical_roots.size());
  d->kind = DatumKind::generic_symmetric;
  d->base_kind = DatumKind::generic_symmetric;
  for (auto& spec : colors) {
    Color color;
    color.id = std::move(spec.id);
    color.moved_by = std::move(spec.moved_by);
    std::sort(color.moved_by.begin(), color.moved_by.end());
    d->colors.push_back(std::move(color));
  }
  // Types need only in-range indices; out-of-range ones are reported by validation.
  const int n = d->root_system.rank();
  for (auto& color : d->colors) {
    std::vector<int> in_range;
    std::copy_if(color.moved_by.begin(), color.moved_by.end(), std::back_inserter(in_range),
                 [n](int root) { return root >= 0 && root < n; });
    color.type = in_range.size() == color.moved_by.size() ? color_type_of(*d, in_range) : ColorType::b;
  }
  auto violations = validate_datum(*d);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  assign_weights(*d);
  compute_levi_roots(*d);
  return d;
}

std::vector<ColorType> classify_color_types(const SphericalDatum& datum) {
  const int n = datum.root_system.rank();
  std::vector<int> moves(n, 0);
  for (int k = 0; k < datum.picard_rank(); ++k) {
    for (int root : datum.basis(k).moved_by) ++moves[root];
  }
  std::vector<ColorType> types(n, ColorType::p);
  for (int root = 0; root < n; ++root) {
    for (const auto& gamma : datum.spherical_roots) {
      if (same_vector(gamma, unit(n, root))) {
        throw Error(ErrorCode::TypeAColorUnsupported, root_name(root) + " is a spherical root");
      }
    }
    if (moves[root] == 0) {
      types[root] = ColorType::p;
    } else if (doubled_is_spherical(datum, root)) {
      types[root] = ColorType::a_prime;
    } else {
      types[root] = ColorType::b;
    }
  }
  return types;
}

int associated_label(const SphericalDatum& datum, int simple_root) {
  if (simple_root < 0 || simple_root >= datum.root_system.rank()) {
    throw Error(ErrorCode::IndexOutOfRange, "simple root " + std::to_string(simple_root));
  }
  if (contains(datum.s_p, simple_root)) return -1;
  if (datum.group_based()) return simple_root % datum.top_rank;
  for (const auto& extra : datum.schubert_extras) {
    if (extra.moving_root == simple_root) return extra.label;
  }
  int found = -1;
  for (int k = 0; k < datum.rank(); ++k) {
    if (datum.spherical_roots[k](simple_root) != 0) {
      if (found >= 0) return -1;
      found = datum.labels[k];
    }
  }
  return found;
}

std::vector<int> exceptional_labels(const SphericalDatum& datum) {
  std::vector<int> out;
  if (datum.group_based()) return out;
  const int n = datum.root_system.rank();
  for (int label : datum.labels) {
    std::vector<int> roots;
    for (int root = 0; root < n; ++root) {
      if (!contains(datum.s_p, root) && associated_label(datum, root) == label) roots.push_back(root);
    }
    if (roots.size() != 2) continue;
    const bool orthogonal = datum.root_system.cartan(roots[0], roots[1]) == 0;
    bool shared_color = false;
    for (const auto& color : datum.colors) {
      shared_color = shared_color || (contains(color.moved_by, roots[0]) && contains(color.moved_by, roots[1]));
    }
    if (!orthogonal && !shared_color) out.push_back(label);
  }
  return out;
}

DatumPtr subvariety_datum(const DatumPtr& datum, std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  for (int label : removed) {
    if (datum->boundary_position(label) < 0) {
      throw Error(ErrorCode::IndexOutOfRange, "boundary label " + std::to_string(label + 1) + " not present");
    }
  }
  if (removed.empty()) return datum;

  auto d = std::make_shared<SphericalDatum>(*datum);
  d->kind = DatumKind::subvariety;
  std::vector<int> all_removed = datum->removed;
  all_removed.insert(all_removed.end(), removed.begin(), removed.end());
  std::sort(all_removed.begin(), all_removed.end());
  d->removed = all_removed;

  // Association must be read off the parent before its spherical roots go away.
  std::vector<Color> kept;
  for (const auto& color : datum->colors) {
    const int label = associated_label(*datum, color.moved_by.front());
    if (!contains(removed, label)) {
      kept.push_back(color);
      continue;
    }
    for (int root : color.moved_by) {
      SchubertDivisor extra;
      if (datum->group_based()) {
        const bool plus = root < datum->top_rank;
        extra.id = "D" + std::to_string(label + 1) + (plus ? "+" : "-");
      } else {
        extra.id = "D[" + root_name(root) + "]";
      }
      extra.moving_root = root;
      extra.label = label;
      extra.weight = unit(datum->root_system.rank(), root);
      d->schubert_extras.push_back(std::move(extra));
    }
  }
  d->colors = std::move(kept);
  std::sort(d->schubert_extras.begin(), d->schubert_extras.end(), [](const auto& a, const auto& b) {
    return std::tie(a.label, a.moving_root) < std::tie(b.label, b.moving_root);
  });

  std::vector<IntVector> roots;
  std::vector<int> labels;
  for (int k = 0; k < datum->rank(); ++k) {
    if (contains(removed, datum->labels[k])) continue;
    roots.push_back(datum->spherical_roots[k]);
    labels.push_back(datum->labels[k]);
  }
  d->spherical_roots = std::move(roots);
  d->labels = std::move(labels);
  for (auto& color : d->colors) color.type = color_type_of(*d, color.moved_by);
  compute_levi_roots(*d);
  return d;
}

DatumPtr closed_orbit_datum(const DatumPtr& datum) { return subvariety_datum(datum, datum->labels); }

int picard_rank(const SphericalDatum& datum) { return datum.picard_rank(); }

std::vector<Violation> validate_datum(const SphericalDatum& d) {
  std::vector<Violation> out;
  const int n = d.root_system.rank();
  auto in_range = [n](int root) { return root >= 0 && root < n; };

  std::set<int> sp;
  for (std::size_t k = 0; k < d.s_p.size(); ++k) {
    const std::string path = "/s_p/" + std::to_string(k);
    if (!in_range(d.s_p[k])) {
      out.push_back({path, "simple root index out of range"});
    } else if (!sp.insert(d.s_p[k]).second) {
      out.push_back({path, "duplicate simple root"});
    }
  }

  bool roots_ok = true;
  for (std::size_t k = 0; k < d.spherical_roots.size(); ++k) {
    const std::string path = "/spherical_roots/" + std::to_string(k);
    const auto& gamma = d.spherical_roots[k];
    if (gamma.size() != n) {
      out.push_back({path, "expected " + std::to_string(n) + " coefficients"});
      roots_ok = false;
      continue;
    }
    if (gamma.isZero()) out.push_back({path, "spherical root is zero"});
    if ((gamma.array() < 0).any()) out.push_back({path, "coefficients must be nonnegative"});
    for (int root = 0; root < n; ++root) {
      if (same_vector(gamma, unit(n, root))) {
        out.push_back({path, root_name(root) + " is a spherical root: type (a) colors are unsupported"});
      }
    }
  }
  if (roots_ok && !d.spherical_roots.empty()) {
    IntMatrix m(static_cast<Eigen::Index>(d.spherical_roots.size()), n);
    for (std::size_t k = 0; k < d.spherical_roots.size(); ++k) m.row(k) = d.spherical_roots[k].transpose();
    if (exact_rank<Rational>(to_rational(m)) != m.rows()) {
      out.push_back({"/spherical_roots", "spherical roots are linearly dependent"});
    }
  }

  std::set<std::string> ids;
  std::vector<int> moves(n, 0);
  for (std::size_t k = 0; k < d.colors.size(); ++k) {
    const std::string path = "/colors/" + std::to_string(k);
    const auto& color = d.colors[k];
    if (color.id.empty()) out.push_back({path + "/id", "empty color id"});
    if (!ids.insert(color.id).second) out.push_back({path + "/id", "duplicate color id '" + color.id + "'"});
    if (color.moved_by.empty() || color.moved_by.size() > 2) {
      out.push_back({path + "/moved_by", "a color is moved by one or two simple roots"});
    }
    bool indices_ok = true;
    for (std::size_t j = 0; j < color.moved_by.size(); ++j) {
      const int root = color.moved_by[j];
      const std::string rpath = path + "/moved_by/" + std::to_string(j);
      if (!in_range(root)) {
        out.push_back({rpath, "simple root index out of range"});
        indices_ok = false;
        continue;
      }
      if (j > 0 && root == color.moved_by[j - 1]) out.push_back({rpath, "duplicate simple root"});
      if (sp.count(root)) out.push_back({rpath, root_name(root) + " is in s_p and cannot move a color"});
      ++moves[root];
    }
    if (!indices_ok || color.moved_by.size() != 2 || color.moved_by[0] == color.moved_by[1]) continue;
    const int a = color.moved_by[0];
    const int b = color.moved_by[1];
    if (d.root_system.cartan(a, b) != 0 || d.root_system.cartan(b, a) != 0) {
      out.push_back({path + "/moved_by", "the two moving roots must be orthogonal"});
      continue;
    }
    if (doubled_is_spherical(d, a) || doubled_is_spherical(d, b)) {
      out.push_back({path + "/moved_by", "a color moved by two roots cannot be of type (a')"});
    }
    if (roots_ok) {
      for (std::size_t g = 0; g < d.spherical_roots.size(); ++g) {
        const auto& gamma = d.spherical_roots[g];
        if (pairing_with_root(d.root_system, a, gamma) != pairing_with_root(d.root_system, b, gamma)) {
          out.push_back({path + "/moved_by", "rho values of the two moving roots disagree on spherical root " +
                                                 std::to_string(g + 1)});
        }
      }
    }
  }
  for (const auto& extra : d.schubert_extras) {
    if (in_range(extra.moving_root)) ++moves[extra.moving_root];
  }
  for (int root = 0; root < n; ++root) {
    if (sp.count(root)) continue;
    if (moves[root] == 0) out.push_back({"/colors", root_name(root) + " is not in s_p but moves no color"});
    if (moves[root] > 1) {
      out.push_back({"/colors", root_name(root) + " moves " + std::to_string(moves[root]) + " colors"});
    }
  }

  // Outside S^p, the spherical root alpha - sigma(alpha) is the only one whose
  // support meets alpha.
  if (roots_ok && d.kind != DatumKind::subvariety) {
    for (int root = 0; root < n; ++root) {
      if (sp.count(root)) continue;
      int count = 0;
      for (const auto& gamma : d.spherical_roots) count += gamma(root) != 0;
      if (count != 1) {
        out.push_back({"/spherical_roots", root_name(root) + " lies in the support of " + std::to_string(count) +
                                               " spherical roots (expected exactly 1)"});
      }
    }
  }
  return out;
}

}  // namespace wonderlat
