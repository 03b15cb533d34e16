#include "wonderlat/datum_io.hpp"

#include <fstream>
#include <sstream>

namespace wonderlat {

using nlohmann::json;

namespace {

struct RawDatum {
  std::optional<DynkinType> dynkin;
  std::string kind = "generic_symmetric";
  std::vector<int> s_p;
  std::vector<IntVector> spherical_roots;
  std::vector<ColorSpec> colors;
};

bool read_int_array(const json& value, const std::string& path, std::vector<Integer>& out,
                    std::vector<Violation>& violations) {
  if (!value.is_array()) {
    violations.push_back({path, "expected an array of integers"});
    return false;
  }
  bool ok = true;
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (!value[k].is_number_integer()) {
      violations.push_back({path + "/" + std::to_string(k), "expected an integer"});
      ok = false;
    } else {
      out.push_back(value[k].get<Integer>());
    }
  }
  return ok;
}

// 1-based file indices to 0-based.
std::vector<int> to_zero_based(const std::vector<Integer>& v) {
  std::vector<int> out;
  for (Integer x : v) out.push_back(static_cast<int>(x - 1));
  return out;
}

RawDatum read_raw(const json& raw, std::vector<Violation>& violations) {
  RawDatum out;
  if (!raw.is_object()) {
    violations.push_back({"", "expected a JSON object"});
    return out;
  }
  for (const auto& [key, value] : raw.items()) {
    if (key != "dynkin" && key != "kind" && key != "s_p" && key != "spherical_roots" && key != "colors") {
      violations.push_back({"/" + key, "unknown field"});
    }
  }

  if (!raw.contains("dynkin") || !raw["dynkin"].is_string()) {
    violations.push_back({"/dynkin", "expected a Dynkin type string such as \"A3xA3\""});
  } else {
    try {
      out.dynkin = DynkinType::parse(raw["dynkin"].get<std::string>());
    } catch (const Error& e) {
      violations.push_back({"/dynkin", e.what()});
    }
  }

  if (raw.contains("kind")) {
    if (!raw["kind"].is_string() ||
        (raw["kind"] != "group_compactification" && raw["kind"] != "generic_symmetric")) {
      violations.push_back({"/kind", "expected \"group_compactification\" or \"generic_symmetric\""});
    } else {
      out.kind = raw["kind"].get<std::string>();
    }
  }

  if (raw.contains("s_p")) {
    std::vector<Integer> sp;
    if (read_int_array(raw["s_p"], "/s_p", sp, violations)) out.s_p = to_zero_based(sp);
  }

  if (!raw.contains("spherical_roots") || !raw["spherical_roots"].is_array()) {
    violations.push_back({"/spherical_roots", "expected an array of integer vectors"});
  } else {
    const auto& roots = raw["spherical_roots"];
    for (std::size_t k = 0; k < roots.size(); ++k) {
      std::vector<Integer> coeffs;
      if (!read_int_array(roots[k], "/spherical_roots/" + std::to_string(k), coeffs, violations)) continue;
      out.spherical_roots.push_back(Eigen::Map<const IntVector>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size())));
    }
  }

  if (!raw.contains("colors") || !raw["colors"].is_array()) {
    violations.push_back({"/colors", "expected an array of colors"});
  } else {
    const auto& colors = raw["colors"];
    for (std::size_t k = 0; k < colors.size(); ++k) {
      const std::string path = "/colors/" + std::to_string(k);
      const auto& c = colors[k];
      if (!c.is_object()) {
        violations.push_back({path, "expected an object with id and moved_by"});
        continue;
      }
      ColorSpec spec;
      if (!c.contains("id") || !c["id"].is_string()) {
        violations.push_back({path + "/id", "expected a string"});
      } else {
        spec.id = c["id"].get<std::string>();
      }
      std::vector<Integer> moved;
      if (!c.contains("moved_by")) {
        violations.push_back({path + "/moved_by", "missing"});
      } else if (read_int_array(c["moved_by"], path + "/moved_by", moved, violations)) {
        spec.moved_by = to_zero_based(moved);
      }
      out.colors.push_back(std::move(spec));
    }
  }
  return out;
}

// Splits G x G into G, if the two halves agree.
std::optional<DynkinType> group_half(const DynkinType& doubled) {
  const auto& f = doubled.factors();
  if (f.size() % 2 != 0) return std::nullopt;
  const std::size_t half = f.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    if (!(f[k] == f[half + k])) return std::nullopt;
  }
  return DynkinType(std::vector<SimpleFactor>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(half)));
}

DatumPtr build(const json& raw, std::vector<Violation>& violations) {
  RawDatum r = read_raw(raw, violations);
  if (!violations.empty()) return nullptr;
  DatumPtr datum;
  try {
    datum = make_symmetric_datum(*r.dynkin, r.s_p, r.spherical_roots, r.colors);
  } catch (const ValidationError& e) {
    violations = e.violations();
    return nullptr;
  }
  if (r.kind == "generic_symmetric") return datum;

  const auto g = group_half(*r.dynkin);
  if (!g) {
    violations.push_back({"/dynkin", "a group compactification needs a type of the form GxG"});
    return nullptr;
  }
  auto group = group_datum(*g);
  bool matches = group->spherical_roots.size() == datum->spherical_roots.size() &&
                 group->colors.size() == datum->colors.size() && datum->s_p.empty();
  for (std::size_t k = 0; matches && k < group->spherical_roots.size(); ++k) {
    matches = group->spherical_roots[k] == datum->spherical_roots[k];
  }
  for (std::size_t k = 0; matches && k < group->colors.size(); ++k) {
    matches = group->colors[k].id == datum->colors[k].id && group->colors[k].moved_by == datum->colors[k].moved_by;
  }
  if (!matches) {
    violations.push_back({"/kind", "content differs from the group compactification datum of " + g->name()});
    return nullptr;
  }
  return group;
}

}  // namespace

std::vector<Violation> validate_datum(const json& raw) {
  std::vector<Violation> violations;
  build(raw, violations);
  return violations;
}

DatumPtr datum_from_json(const json& raw) {
  std::vector<Violation> violations;
  auto datum = build(raw, violations);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return datum;
}

DatumPtr parse_datum(const std::string& text) {
  json raw;
  try {
    raw = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return datum_from_json(raw);
}

DatumPtr load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_datum(buffer.str());
}

json datum_to_json(const SphericalDatum& datum) {
  if (datum.kind == DatumKind::subvariety) {
    throw Error(ErrorCode::InvalidArgument, "subvariety data are derived and cannot be saved");
  }
  json out;
  out["dynkin"] = datum.root_system.dynkin.name();
  out["kind"] = to_string(datum.kind);
  json sp = json::array();
  for (int root : datum.s_p) sp.push_back(root + 1);
  out["s_p"] = sp;
  json roots = json::array();
  for (const auto& gamma : datum.spherical_roots) {
    json row = json::array();
    for (Eigen::Index k = 0; k < gamma.size(); ++k) row.push_back(gamma(k));
    roots.push_back(row);
  }
  out["spherical_roots"] = roots;
  json colors = json::array();
  for (const auto& color : datum.colors) {
    json moved = json::array();
    for (int root : color.moved_by) moved.push_back(root + 1);
    colors.push_back({{"id", color.id}, {"moved_by", moved}});
  }
  out["colors"] = colors;
  return out;
}

std::string save_datum(const SphericalDatum& datum) { return datum_to_json(datum).dump(2) + "\n"; }

void save_datum(const SphericalDatum& datum, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << save_datum(datum);
}

}  // namespace wonderlat
