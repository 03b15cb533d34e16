#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wonderlat/spherical.hpp"

namespace wonderlat {

// Datum files are JSON documents; see docs/datum-format.md. Simple-root
// indices in files are 1-based.

/// Structural and mathematical validation of a parsed datum document.
std::vector<Violation> validate_datum(const nlohmann::json& raw);

/// Throws ValidationError listing every violation.
DatumPtr datum_from_json(const nlohmann::json& raw);

/// Throws ParseError on malformed JSON, ValidationError on invalid content.
DatumPtr parse_datum(const std::string& text);
DatumPtr load_datum(const std::string& path);

/// Top-level data only; subvariety data are derived, not stored.
nlohmann::json datum_to_json(const SphericalDatum& datum);
std::string save_datum(const SphericalDatum& datum);
void save_datum(const SphericalDatum& datum, const std::string& path);

}  // namespace wonderlat
