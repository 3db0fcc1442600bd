#pragma once

// On-disk formats.
//
// Complex file: one facet per line, vertices as whitespace-separated
// non-negative integers. '#' starts a comment; blank lines are ignored.
//
// Filtration file (JSON):
//   { "name": "diabolo", "levels": [ [[0],[1],[2]], [[0,1],[1,2],[0,2]], ... ] }
// Each level lists the facets of the whole complex at that level. With
// incremental parsing each level instead lists only the facets added there.
// Unknown top-level keys are kept in `metadata`.
//
// Barcode document (JSON):
//   { "last_level": 5, "barcodes": [ { "dimension": 0, "intervals": [
//       { "birth": 0, "death": null, "multiplicity": 1 }, ... ] } ] }
// A null death is an interval that never dies.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "phcalc/complex.hpp"
#include "phcalc/filtration.hpp"
#include "phcalc/persistence.hpp"

namespace phcalc::formats {

/// `location` is "line N" for text formats or a JSON path such as
/// "levels[2][0]" for structured ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

std::vector<Simplex> parse_complex(std::istream& in);
std::vector<Simplex> parse_complex(std::string_view text);
std::string serialize_complex(std::span<const Simplex> facets);

struct FiltrationFile {
  std::optional<std::string> name;
  std::vector<std::vector<Simplex>> levels;  // cumulative facet lists
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const FiltrationFile&, const FiltrationFile&) = default;
};

FiltrationFile parse_filtration(std::istream& in, bool incremental = false);
FiltrationFile parse_filtration(std::string_view text, bool incremental = false);
std::string serialize_filtration(const FiltrationFile& file);

/// Throws FiltrationError when the levels are not nested.
Filtration to_filtration(const FiltrationFile& file);

struct BarcodeDocument {
  std::size_t last_level = 0;
  std::vector<Barcode> barcodes;

  friend bool operator==(const BarcodeDocument&, const BarcodeDocument&) = default;
};

nlohmann::json to_json(const Barcode& barcode);
nlohmann::json to_json(const BarcodeDocument& doc);
BarcodeDocument parse_barcodes(std::string_view text);

}  // namespace phcalc::formats
