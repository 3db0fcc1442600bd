#include "phcalc/formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

namespace phcalc::formats {

using nlohmann::json;

namespace {

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string line_of(std::size_t n) { return "line " + std::to_string(n); }

// Byte offset -> "line N" for JSON syntax errors.
std::string line_at(std::string_view text, std::size_t byte) {
  const std::size_t upto = std::min(byte, text.size());
  const auto newlines = std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
  return line_of(static_cast<std::size_t>(newlines) + 1);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (const auto pos = message.find("] "); pos != std::string::npos) message.erase(0, pos + 2);
    throw ParseError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), message);
  }
}

Simplex simplex_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "facet must be an array of vertices");
  if (j.empty()) throw ParseError(path, "facet is empty");
  std::vector<Vertex> verts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<Vertex>::max()) {
      throw ParseError(path + "[" + std::to_string(i) + "]",
                       "vertex must be a non-negative 32-bit integer");
    }
    verts.push_back(static_cast<Vertex>(v.get<std::int64_t>()));
  }
  try {
    return Simplex(std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

json simplex_to_json(const Simplex& s) {
  return json(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()));
}

std::size_t index_field(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw ParseError(path, std::string("missing \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(path + "." + key, "must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::vector<Simplex> parse_complex(std::istream& in) {
  std::vector<Simplex> facets;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Vertex> verts;
    std::string token;
    while (fields >> token) {
      Vertex v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_of(number), "'" + token + "' is not a non-negative vertex id");
      }
      verts.push_back(v);
    }
    if (verts.empty()) continue;
    try {
      facets.emplace_back(std::move(verts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_of(number), e.what());
    }
  }
  return facets;
}

std::vector<Simplex> parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_complex(in);
}

std::string serialize_complex(std::span<const Simplex> facets) {
  std::string out;
  for (const auto& f : facets) {
    const auto v = f.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

FiltrationFile parse_filtration(std::string_view text, bool incremental) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("$", "filtration file must be a JSON object");
  if (!root.contains("levels")) throw ParseError("$", "missing \"levels\"");
  const json& levels = root.at("levels");
  if (!levels.is_array() || levels.empty()) {
    throw ParseError("levels", "must be a non-empty array of levels");
  }

  FiltrationFile file;
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (it.key() == "levels") continue;
    if (it.key() == "name") {
      if (!it.value().is_string()) throw ParseError("name", "must be a string");
      file.name = it.value().get<std::string>();
      continue;
    }
    file.metadata[it.key()] = it.value();
  }

  for (std::size_t j = 0; j < levels.size(); ++j) {
    const std::string path = "levels[" + std::to_string(j) + "]";
    const json& level = levels[j];
    if (!level.is_array()) throw ParseError(path, "level must be an array of facets");
    std::vector<Simplex> facets;
    if (incremental && j > 0) facets = file.levels.back();
    for (std::size_t k = 0; k < level.size(); ++k) {
      facets.push_back(simplex_from_json(level[k], path + "[" + std::to_string(k) + "]"));
    }
    file.levels.push_back(std::move(facets));
  }
  return file;
}

FiltrationFile parse_filtration(std::istream& in, bool incremental) {
  return parse_filtration(read_all(in), incremental);
}

std::string serialize_filtration(const FiltrationFile& file) {
  // One level per line keeps files diffable; json::dump would put every
  // vertex on its own line.
  std::string out = "{\n";
  if (file.name) out += "  \"name\": " + json(*file.name).dump() + ",\n";
  for (auto it = file.metadata.begin(); it != file.metadata.end(); ++it) {
    out += "  " + json(it.key()).dump() + ": " + it.value().dump() + ",\n";
  }
  out += "  \"levels\": [\n";
  for (std::size_t j = 0; j < file.levels.size(); ++j) {
    json level = json::array();
    for (const auto& s : file.levels[j]) level.push_back(simplex_to_json(s));
    out += "    " + level.dump();
    out += j + 1 < file.levels.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

Filtration to_filtration(const FiltrationFile& file) {
  return Filtration::from_level_facets(file.levels);
}

json to_json(const Barcode& barcode) {
  json intervals = json::array();
  for (const auto& p : barcode.pairs) {
    intervals.push_back({{"birth", p.birth},
                         {"death", p.death ? json(*p.death) : json(nullptr)},
                         {"multiplicity", p.multiplicity}});
  }
  return {{"dimension", barcode.dimension}, {"intervals", std::move(intervals)}};
}

json to_json(const BarcodeDocument& doc) {
  json barcodes = json::array();
  for (const auto& b : doc.barcodes) barcodes.push_back(to_json(b));
  return {{"last_level", doc.last_level}, {"barcodes", std::move(barcodes)}};
}

BarcodeDocument parse_barcodes(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("$", "barcode document must be a JSON object");
  BarcodeDocument doc;
  doc.last_level = index_field(root, "last_level", "$");
  if (!root.contains("barcodes") || !root.at("barcodes").is_array()) {
    throw ParseError("barcodes", "must be an array");
  }
  const json& list = root.at("barcodes");
  for (std::size_t b = 0; b < list.size(); ++b) {
    const std::string path = "barcodes[" + std::to_string(b) + "]";
    const json& entry = list[b];
    if (!entry.is_object()) throw ParseError(path, "must be an object");
    Barcode barcode;
    barcode.dimension = index_field(entry, "dimension", path);
    if (!entry.contains("intervals") || !entry.at("intervals").is_array()) {
      throw ParseError(path + ".intervals", "must be an array");
    }
    const json& intervals = entry.at("intervals");
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      const std::string ipath = path + ".intervals[" + std::to_string(i) + "]";
      const json& iv = intervals[i];
      if (!iv.is_object()) throw ParseError(ipath, "must be an object");
      PersistencePair pair;
      pair.birth = index_field(iv, "birth", ipath);
      pair.multiplicity = index_field(iv, "multiplicity", ipath);
      if (!iv.contains("death")) throw ParseError(ipath, "missing \"death\"");
      if (!iv.at("death").is_null()) pair.death = index_field(iv, "death", ipath);
      if (pair.multiplicity == 0) throw ParseError(ipath + ".multiplicity", "must be at least 1");
      if (pair.death && *pair.death <= pair.birth) {
        throw ParseError(ipath + ".death", "must exceed birth");
      }
      barcode.pairs.push_back(pair);
    }
    doc.barcodes.push_back(std::move(barcode));
  }
  return doc;
}

}  // namespace phcalc::formats
