#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "phcalc/formats.hpp"

namespace phcalc {

struct GeneratorOptions {
  std::size_t triangles = 10;
  std::size_t levels = 5;
  std::optional<std::size_t> vertices;  // default_vertex_count(triangles) when unset
  std::uint64_t seed = 0;
};

/// 3 * ceil(sqrt(triangles)).
std::size_t default_vertex_count(std::size_t triangles);

/// Draws `triangles` uniform 3-subsets of {0, ..., V-1}, gives each a uniform
/// level in 0..L-1 and lists, at level j, every triangle whose level is <= j.
/// Duplicate draws are kept and absorbed by the closure. Deterministic in the
/// seed. Throws std::invalid_argument unless T >= 1, L >= 1 and V >= 3.
formats::FiltrationFile generate_filtration(const GeneratorOptions& options);

}  // namespace phcalc
