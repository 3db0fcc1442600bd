#include "phcalc/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace phcalc {

std::size_t default_vertex_count(std::size_t triangles) {
  std::size_t root = 0;
  while (root * root < triangles) ++root;
  return 3 * root;
}

formats::FiltrationFile generate_filtration(const GeneratorOptions& options) {
  const std::size_t vertices = options.vertices.value_or(default_vertex_count(options.triangles));
  if (options.triangles < 1) throw std::invalid_argument("gen: --triangles must be at least 1");
  if (options.levels < 1) throw std::invalid_argument("gen: --levels must be at least 1");
  if (vertices < 3) throw std::invalid_argument("gen: --vertices must be at least 3");

  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> pool(vertices);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::uniform_int_distribution<std::size_t> pick_level(0, options.levels - 1);

  std::vector<std::vector<Simplex>> born_at(options.levels);
  for (std::size_t t = 0; t < options.triangles; ++t) {
    std::vector<Vertex> corners;
    std::sample(pool.begin(), pool.end(), std::back_inserter(corners), 3, rng);
    born_at[pick_level(rng)].emplace_back(std::move(corners));
  }

  formats::FiltrationFile file;
  file.name = "random-T" + std::to_string(options.triangles) + "-L" +
              std::to_string(options.levels) + "-V" + std::to_string(vertices) + "-seed" +
              std::to_string(options.seed);
  file.metadata["generator"] = {{"triangles", options.triangles},
                                {"levels", options.levels},
                                {"vertices", vertices},
                                {"seed", options.seed}};
  std::vector<Simplex> cumulative;
  for (auto& batch : born_at) {
    cumulative.insert(cumulative.end(), batch.begin(), batch.end());
    file.levels.push_back(cumulative);
  }
  return file;
}

}  // namespace phcalc
