#pragma once

// Shared test inputs and independent reference implementations. Nothing here
// may call rank, kernel_basis or the persistence routines under test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "phcalc/complex.hpp"
#include "phcalc/filtration.hpp"
#include "phcalc/gf2.hpp"

namespace phcalc::testing {

inline std::vector<Simplex> diabolo_facets() { return {{2, 3}, {3, 4}, {3, 5}, {4, 5}, {0, 1, 2}}; }

inline std::vector<std::vector<Simplex>> diabolo_level_facets() {
  return {
      {{0}, {1}, {2}},
      {{0, 1}, {1, 2}, {0, 2}},
      {{0, 1}, {1, 2}, {0, 2}, {3}, {4}, {5}},
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}},
      {{2, 3}, {3, 4}, {3, 5}, {4, 5}, {0, 1, 2}},
  };
}

inline Filtration diabolo_filtration() { return Filtration::from_level_facets(diabolo_level_facets()); }

// d_1 of the diabolo complex: rows (0)..(5), columns
// (0,1) (0,2) (1,2) (2,3) (3,4) (3,5) (4,5).
inline Gf2Matrix diabolo_d1() {
  return Gf2Matrix::from_rows({
      {1, 1, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0},
      {0, 1, 1, 1, 0, 0, 0},
      {0, 0, 0, 1, 1, 1, 0},
      {0, 0, 0, 0, 1, 0, 1},
      {0, 0, 0, 0, 0, 1, 1},
  });
}

// Persistent Betti tables of the diabolo filtration, row j lists p = j..5.
// Frozen from an exhaustive enumeration of cycles and boundaries.
inline const std::vector<std::vector<std::vector<std::size_t>>>& diabolo_tables() {
  static const std::vector<std::vector<std::vector<std::size_t>>> tables = {
      {{3, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {4, 2, 1, 1}, {2, 1, 1}, {1, 1}, {1}},
      {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 0}, {2, 2, 1}, {2, 1}, {1}},
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0}, {0, 0}, {0}},
  };
  return tables;
}

inline bool same_levels(const Filtration& a, const Filtration& b) {
  return std::ranges::equal(a.levels(), b.levels());
}

/// Unpacked bit-by-bit Gaussian elimination.
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c] == 1) {
        for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
      }
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<int>> to_rows(const Gf2Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  return out;
}

inline Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               double density = 0.5) {
  std::bernoulli_distribution bit(density);
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

/// Facets of 1 to max_size vertices drawn from {0, ..., vertices-1}.
inline std::vector<Simplex> random_facets(std::mt19937_64& rng, std::size_t count,
                                          std::size_t vertices, std::size_t max_size) {
  std::vector<Vertex> pool(vertices);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::uniform_int_distribution<std::size_t> size(1, std::min(max_size, vertices));
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Vertex> v;
    std::sample(pool.begin(), pool.end(), std::back_inserter(v), size(rng), rng);
    facets.emplace_back(std::move(v));
  }
  return facets;
}

/// Random filtration with mixed facet sizes: each facet gets a uniform level.
inline Filtration random_filtration(std::mt19937_64& rng, std::size_t facets, std::size_t vertices,
                                    std::size_t max_size, std::size_t levels) {
  const auto all = random_facets(rng, facets, vertices, max_size);
  std::uniform_int_distribution<std::size_t> level(0, levels - 1);
  std::vector<std::vector<Simplex>> born(levels);
  for (const auto& f : all) born[level(rng)].push_back(f);
  std::vector<std::vector<Simplex>> cumulative;
  std::vector<Simplex> acc;
  for (auto& b : born) {
    acc.insert(acc.end(), b.begin(), b.end());
    cumulative.push_back(acc);
  }
  return Filtration::from_level_facets(cumulative);
}

/// Connected components of the 1-skeleton by union-find.
inline std::size_t count_components(const SimplicialComplex& c) {
  const auto verts = c.n_simplices(0);
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : c.n_simplices(1)) {
    const auto a = *c.index_of(Simplex{e.vertices()[0]});
    const auto b = *c.index_of(Simplex{e.vertices()[1]});
    parent[find(a)] = find(b);
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) roots += find(i) == i ? 1 : 0;
  return roots;
}

}  // namespace phcalc::testing
