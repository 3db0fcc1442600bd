#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace phcalc {

struct BenchColumn {
  std::size_t triangles = 0;
  std::size_t simplices = 0;          // in the last level
  double betti_seconds = 0;           // betti(K^m, n) for n = 0, 1, 2
  double persistent_seconds = 0;      // beta_1^{0,m} plus the full H1 barcode
};

/// One generated filtration per triangle count, seeded with `seed`.
std::vector<BenchColumn> run_benchmark(std::span<const std::size_t> triangle_counts,
                                       std::size_t levels, std::uint64_t seed);

/// Two-row table: a header of triangle counts, then "Betti" and
/// "Persistent Betti" rows of wall-clock seconds.
std::string format_bench_table(std::span<const BenchColumn> columns);

}  // namespace phcalc
