#include "phcalc/bench.hpp"

#include <chrono>
#include <cstdio>

#include "phcalc/generator.hpp"
#include "phcalc/persistence.hpp"

namespace phcalc {

namespace {

template <typename Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cell(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

}  // namespace

std::vector<BenchColumn> run_benchmark(std::span<const std::size_t> triangle_counts,
                                       std::size_t levels, std::uint64_t seed) {
  std::vector<BenchColumn> out;
  for (const std::size_t t : triangle_counts) {
    const Filtration f =
        formats::to_filtration(generate_filtration({t, levels, std::nullopt, seed}));
    const std::size_t m = f.last_level();
    BenchColumn col;
    col.triangles = t;
    col.simplices = f.final_complex().size();

    volatile std::size_t sink = 0;
    col.betti_seconds = seconds([&] {
      for (std::size_t n = 0; n <= 2; ++n) sink = sink + betti(f.final_complex(), n);
    });
    col.persistent_seconds = seconds([&] {
      sink = sink + persistent_betti(f, 1, 0, m);
      sink = sink + barcode(f, 1).total_multiplicity();
    });
    out.push_back(col);
  }
  return out;
}

std::string format_bench_table(std::span<const BenchColumn> columns) {
  constexpr std::size_t kLabel = 18;
  constexpr std::size_t kWidth = 11;
  auto fmt = [](double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return std::string(buf);
  };

  std::string header = std::string(kLabel, ' ') + "|";
  std::string betti_row = "Betti" + std::string(kLabel - 5, ' ') + "|";
  std::string pbetti_row = "Persistent Betti" + std::string(kLabel - 16, ' ') + "|";
  for (const auto& c : columns) {
    header += cell(std::to_string(c.triangles), kWidth) + " |";
    betti_row += cell(fmt(c.betti_seconds), kWidth) + " |";
    pbetti_row += cell(fmt(c.persistent_seconds), kWidth) + " |";
  }
  const std::string rule(header.size(), '-');
  return rule + "\n" + header + "\n" + rule + "\n" + betti_row + "\n" + pbetti_row + "\n" + rule +
         "\n";
}

}  // namespace phcalc
