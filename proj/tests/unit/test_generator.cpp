#include "doctest.h"
#include "phcalc/checks.hpp"
#include "phcalc/generator.hpp"

using namespace phcalc;

TEST_CASE("default vertex count") {
  CHECK(default_vertex_count(1) == 3);
  CHECK(default_vertex_count(4) == 6);
  CHECK(default_vertex_count(5) == 9);
  CHECK(default_vertex_count(10) == 12);
  CHECK(default_vertex_count(500) == 69);
}

TEST_CASE("smallest generator input has one outcome") {
  const auto file = generate_filtration({1, 1, 3, 0});
  REQUIRE(file.levels.size() == 1);
  CHECK(file.levels[0] == std::vector<Simplex>{{0, 1, 2}});
  CHECK(file.name == std::optional<std::string>("random-T1-L1-V3-seed0"));
  CHECK(file.metadata["generator"]["vertices"] == 3);
}

TEST_CASE("generator is deterministic in the seed") {
  const GeneratorOptions a{25, 4, std::nullopt, 9};
  CHECK(generate_filtration(a) == generate_filtration(a));
  GeneratorOptions b = a;
  b.seed = 10;
  CHECK_FALSE(generate_filtration(a).levels == generate_filtration(b).levels);
}

TEST_CASE("generated levels are cumulative and count every triangle") {
  const auto file = generate_filtration({40, 6, std::nullopt, 3});
  REQUIRE(file.levels.size() == 6);
  CHECK(file.levels.back().size() == 40);
  for (std::size_t j = 1; j < 6; ++j) {
    CHECK(std::equal(file.levels[j - 1].begin(), file.levels[j - 1].end(), file.levels[j].begin()));
  }
  for (const auto& s : file.levels.back()) {
    CHECK(s.dimension() == 2);
    CHECK(s.vertices().back() < 21);
  }
}

TEST_CASE("generator rejects degenerate options") {
  CHECK_THROWS_AS(generate_filtration({0, 1, std::nullopt, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_filtration({1, 0, std::nullopt, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_filtration({1, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("generated filtration passes every check") {
  const auto file = generate_filtration({10, 5, 12, 42});
  const Filtration f = formats::to_filtration(file);
  CheckOptions options;
  options.oracle = true;
  const CheckReport report = run_checks(f, options);
  CHECK(report.ok());
  std::size_t oracle_runs = 0;
  for (const auto& t : report.tallies)
    if (t.name.rfind("oracle_", 0) == 0) oracle_runs += t.run;
  CHECK(oracle_runs > 0);
}
