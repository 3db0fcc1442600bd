#include "doctest.h"
#include "phcalc/oracle.hpp"
#include "support/fixtures.hpp"

#include <cstdlib>
#include <random>

using namespace phcalc;
using namespace phcalc::testing;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv(oracle::kColumnLimitEnv, value, 1); }
  ~EnvGuard() { ::unsetenv(oracle::kColumnLimitEnv); }
};

}  // namespace

TEST_CASE("enumeration on fixed matrices") {
  const auto ki = oracle::enumerate_kernel(Gf2Matrix::identity(3));
  CHECK(ki.members.size() == 1);
  CHECK(ki.dimension() == 0);
  CHECK(oracle::enumerate_kernel(Gf2Matrix::zero(2, 3)).members.size() == 8);
  CHECK(oracle::enumerate_image(Gf2Matrix::zero(2, 3)).members.size() == 1);
  CHECK(oracle::enumerate_image(Gf2Matrix::identity(3)).dimension() == 3);

  const Gf2Matrix d1 = diabolo_d1();
  CHECK(oracle::enumerate_kernel(d1).members.size() == 4);
  CHECK(oracle::enumerate_image(d1).dimension() == 5);
  const auto k = closure_of_facets(diabolo_facets());
  CHECK(oracle::enumerate_image(boundary_matrix(k, 2)).members.size() == 2);
  CHECK(oracle::enumerate_image(boundary_matrix(k, 2)).is_subset_of(oracle::enumerate_kernel(d1)));
}

TEST_CASE("chain sets") {
  oracle::ChainSet three{2, {{0}, {1}, {2}}};
  CHECK_THROWS_AS(three.dimension(), std::logic_error);
  const oracle::ChainSet a{2, {{0}, {1}}};
  const oracle::ChainSet b{2, {{0}, {2}}};
  CHECK(oracle::intersect(a, b).members == std::vector<oracle::Chain>{{0}});
  CHECK(a.contains({1}));
  CHECK_FALSE(a.is_subset_of(b));
}

TEST_CASE("enumeration limit") {
  CHECK(oracle::column_limit() == oracle::kDefaultColumnLimit);
  CHECK_THROWS_AS(oracle::enumerate_kernel(Gf2Matrix::zero(1, 5), 4), oracle::EnumerationLimitError);
  CHECK_NOTHROW(oracle::enumerate_kernel(Gf2Matrix::zero(1, 4), 4));
  {
    EnvGuard guard("3");
    CHECK(oracle::column_limit() == 3);
    CHECK_THROWS_AS(oracle::enumerate_image(Gf2Matrix::identity(4)), oracle::EnumerationLimitError);
  }
  {
    EnvGuard guard("1000");
    CHECK(oracle::column_limit() == oracle::kHardColumnLimit);
  }
  {
    EnvGuard guard("junk");
    CHECK(oracle::column_limit() == oracle::kDefaultColumnLimit);
  }
}

TEST_CASE("kernel size matches rank-nullity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng() % 10, c = rng() % 13;
    const Gf2Matrix m = random_matrix(rng, r, c, 0.3);
    const std::size_t rk = rank(m);
    CHECK(oracle::enumerate_kernel(m).dimension() == c - rk);
    CHECK(oracle::enumerate_image(m).dimension() == rk);
  }
}

TEST_CASE("oracle Betti numbers") {
  const auto k = closure_of_facets(diabolo_facets());
  CHECK(oracle::oracle_betti(k, 0) == 1);
  CHECK(oracle::oracle_betti(k, 1) == 1);
  CHECK(oracle::oracle_betti(k, 2) == 0);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = closure_of_facets(random_facets(rng, 1 + rng() % 6, 3 + rng() % 4, 4));
    for (std::size_t n = 0; n <= 3; ++n) {
      REQUIRE(oracle::within_bounds(c, n));
      CHECK(oracle::oracle_betti(c, n) == betti(c, n));
    }
  }
}

TEST_CASE("oracle persistent Betti numbers on the diabolo filtration") {
  const Filtration f = diabolo_filtration();
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t j = 0; j <= 5; ++j)
      for (std::size_t p = j; p <= 5; ++p)
        CHECK(oracle::oracle_persistent_betti(f, n, j, p) == diabolo_tables()[n][j][p - j]);
}
