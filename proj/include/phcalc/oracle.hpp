#pragma once

// Brute-force homology by enumerating every GF(2) chain vector. Slow by
// construction; used to cross-check the rank formulas on small inputs. Only
// entry-level matrix access is used, never rank or kernel_basis.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "phcalc/filtration.hpp"
#include "phcalc/gf2.hpp"

namespace phcalc::oracle {

/// A chain as a packed bit-vector; bit i is the coefficient of basis element i.
using Chain = std::vector<std::uint64_t>;

inline constexpr std::size_t kDefaultColumnLimit = 20;
inline constexpr std::size_t kHardColumnLimit = 26;
inline constexpr const char* kColumnLimitEnv = "PHCALC_ORACLE_MAX_COLS";

/// Enumeration cap on matrix columns: kDefaultColumnLimit unless the
/// environment variable names a smaller value (or a larger one up to
/// kHardColumnLimit).
std::size_t column_limit();

class EnumerationLimitError : public std::length_error {
 public:
  EnumerationLimitError(std::size_t columns, std::size_t limit);
  std::size_t columns() const noexcept { return columns_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t columns_;
  std::size_t limit_;
};

/// A subspace given by its full element list, sorted.
struct ChainSet {
  std::size_t ambient_dim = 0;
  std::vector<Chain> members;

  /// log2 of the member count. Throws std::logic_error if the count is not a
  /// power of two.
  std::size_t dimension() const;
  bool contains(const Chain& c) const;
  bool is_subset_of(const ChainSet& other) const;
};

ChainSet intersect(const ChainSet& a, const ChainSet& b);

/// {x : D x = 0}, by testing all 2^cols vectors.
ChainSet enumerate_kernel(const Gf2Matrix& d, std::size_t limit = column_limit());

/// {D x : x in GF(2)^cols}.
ChainSet enumerate_image(const Gf2Matrix& d, std::size_t limit = column_limit());

/// log2|Z_n| - log2|B_n|, after asserting B_n ⊆ Z_n.
std::size_t oracle_betti(const SimplicialComplex& c, std::size_t n,
                         std::size_t limit = column_limit());

/// log2|i(Z_n^j)| - log2|i(Z_n^j) ∩ B_n^p|. The inclusion is applied by
/// looking up each simplex of K^j in K^p.
std::size_t oracle_persistent_betti(const Filtration& f, std::size_t n, std::size_t j,
                                    std::size_t p, std::size_t limit = column_limit());

bool within_bounds(const SimplicialComplex& c, std::size_t n, std::size_t limit = column_limit());
bool within_bounds(const Filtration& f, std::size_t n, std::size_t j, std::size_t p,
                   std::size_t limit = column_limit());

}  // namespace phcalc::oracle
