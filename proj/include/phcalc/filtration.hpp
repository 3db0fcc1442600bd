#pragma once

// Filtrations K^0 ⊆ K^1 ⊆ ... ⊆ K^m of simplicial complexes and the
// inclusion matrices between their chain groups.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phcalc/complex.hpp"
#include "phcalc/gf2.hpp"

namespace phcalc {

/// First simplex of level `level - 1` that is missing from level `level`.
struct FiltrationViolation {
  std::size_t level;
  Simplex simplex;

  std::string describe() const;
};

class FiltrationError : public std::runtime_error {
 public:
  explicit FiltrationError(FiltrationViolation v)
      : std::runtime_error(v.describe()), violation_(std::move(v)) {}
  const FiltrationViolation& violation() const noexcept { return violation_; }

 private:
  FiltrationViolation violation_;
};

/// nullopt when the levels are nested; otherwise the first offending
/// adjacent pair. Inclusion is transitive, so adjacent pairs suffice.
std::optional<FiltrationViolation> validate(std::span<const SimplicialComplex> levels);

class Filtration {
 public:
  /// Throws std::invalid_argument for an empty sequence and FiltrationError
  /// when the levels are not nested.
  static Filtration from_levels(std::vector<SimplicialComplex> levels);

  /// Level j is the closure of level_facets[j].
  static Filtration from_level_facets(const std::vector<std::vector<Simplex>>& level_facets);

  /// Index m of the last level.
  std::size_t last_level() const noexcept { return levels_.size() - 1; }
  std::size_t size() const noexcept { return levels_.size(); }

  const SimplicialComplex& level(std::size_t j) const { return levels_.at(j); }
  const SimplicialComplex& final_complex() const noexcept { return levels_.back(); }
  std::span<const SimplicialComplex> levels() const noexcept { return levels_; }

  /// Throws std::out_of_range unless j <= p <= m.
  void check_levels(std::size_t j, std::size_t p) const;

 private:
  explicit Filtration(std::vector<SimplicialComplex> levels) : levels_(std::move(levels)) {}

  std::vector<SimplicialComplex> levels_;
};

/// Matrix of the inclusion C_n(K^j) -> C_n(K^p): |S_n(K^p)| x |S_n(K^j)|,
/// with entry (r, c) set iff the r-th n-simplex of K^p is the c-th n-simplex
/// of K^j.
Gf2Matrix inclusion_matrix(const Filtration& f, std::size_t n, std::size_t j, std::size_t p);

}  // namespace phcalc
