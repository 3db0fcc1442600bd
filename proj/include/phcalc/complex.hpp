#pragma once

// Abstract simplicial complexes over non-negative integer vertex labels, their
// boundary matrices over Z/2 and Betti numbers.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phcalc/gf2.hpp"

namespace phcalc {

using Vertex = std::uint32_t;

/// A non-empty finite set of vertices, stored sorted ascending.
class Simplex {
 public:
  /// Sorts the input. Throws std::invalid_argument if it is empty or holds a
  /// repeated vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.size() - 1; }

  /// True when every vertex of `other` is a vertex of this simplex.
  bool contains(const Simplex& other) const;

  /// "(0,1,2)"
  std::string to_string() const;

  // Lexicographic on the sorted vertex sequence.
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// Removes the i-th vertex (0-based, in sorted order). Throws
/// std::invalid_argument for a 0-simplex and std::out_of_range when
/// i > dimension.
Simplex face(const Simplex& s, std::size_t i);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Takes an arbitrary collection of simplices (duplicates allowed) and
  /// throws std::invalid_argument naming a missing face unless it is closed
  /// under taking faces.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  /// The n-simplices in lexicographic order: the standard basis of C_n.
  std::span<const Simplex> n_simplices(std::size_t n) const noexcept;
  std::size_t count(std::size_t n) const noexcept { return n_simplices(n).size(); }

  /// Position of `s` within n_simplices(s.dimension()).
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return by_dimension_.empty(); }

  /// Largest n with a non-empty n_simplices(n); nullopt for the empty complex.
  std::optional<std::size_t> top_dimension() const noexcept;

  /// All simplices, ordered by dimension and then lexicographically.
  std::vector<Simplex> simplices() const;

  /// Maximal simplices under inclusion, ordered as in simplices().
  std::vector<Simplex> facets() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dimension);

  // by_dimension_[n] is sorted and duplicate free; no trailing empty entries.
  std::vector<std::vector<Simplex>> by_dimension_;
};

/// Smallest face-closed complex containing every facet.
SimplicialComplex closure_of_facets(std::span<const Simplex> facets);

/// True iff every non-empty proper subset of every member is a member.
bool is_complex(std::span<const Simplex> simplices);

/// Incidence matrix of d_n: |S_{n-1}| x |S_n| with entry (r, k) set iff the
/// r-th (n-1)-simplex is a face of the k-th n-simplex. D_0 has no rows.
Gf2Matrix boundary_matrix(const SimplicialComplex& c, std::size_t n);

/// |S_n| - rank(D_n) - rank(D_{n+1}).
std::size_t betti(const SimplicialComplex& c, std::size_t n);

/// Betti number from the two differentials around C_n, where `into` maps C_n
/// to C_{n-1} and `out_of` maps C_{n+1} to C_n. Throws std::invalid_argument
/// if the shapes do not chain.
std::size_t betti_rank(const Gf2Matrix& into, const Gf2Matrix& out_of);

}  // namespace phcalc
