#include "phcalc/complex.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace phcalc {

namespace {

// A facet with this many vertices already has 2^24 faces; anything larger is
// not a realistic input and would exhaust memory.
constexpr std::size_t kMaxFacetSize = 24;

void sort_unique(std::vector<Simplex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("Simplex: empty vertex set");
  std::sort(vertices_.begin(), vertices_.end());
  const auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw std::invalid_argument("Simplex: repeated vertex " + std::to_string(*dup));
  }
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

std::string Simplex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << s.to_string(); }

Simplex face(const Simplex& s, std::size_t i) {
  if (s.size() < 2) {
    throw std::invalid_argument("face: " + s.to_string() + " is a vertex and has no faces");
  }
  if (i > s.dimension()) {
    throw std::out_of_range("face: index " + std::to_string(i) + " exceeds dimension " +
                            std::to_string(s.dimension()) + " of " + s.to_string());
  }
  std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return Simplex(std::move(v));
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> by_dimension)
    : by_dimension_(std::move(by_dimension)) {
  for (auto& level : by_dimension_) sort_unique(level);
  while (!by_dimension_.empty() && by_dimension_.back().empty()) by_dimension_.pop_back();
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& s : simplices) {
    if (s.dimension() >= by_dim.size()) by_dim.resize(s.dimension() + 1);
    by_dim[s.dimension()].push_back(std::move(s));
  }
  SimplicialComplex c(std::move(by_dim));
  for (std::size_t n = 1; n < c.by_dimension_.size(); ++n) {
    for (const auto& s : c.by_dimension_[n]) {
      for (std::size_t i = 0; i <= n; ++i) {
        Simplex f = face(s, i);
        if (!c.contains(f)) {
          throw std::invalid_argument("not a simplicial complex: face " + f.to_string() + " of " +
                                      s.to_string() + " is missing");
        }
      }
    }
  }
  return c;
}

std::span<const Simplex> SimplicialComplex::n_simplices(std::size_t n) const noexcept {
  if (n >= by_dimension_.size()) return {};
  return by_dimension_[n];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const auto level = n_simplices(s.dimension());
  const auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::size_t SimplicialComplex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& level : by_dimension_) n += level.size();
  return n;
}

std::optional<std::size_t> SimplicialComplex::top_dimension() const noexcept {
  if (by_dimension_.empty()) return std::nullopt;
  return by_dimension_.size() - 1;
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& level : by_dimension_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  // A simplex is maximal iff no simplex one dimension up has it as a face.
  std::vector<Simplex> out;
  for (std::size_t n = 0; n < by_dimension_.size(); ++n) {
    const auto up = n_simplices(n + 1);
    std::vector<bool> covered(by_dimension_[n].size(), false);
    for (const auto& s : up) {
      for (std::size_t i = 0; i < s.size(); ++i) covered[*index_of(face(s, i))] = true;
    }
    for (std::size_t k = 0; k < covered.size(); ++k) {
      if (!covered[k]) out.push_back(by_dimension_[n][k]);
    }
  }
  return out;
}

SimplicialComplex closure_of_facets(std::span<const Simplex> facets) {
  std::vector<std::vector<Simplex>> by_dim;
  std::vector<Vertex> buffer;
  for (const auto& facet : facets) {
    const auto verts = facet.vertices();
    if (verts.size() > kMaxFacetSize) {
      throw std::length_error("closure_of_facets: facet " + facet.to_string() + " has more than " +
                              std::to_string(kMaxFacetSize) + " vertices");
    }
    if (facet.size() > by_dim.size()) by_dim.resize(facet.size());
    const std::uint32_t subsets = std::uint32_t{1} << verts.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      buffer.clear();
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) buffer.push_back(verts[i]);
      }
      by_dim[buffer.size() - 1].emplace_back(buffer);
    }
  }
  return SimplicialComplex::from_simplices([&] {
    std::vector<Simplex> all;
    for (auto& level : by_dim) {
      sort_unique(level);
      all.insert(all.end(), std::make_move_iterator(level.begin()),
                 std::make_move_iterator(level.end()));
    }
    return all;
  }());
}

bool is_complex(std::span<const Simplex> simplices) {
  std::vector<Simplex> sorted(simplices.begin(), simplices.end());
  sort_unique(sorted);
  // Checking immediate faces suffices: by induction every smaller non-empty
  // subset is then an immediate face of some member.
  for (const auto& s : sorted) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::binary_search(sorted.begin(), sorted.end(), face(s, i))) return false;
    }
  }
  return true;
}

Gf2Matrix boundary_matrix(const SimplicialComplex& c, std::size_t n) {
  const auto cols = c.n_simplices(n);
  if (n == 0) return Gf2Matrix(0, cols.size());
  Gf2Matrix d(c.count(n - 1), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      const auto row = c.index_of(face(cols[k], i));
      // Face-closure is a class invariant.
      d.set(*row, k);
    }
  }
  return d;
}

std::size_t betti_rank(const Gf2Matrix& into, const Gf2Matrix& out_of) {
  if (into.cols() != out_of.rows()) {
    throw std::invalid_argument("betti_rank: differentials do not chain (" +
                                std::to_string(into.cols()) + " chains vs " +
                                std::to_string(out_of.rows()) + " rows)");
  }
  const std::size_t chains = into.cols();
  const std::size_t r_in = rank(into);
  const std::size_t r_out = rank(out_of);
  if (r_in + r_out > chains) {
    throw std::logic_error("betti_rank: rank sum exceeds chain count; differentials are not nilpotent");
  }
  return chains - r_in - r_out;
}

std::size_t betti(const SimplicialComplex& c, std::size_t n) {
  return betti_rank(boundary_matrix(c, n), boundary_matrix(c, n + 1));
}

}  // namespace phcalc
