#include "phcalc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iterator>

namespace phcalc::oracle {

namespace {

constexpr std::size_t kBits = 64;

Chain empty_chain(std::size_t bits) { return Chain((bits + kBits - 1) / kBits, 0); }

void toggle(Chain& c, std::size_t i) { c[i / kBits] ^= std::uint64_t{1} << (i % kBits); }

void xor_into(Chain& dst, const Chain& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

bool is_zero(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Chain> columns_of(const Gf2Matrix& d) {
  std::vector<Chain> cols(d.cols(), empty_chain(d.rows()));
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (d.get(r, c)) toggle(cols[c], r);
    }
  }
  return cols;
}

// Visits (x, D x) for every x in GF(2)^cols in Gray-code order, so each step
// flips one coordinate of x and XORs one column into D x.
template <typename Visit>
void for_each_input(const Gf2Matrix& d, std::size_t limit, Visit visit) {
  if (d.cols() > limit) throw EnumerationLimitError(d.cols(), limit);
  const auto cols = columns_of(d);
  Chain x = empty_chain(d.cols());
  Chain y = empty_chain(d.rows());
  visit(x, y);
  const std::uint64_t total = std::uint64_t{1} << d.cols();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    toggle(x, bit);
    xor_into(y, cols[bit]);
    visit(x, y);
  }
}

ChainSet finish(std::size_t ambient, std::vector<Chain> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {ambient, std::move(members)};
}

}  // namespace

std::size_t column_limit() {
  const char* raw = std::getenv(kColumnLimitEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultColumnLimit;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) return kDefaultColumnLimit;
  return std::min(value, kHardColumnLimit);
}

EnumerationLimitError::EnumerationLimitError(std::size_t columns, std::size_t limit)
    : std::length_error("oracle enumeration needs 2^" + std::to_string(columns) +
                        " vectors; limit is 2^" + std::to_string(limit) + " (" + kColumnLimitEnv +
                        ")"),
      columns_(columns),
      limit_(limit) {}

std::size_t ChainSet::dimension() const {
  const std::size_t n = members.size();
  if (!std::has_single_bit(n)) {
    throw std::logic_error("ChainSet of size " + std::to_string(n) + " is not a subspace");
  }
  return static_cast<std::size_t>(std::countr_zero(n));
}

bool ChainSet::contains(const Chain& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

bool ChainSet::is_subset_of(const ChainSet& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

ChainSet intersect(const ChainSet& a, const ChainSet& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw std::invalid_argument("intersect: ambient dimensions " + std::to_string(a.ambient_dim) +
                                " and " + std::to_string(b.ambient_dim) + " differ");
  }
  ChainSet out{a.ambient_dim, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

ChainSet enumerate_kernel(const Gf2Matrix& d, std::size_t limit) {
  std::vector<Chain> members;
  for_each_input(d, limit, [&](const Chain& x, const Chain& y) {
    if (is_zero(y)) members.push_back(x);
  });
  return finish(d.cols(), std::move(members));
}

ChainSet enumerate_image(const Gf2Matrix& d, std::size_t limit) {
  std::vector<Chain> members;
  for_each_input(d, limit, [&](const Chain&, const Chain& y) { members.push_back(y); });
  return finish(d.rows(), std::move(members));
}

std::size_t oracle_betti(const SimplicialComplex& c, std::size_t n, std::size_t limit) {
  const ChainSet cycles = enumerate_kernel(boundary_matrix(c, n), limit);
  const ChainSet boundaries = enumerate_image(boundary_matrix(c, n + 1), limit);
  if (!boundaries.is_subset_of(cycles)) {
    throw std::logic_error("oracle_betti: a boundary is not a cycle in dimension " +
                           std::to_string(n));
  }
  return cycles.dimension() - boundaries.dimension();
}

std::size_t oracle_persistent_betti(const Filtration& f, std::size_t n, std::size_t j,
                                    std::size_t p, std::size_t limit) {
  f.check_levels(j, p);
  const auto& source = f.level(j);
  const auto& target = f.level(p);
  const ChainSet cycles = enumerate_kernel(boundary_matrix(source, n), limit);
  const ChainSet boundaries = enumerate_image(boundary_matrix(target, n + 1), limit);

  // Position in K^p of each n-simplex of K^j.
  const auto simplices = source.n_simplices(n);
  std::vector<std::size_t> position(simplices.size());
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    const auto where = target.index_of(simplices[k]);
    if (!where) throw std::logic_error("oracle: " + simplices[k].to_string() + " missing from K^p");
    position[k] = *where;
  }

  std::vector<Chain> moved;
  moved.reserve(cycles.members.size());
  for (const auto& z : cycles.members) {
    Chain image = empty_chain(target.count(n));
    for (std::size_t k = 0; k < simplices.size(); ++k) {
      if ((z[k / kBits] >> (k % kBits)) & 1U) toggle(image, position[k]);
    }
    moved.push_back(std::move(image));
  }
  const ChainSet included = finish(target.count(n), std::move(moved));
  const ChainSet dead = intersect(included, boundaries);
  return included.dimension() - dead.dimension();
}

bool within_bounds(const SimplicialComplex& c, std::size_t n, std::size_t limit) {
  return c.count(n) <= limit && c.count(n + 1) <= limit;
}

bool within_bounds(const Filtration& f, std::size_t n, std::size_t j, std::size_t p,
                   std::size_t limit) {
  return f.level(j).count(n) <= limit && f.level(p).count(n + 1) <= limit;
}

}  // namespace phcalc::oracle
