#include "phcalc/filtration.hpp"

namespace phcalc {

std::string FiltrationViolation::describe() const {
  return "filtration is not nested: simplex " + simplex.to_string() + " of level " +
         std::to_string(level - 1) + " is missing from level " + std::to_string(level);
}

std::optional<FiltrationViolation> validate(std::span<const SimplicialComplex> levels) {
  for (std::size_t j = 1; j < levels.size(); ++j) {
    const auto& prev = levels[j - 1];
    const auto& next = levels[j];
    for (std::size_t n = 0; prev.top_dimension() && n <= *prev.top_dimension(); ++n) {
      for (const auto& s : prev.n_simplices(n)) {
        if (!next.contains(s)) return FiltrationViolation{j, s};
      }
    }
  }
  return std::nullopt;
}

Filtration Filtration::from_levels(std::vector<SimplicialComplex> levels) {
  if (levels.empty()) throw std::invalid_argument("Filtration: at least one level is required");
  if (auto v = validate(levels)) throw FiltrationError(std::move(*v));
  return Filtration(std::move(levels));
}

Filtration Filtration::from_level_facets(const std::vector<std::vector<Simplex>>& level_facets) {
  std::vector<SimplicialComplex> levels;
  levels.reserve(level_facets.size());
  for (const auto& facets : level_facets) levels.push_back(closure_of_facets(facets));
  return from_levels(std::move(levels));
}

void Filtration::check_levels(std::size_t j, std::size_t p) const {
  if (j > p || p > last_level()) {
    throw std::out_of_range("level pair (" + std::to_string(j) + ", " + std::to_string(p) +
                            ") invalid: need 0 <= j <= p <= " + std::to_string(last_level()));
  }
}

Gf2Matrix inclusion_matrix(const Filtration& f, std::size_t n, std::size_t j, std::size_t p) {
  f.check_levels(j, p);
  const auto source = f.level(j).n_simplices(n);
  const auto& target = f.level(p);
  Gf2Matrix m(target.count(n), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) m.set(*target.index_of(source[c]), c);
  return m;
}

}  // namespace phcalc
