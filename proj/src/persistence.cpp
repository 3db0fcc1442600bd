#include "phcalc/persistence.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace phcalc {

namespace {

std::size_t kernel_complement(std::size_t z, std::size_t rank_g, std::size_t rank_stacked) {
  const auto zi = static_cast<std::int64_t>(z);
  const auto value = zi - (static_cast<std::int64_t>(rank_g) + zi -
                           static_cast<std::int64_t>(rank_stacked));
  if (value < 0) throw std::logic_error("persistent Betti number came out negative");
  return static_cast<std::size_t>(value);
}

std::size_t combine(PBettiForm form, std::size_t z, std::size_t rank_g, std::size_t rank_stacked) {
  if (rank_stacked < rank_g) throw std::logic_error("rank of [D_g | I K] is below rank of D_g");
  if (form == PBettiForm::kRankDifference) return rank_stacked - rank_g;
  return kernel_complement(z, rank_g, rank_stacked);
}

// Per-level pieces shared by every (j, p) entry of a table.
struct LevelPieces {
  Gf2Matrix cycles;           // kernel basis of D_n on this level
  std::size_t cycle_dim = 0;  // |S_n| - rank(D_n)
  Gf2Matrix boundaries;       // D_{n+1} on this level
  std::size_t boundary_rank = 0;
};

LevelPieces pieces_for(const SimplicialComplex& c, std::size_t n) {
  LevelPieces out;
  const Gf2Matrix d = boundary_matrix(c, n);
  out.cycles = kernel_basis(d);
  out.cycle_dim = d.cols() - rank(d);
  out.boundaries = boundary_matrix(c, n + 1);
  out.boundary_rank = rank(out.boundaries);
  return out;
}

}  // namespace

std::size_t pbetti_rank(const Gf2Matrix& cycles_of, const Gf2Matrix& boundaries_into,
                        const Gf2Matrix& inclusion, PBettiForm form) {
  if (inclusion.cols() != cycles_of.cols() || inclusion.rows() != boundaries_into.rows()) {
    throw std::invalid_argument(
        "pbetti_rank: inclusion is " + std::to_string(inclusion.rows()) + "x" +
        std::to_string(inclusion.cols()) + " but must be " +
        std::to_string(boundaries_into.rows()) + "x" + std::to_string(cycles_of.cols()));
  }
  const Gf2Matrix kernel = kernel_basis(cycles_of);
  const std::size_t z = cycles_of.cols() - rank(cycles_of);
  const std::size_t rank_g = rank(boundaries_into);
  const std::size_t rank_stacked = rank(hstack(boundaries_into, multiply(inclusion, kernel)));
  return combine(form, z, rank_g, rank_stacked);
}

std::size_t persistent_betti(const Filtration& f, std::size_t n, std::size_t j, std::size_t p,
                             PBettiForm form) {
  f.check_levels(j, p);
  return pbetti_rank(boundary_matrix(f.level(j), n), boundary_matrix(f.level(p), n + 1),
                     inclusion_matrix(f, n, j, p), form);
}

BettiTable::BettiTable(std::size_t dimension, std::size_t last_level)
    : dimension_(dimension),
      last_level_(last_level),
      values_((last_level + 1) * (last_level + 2) / 2, 0) {}

std::size_t BettiTable::offset(std::size_t j, std::size_t p) const {
  if (j > p || p > last_level_) {
    throw std::out_of_range("BettiTable: entry (" + std::to_string(j) + ", " + std::to_string(p) +
                            ") outside 0 <= j <= p <= " + std::to_string(last_level_));
  }
  // Row j holds p = j..m and is preceded by rows of length m+1, m, ..., m-j+2.
  const std::size_t m1 = last_level_ + 1;
  return j * m1 - j * (j - 1) / 2 + (p - j);
}

std::size_t BettiTable::at(std::size_t j, std::size_t p) const { return values_[offset(j, p)]; }

void BettiTable::set(std::size_t j, std::size_t p, std::size_t value) {
  values_[offset(j, p)] = value;
}

std::vector<std::size_t> BettiTable::row(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t p = j; p <= last_level_; ++p) out.push_back(at(j, p));
  return out;
}

BettiTable betti_table(const Filtration& f, std::size_t n, unsigned jobs) {
  const std::size_t m = f.last_level();
  std::vector<LevelPieces> pieces;
  pieces.reserve(f.size());
  for (const auto& level : f.levels()) pieces.push_back(pieces_for(level, n));

  BettiTable table(n, m);
  auto fill_row = [&](std::size_t j) {
    for (std::size_t p = j; p <= m; ++p) {
      const Gf2Matrix moved = multiply(inclusion_matrix(f, n, j, p), pieces[j].cycles);
      const std::size_t rank_stacked = rank(hstack(pieces[p].boundaries, moved));
      table.set(j, p,
                combine(PBettiForm::kKernelComplement, pieces[j].cycle_dim,
                        pieces[p].boundary_rank, rank_stacked));
    }
  };

  if (jobs <= 1 || m == 0) {
    for (std::size_t j = 0; j <= m; ++j) fill_row(j);
    return table;
  }
  // Rows are interleaved across workers since early rows are longer.
  std::vector<std::future<void>> workers;
  const std::size_t count = std::min<std::size_t>(jobs, m + 1);
  for (std::size_t w = 0; w < count; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t j = w; j <= m; j += count) fill_row(j);
    }));
  }
  for (auto& w : workers) w.get();
  return table;
}

std::int64_t mu(const BettiTable& t, std::size_t j, std::size_t p) {
  if (j >= p || p > t.last_level()) {
    throw std::out_of_range("mu: need 0 <= j < p <= " + std::to_string(t.last_level()) +
                            ", got (" + std::to_string(j) + ", " + std::to_string(p) + ")");
  }
  const std::optional<std::size_t> prev = j == 0 ? std::nullopt : std::optional(j - 1);
  auto b = [&](std::optional<std::size_t> jj, std::size_t pp) {
    return static_cast<std::int64_t>(t.at_or_zero(jj, pp));
  };
  return (b(j, p - 1) - b(j, p)) - (b(prev, p - 1) - b(prev, p));
}

std::int64_t mu(const Filtration& f, std::size_t n, std::size_t j, std::size_t p) {
  if (j >= p || p > f.last_level()) {
    throw std::out_of_range("mu: need 0 <= j < p <= " + std::to_string(f.last_level()) +
                            ", got (" + std::to_string(j) + ", " + std::to_string(p) + ")");
  }
  auto b = [&](std::size_t jj, std::size_t pp) {
    return static_cast<std::int64_t>(persistent_betti(f, n, jj, pp));
  };
  const std::int64_t later = b(j, p - 1) - b(j, p);
  const std::int64_t earlier = j == 0 ? 0 : b(j - 1, p - 1) - b(j - 1, p);
  return later - earlier;
}

std::int64_t mu_infinity(const BettiTable& t, std::size_t j) {
  if (j > t.last_level()) {
    throw std::out_of_range("mu_infinity: level " + std::to_string(j) + " exceeds " +
                            std::to_string(t.last_level()));
  }
  const std::size_t m = t.last_level();
  return static_cast<std::int64_t>(t.at(j, m)) -
         static_cast<std::int64_t>(j == 0 ? 0 : t.at(j - 1, m));
}

std::int64_t mu_infinity(const Filtration& f, std::size_t n, std::size_t j) {
  const std::size_t m = f.last_level();
  if (j > m) {
    throw std::out_of_range("mu_infinity: level " + std::to_string(j) + " exceeds " +
                            std::to_string(m));
  }
  return static_cast<std::int64_t>(persistent_betti(f, n, j, m)) -
         static_cast<std::int64_t>(j == 0 ? 0 : persistent_betti(f, n, j - 1, m));
}

bool pair_order(const PersistencePair& a, const PersistencePair& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
  return a.death.value_or(0) < b.death.value_or(0);
}

std::size_t Barcode::total_multiplicity() const {
  return std::accumulate(pairs.begin(), pairs.end(), std::size_t{0},
                         [](std::size_t acc, const PersistencePair& p) { return acc + p.multiplicity; });
}

std::size_t Barcode::spanning_count(std::size_t k, std::size_t l) const {
  std::size_t total = 0;
  for (const auto& p : pairs) {
    if (p.spans(k, l)) total += p.multiplicity;
  }
  return total;
}

NegativeMultiplicityError::NegativeMultiplicityError(std::size_t n, std::size_t j,
                                                     std::optional<std::size_t> p,
                                                     std::int64_t value)
    : std::runtime_error("negative multiplicity " + std::to_string(value) + " for dimension " +
                         std::to_string(n) + " interval [" + std::to_string(j) + ", " +
                         (p ? std::to_string(*p) : std::string("inf")) + ")"),
      n_(n),
      j_(j),
      p_(p),
      value_(value) {}

Barcode barcode(const BettiTable& table) {
  const std::size_t m = table.last_level();
  Barcode out{table.dimension(), {}};
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t p = j + 1; p <= m; ++p) {
      const std::int64_t count = mu(table, j, p);
      if (count < 0) throw NegativeMultiplicityError(table.dimension(), j, p, count);
      if (count > 0) out.pairs.push_back({j, p, static_cast<std::size_t>(count)});
    }
    const std::int64_t forever = mu_infinity(table, j);
    if (forever < 0) throw NegativeMultiplicityError(table.dimension(), j, std::nullopt, forever);
    if (forever > 0) out.pairs.push_back({j, std::nullopt, static_cast<std::size_t>(forever)});
  }
  std::sort(out.pairs.begin(), out.pairs.end(), pair_order);
  return out;
}

Barcode barcode(const Filtration& f, std::size_t n) { return barcode(betti_table(f, n)); }

const char* to_string(LemmaViolation::Kind kind) {
  switch (kind) {
    case LemmaViolation::Kind::kFiniteSum: return "finite_sum";
    case LemmaViolation::Kind::kBarcodeSpan: return "barcode_span";
    case LemmaViolation::Kind::kNegativeMu: return "negative_mu";
  }
  return "unknown";
}

std::string LemmaViolation::describe() const {
  std::string where = "(" + std::to_string(k) + ", " + (l ? std::to_string(*l) : "inf") + ")";
  return std::string(to_string(kind)) + " at " + where + ": expected " + std::to_string(expected) +
         ", got " + std::to_string(actual);
}

FundamentalLemmaReport check_fundamental_lemma(const BettiTable& table) {
  const std::size_t m = table.last_level();
  FundamentalLemmaReport report;
  report.dimension = table.dimension();

  // Signed multiplicities; negative entries are reported, not thrown.
  std::vector<std::vector<std::int64_t>> finite(m + 1, std::vector<std::int64_t>(m + 1, 0));
  std::vector<std::int64_t> forever(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      finite[i][j] = mu(table, i, j);
      if (finite[i][j] < 0) {
        report.violations.push_back({LemmaViolation::Kind::kNegativeMu, i, j, 0, finite[i][j]});
      }
    }
    forever[i] = mu_infinity(table, i);
    if (forever[i] < 0) {
      report.violations.push_back({LemmaViolation::Kind::kNegativeMu, i, std::nullopt, 0, forever[i]});
    }
  }

  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t l = k; l <= m; ++l) {
      const auto expected = static_cast<std::int64_t>(table.at(k, l));
      std::int64_t dying_later = 0;
      std::int64_t never_dying = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = l + 1; j <= m; ++j) dying_later += finite[i][j];
        never_dying += forever[i];
      }
      const std::int64_t finite_form = dying_later + static_cast<std::int64_t>(table.at(k, m));
      if (finite_form != expected) {
        report.violations.push_back({LemmaViolation::Kind::kFiniteSum, k, l, expected, finite_form});
      }
      const std::int64_t span_form = dying_later + never_dying;
      if (span_form != expected) {
        report.violations.push_back({LemmaViolation::Kind::kBarcodeSpan, k, l, expected, span_form});
      }
      ++report.pairs_checked;
    }
  }
  return report;
}

FundamentalLemmaReport check_fundamental_lemma(const Filtration& f, std::size_t n) {
  return check_fundamental_lemma(betti_table(f, n));
}

}  // namespace phcalc
