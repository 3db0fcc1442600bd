#pragma once

// Persistent Betti numbers, birth/death multiplicities and barcodes of a
// filtration, all computed from GF(2) ranks.
//
// Conventions: beta(j, p) is the p-persistent n-th Betti number of K^j, the
// number of n-classes of K^j still alive in K^p. beta(-1, p) = 0. Classes
// alive in the last level are reported as infinite bars.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phcalc/filtration.hpp"
#include "phcalc/gf2.hpp"

namespace phcalc {

/// Which of two algebraically equal rank expressions to evaluate.
enum class PBettiForm {
  // z - (rank(D_g) + z - rank([D_g | I K])), z = dim ker D_f.
  kKernelComplement,
  // rank([D_g | I K]) - rank(D_g).
  kRankDifference,
};

/// Persistent Betti number from matrices: `cycles_of` is D_n on K^j,
/// `boundaries_into` is D_{n+1} on K^p and `inclusion` maps C_n(K^j) into
/// C_n(K^p). Throws std::invalid_argument on non-conforming shapes.
std::size_t pbetti_rank(const Gf2Matrix& cycles_of, const Gf2Matrix& boundaries_into,
                        const Gf2Matrix& inclusion,
                        PBettiForm form = PBettiForm::kKernelComplement);

/// beta_n^{j,p}. Throws std::out_of_range unless 0 <= j <= p <= m.
std::size_t persistent_betti(const Filtration& f, std::size_t n, std::size_t j, std::size_t p,
                             PBettiForm form = PBettiForm::kKernelComplement);

/// All beta_n^{j,p} for 0 <= j <= p <= m.
class BettiTable {
 public:
  BettiTable(std::size_t dimension, std::size_t last_level);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t last_level() const noexcept { return last_level_; }

  /// beta(j, p); j == -1 (passed as nullopt) yields 0.
  std::size_t at(std::size_t j, std::size_t p) const;
  std::size_t at_or_zero(std::optional<std::size_t> j, std::size_t p) const {
    return j ? at(*j, p) : 0;
  }
  void set(std::size_t j, std::size_t p, std::size_t value);

  /// Entries (j, j..m).
  std::vector<std::size_t> row(std::size_t j) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t offset(std::size_t j, std::size_t p) const;

  std::size_t dimension_;
  std::size_t last_level_;
  std::vector<std::size_t> values_;
};

/// Builds the table reusing each level's boundary matrices and cycle basis.
/// With jobs > 1 the rows are computed on that many threads; the result is
/// identical to the sequential one.
BettiTable betti_table(const Filtration& f, std::size_t n, unsigned jobs = 1);

/// Classes born at K^j that die entering K^p, as the signed difference of
/// differences. Throws std::out_of_range unless 0 <= j < p <= m.
std::int64_t mu(const BettiTable& table, std::size_t j, std::size_t p);
std::int64_t mu(const Filtration& f, std::size_t n, std::size_t j, std::size_t p);

/// Classes born at K^j that never die: beta(j, m) - beta(j - 1, m).
std::int64_t mu_infinity(const BettiTable& table, std::size_t j);
std::int64_t mu_infinity(const Filtration& f, std::size_t n, std::size_t j);

struct PersistencePair {
  std::size_t birth = 0;
  std::optional<std::size_t> death;  // nullopt: never dies
  std::size_t multiplicity = 1;

  bool infinite() const noexcept { return !death.has_value(); }
  /// Alive from K^k through K^l.
  bool spans(std::size_t k, std::size_t l) const noexcept { return birth <= k && (!death || *death > l); }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Birth first, then death with infinite deaths last.
bool pair_order(const PersistencePair& a, const PersistencePair& b);

struct Barcode {
  std::size_t dimension = 0;
  std::vector<PersistencePair> pairs;

  std::size_t total_multiplicity() const;
  /// Sum of multiplicities over pairs alive from K^k through K^l.
  std::size_t spanning_count(std::size_t k, std::size_t l) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Raised when a birth/death multiplicity comes out negative, which cannot
/// happen on a genuine filtration.
class NegativeMultiplicityError : public std::runtime_error {
 public:
  NegativeMultiplicityError(std::size_t n, std::size_t j, std::optional<std::size_t> p,
                            std::int64_t value);
  std::size_t dimension() const noexcept { return n_; }
  std::size_t birth() const noexcept { return j_; }
  std::optional<std::size_t> death() const noexcept { return p_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  std::size_t n_;
  std::size_t j_;
  std::optional<std::size_t> p_;
  std::int64_t value_;
};

Barcode barcode(const BettiTable& table);
Barcode barcode(const Filtration& f, std::size_t n);

struct LemmaViolation {
  enum class Kind {
    kFiniteSum,     // beta(k,l) != sum_{i<=k} sum_{l<j<=m} mu(i,j) + beta(k,m)
    kBarcodeSpan,   // beta(k,l) != number of bars alive over [k,l]
    kNegativeMu,    // some mu(i,j) < 0; j == nullopt for the infinite bar
  };
  Kind kind;
  std::size_t k;
  std::optional<std::size_t> l;
  std::int64_t expected;
  std::int64_t actual;

  std::string describe() const;
};

struct FundamentalLemmaReport {
  std::size_t dimension = 0;
  std::size_t pairs_checked = 0;
  std::vector<LemmaViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks, for every 0 <= k <= l <= m, that beta(k,l) equals both the finite
/// mu-sum plus beta(k,m) and the number of bars spanning [k,l].
FundamentalLemmaReport check_fundamental_lemma(const BettiTable& table);
FundamentalLemmaReport check_fundamental_lemma(const Filtration& f, std::size_t n);

const char* to_string(LemmaViolation::Kind kind);

}  // namespace phcalc
