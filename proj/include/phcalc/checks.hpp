#pragma once

// Whole-filtration self checks behind `phcalc check`.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "phcalc/filtration.hpp"

namespace phcalc {

struct CheckOptions {
  std::optional<std::size_t> max_dim;  // top dimension of K^m when unset
  bool oracle = false;
  std::optional<std::size_t> oracle_limit;  // oracle::column_limit() when unset
  unsigned jobs = 1;
};

struct CheckTally {
  std::string name;
  std::size_t run = 0;
  std::size_t failed = 0;
};

struct CheckViolation {
  std::string check;
  nlohmann::json where;  // indices locating the failure
  std::string message;
};

struct CheckReport {
  std::size_t max_dim = 0;
  std::vector<CheckTally> tallies;
  std::vector<CheckViolation> violations;
  std::size_t oracle_skipped = 0;

  bool ok() const noexcept { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Runs, for every dimension n <= max_dim:
///   nilpotency          D_n D_{n+1} = 0 on every level
///   inclusion           rank(i_n^{j,p}) = |S_n(K^j)|, one 1 per column
///   chain_map           D_n(K^p) i_n^{j,p} = i_{n-1}^{j,p} D_n(K^j)
///   formula_agreement   both persistent Betti rank expressions agree
///   fundamental_lemma   check_fundamental_lemma reports no violation
/// and with `oracle` set, also oracle_betti / oracle_persistent_betti on
/// every instance within the enumeration limit.
CheckReport run_checks(const Filtration& f, const CheckOptions& options);

}  // namespace phcalc
