#include "phcalc/checks.hpp"

#include <map>

#include "phcalc/oracle.hpp"
#include "phcalc/persistence.hpp"

namespace phcalc {

using nlohmann::json;

namespace {

class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void record(const std::string& check, bool passed, json where = json::object(),
              std::string message = {}) {
    auto& tally = tally_for(check);
    ++tally.run;
    if (passed) return;
    ++tally.failed;
    report_.violations.push_back({check, std::move(where), std::move(message)});
  }

 private:
  CheckTally& tally_for(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return report_.tallies[it->second];
    index_.emplace(name, report_.tallies.size());
    report_.tallies.push_back({name, 0, 0});
    return report_.tallies.back();
  }

  CheckReport& report_;
  std::map<std::string, std::size_t> index_;
};

bool one_per_column(const Gf2Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) ones += m.get(r, c) ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace

json CheckReport::to_json() const {
  json tally_json = json::array();
  for (const auto& t : tallies) {
    tally_json.push_back({{"check", t.name}, {"run", t.run}, {"failed", t.failed}});
  }
  json violation_json = json::array();
  for (const auto& v : violations) {
    violation_json.push_back({{"check", v.check}, {"where", v.where}, {"message", v.message}});
  }
  return {{"ok", ok()},
          {"max_dim", max_dim},
          {"checks", std::move(tally_json)},
          {"oracle_skipped", oracle_skipped},
          {"violations", std::move(violation_json)}};
}

CheckReport run_checks(const Filtration& f, const CheckOptions& options) {
  CheckReport report;
  report.max_dim = options.max_dim.value_or(f.final_complex().top_dimension().value_or(0));
  const std::size_t limit = options.oracle_limit.value_or(oracle::column_limit());
  const std::size_t m = f.last_level();
  Recorder rec(report);

  for (std::size_t n = 0; n <= report.max_dim; ++n) {
    for (std::size_t j = 0; j <= m; ++j) {
      const auto& level = f.level(j);
      const bool nil = multiply(boundary_matrix(level, n), boundary_matrix(level, n + 1)).is_zero();
      rec.record("nilpotency", nil, {{"level", j}, {"n", n}}, "D_n * D_{n+1} is not zero");
    }

    for (std::size_t j = 0; j <= m; ++j) {
      for (std::size_t p = j; p <= m; ++p) {
        const json where = {{"n", n}, {"j", j}, {"p", p}};
        const Gf2Matrix inc = inclusion_matrix(f, n, j, p);
        rec.record("inclusion", one_per_column(inc) && rank(inc) == f.level(j).count(n), where,
                   "inclusion matrix is not injective");
        if (n > 0) {
          const Gf2Matrix lhs = multiply(boundary_matrix(f.level(p), n), inc);
          const Gf2Matrix rhs =
              multiply(inclusion_matrix(f, n - 1, j, p), boundary_matrix(f.level(j), n));
          rec.record("chain_map", lhs == rhs, where, "inclusion does not commute with d_n");
        }
      }
    }

    const BettiTable table = betti_table(f, n, options.jobs);
    for (std::size_t j = 0; j <= m; ++j) {
      for (std::size_t p = j; p <= m; ++p) {
        const std::size_t other = persistent_betti(f, n, j, p, PBettiForm::kRankDifference);
        rec.record("formula_agreement", other == table.at(j, p), {{"n", n}, {"j", j}, {"p", p}},
                   "rank-difference form gives " + std::to_string(other) + ", table has " +
                       std::to_string(table.at(j, p)));
      }
    }

    const FundamentalLemmaReport lemma = check_fundamental_lemma(table);
    for (std::size_t i = 0; i < lemma.pairs_checked; ++i) rec.record("fundamental_lemma", true);
    for (const auto& v : lemma.violations) {
      json where = {{"n", n}, {"k", v.k}, {"l", v.l ? json(*v.l) : json(nullptr)}};
      where["kind"] = to_string(v.kind);
      rec.record("fundamental_lemma", false, std::move(where), v.describe());
    }

    if (!options.oracle) continue;
    for (std::size_t j = 0; j <= m; ++j) {
      if (!oracle::within_bounds(f.level(j), n, limit)) {
        ++report.oracle_skipped;
        continue;
      }
      const std::size_t expected = oracle::oracle_betti(f.level(j), n, limit);
      const std::size_t got = table.at(j, j);
      rec.record("oracle_betti", expected == got, {{"n", n}, {"level", j}},
                 "oracle " + std::to_string(expected) + ", rank formula " + std::to_string(got));
    }
    for (std::size_t j = 0; j <= m; ++j) {
      for (std::size_t p = j; p <= m; ++p) {
        if (!oracle::within_bounds(f, n, j, p, limit)) {
          ++report.oracle_skipped;
          continue;
        }
        const std::size_t expected = oracle::oracle_persistent_betti(f, n, j, p, limit);
        const std::size_t got = table.at(j, p);
        rec.record("oracle_persistent_betti", expected == got, {{"n", n}, {"j", j}, {"p", p}},
                   "oracle " + std::to_string(expected) + ", rank formula " + std::to_string(got));
      }
    }
  }
  return report;
}

}  // namespace phcalc
