#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shuffle {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
  bool reported = false;  // a finding to surface, not a pass/fail gate
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 1;
  int samples = 20;         // random instances for sampled suites
  bool allow_long = false;  // E7 and E8 in the rank-one suite
};

// factorizations, commutativity, integrality, filtration, tableaux, gelfand-model,
// brown, eulerian, gr, derangements, conjecture-1.6, conjecture-formulas,
// injective-words, perron, rank-one, gelfand-pair
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite or an n outside its range.
SuiteReport run_suite(const std::string& suite, int n, const VerifyOptions& opts = {});
std::string reports_to_json(const std::vector<SuiteReport>& reports);

// Row of the rank-one table as printed factors, from the closed forms or the
// listed non-crystallographic rows.
std::string expected_rank_one_row(const std::string& label, const std::string& orbit);
// The default rank-one rows as (type, orbit selector); E7 and E8 when allow_long.
std::vector<std::pair<std::string, std::string>> rank_one_table_rows(bool allow_long);

}  // namespace shuffle
