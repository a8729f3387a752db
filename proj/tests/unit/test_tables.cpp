#include <doctest.h>

#include <json.hpp>

#include <set>

#include "reference.hpp"
#include "shuffle/tables.hpp"

using namespace shuffle;

namespace {
NumberPartition P(const char* s) { return NumberPartition::parse(s); }
const std::string kData = SHUFFLE_TEST_DATA_DIR;

std::vector<Rational> Q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("n = 3 columns table") {
  const auto t = simultaneous_tables(3, Family::Columns);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].eigenvalues == Q({6, 9}));
  CHECK(t.rows[0].w0 == 1);
  CHECK(t.rows[0].multiplicities == std::map<NumberPartition, int>{{P("3"), 1}});
  CHECK(t.rows[1].eigenvalues == Q({0, 4}));
  CHECK(t.rows[1].w0 == -1);
  CHECK(t.rows[1].multiplicities == std::map<NumberPartition, int>{{P("21"), 1}});
  CHECK(t.rows[2].eigenvalues == Q({0, 1}));
  CHECK(t.rows[2].w0 == -1);
  CHECK(t.rows[2].multiplicities == std::map<NumberPartition, int>{{P("111"), 1}});
  CHECK(t.rows[3].eigenvalues == Q({0, 0}));
  CHECK(t.rows[3].w0 == 1);
  CHECK(t.rows[3].multiplicities == std::map<NumberPartition, int>{{P("21"), 1}});
  CHECK(t.integral);
  CHECK(t.w0_stable);
  CHECK(t.commuting);
}

TEST_CASE("n = 1 columns table") {
  const auto t = simultaneous_tables(1, Family::Columns);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].eigenvalues == Q({1}));
}

TEST_CASE("columns tables match the reference data") {
  for (int n = 2; n <= 6; ++n) {
    const auto t = simultaneous_tables(n, Family::Columns);
    const auto ref = reference::load_columns(kData + "/columns_n" + std::to_string(n) + ".tsv", n >= 6 ? n : 1);
    CHECK_MESSAGE(reference::columns_rows(t) == ref, "n = " << n);
  }
}

TEST_CASE("two-block tables match the reference data") {
  for (int n = 3; n <= 6; ++n) {
    const auto t = simultaneous_tables(n, Family::TwoBlocks);
    const auto ref = reference::load_two_blocks(kData + "/two_blocks_n" + std::to_string(n) + ".tsv");
    CHECK_MESSAGE(reference::two_block_rows(t) == ref, "n = " << n);
  }
  const auto t4 = simultaneous_tables(4, Family::TwoBlocks);
  bool found = false;
  for (const auto& r : t4.rows)
    if (r.multiplicities.count(P("31")) && sgn(r.eigenvalues[1]) != 0) {
      CHECK(r.eigenvalues[1] == 20);
      CHECK(r.eigenvalues[2] == 10);
      CHECK(r.w0 == -1);
      found = true;
    }
  CHECK(found);
  const auto t6 = simultaneous_tables(6, Family::TwoBlocks);
  found = false;
  for (const auto& r : nonzero_rows(t6))
    if (r.multiplicities.count(P("42"))) {
      CHECK(r.eigenvalues == Q({0, 0, 616, 308}));
      CHECK(r.w0 == 1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("threads do not change the table") {
  TableOptions opts;
  opts.threads = 3;
  CHECK(to_tsv(simultaneous_tables(5, Family::Columns, opts)) == to_tsv(simultaneous_tables(5, Family::Columns)));
}

TEST_CASE("table formats") {
  const auto t = simultaneous_tables(3, Family::Columns);
  const auto tsv = to_tsv(t);
  CHECK(tsv.rfind("# n=3 family=columns operators=111,21\n", 0) == 0);
  CHECK(tsv.find("6,9\t1\t3:1\n") != std::string::npos);
  const auto j = nlohmann::json::parse(to_json(t));
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][0]["eigenvalues"] == nlohmann::json::array({6, 9}));
  CHECK(j["rows"][0]["multiplicities"]["3"] == 1);
  const auto md = to_markdown(t);
  CHECK(md.find("| · | 4 | -1 | chi^21 |") != std::string::npos);
}

TEST_CASE("kernel filtration") {
  const auto r4 = kernel_filtration(4, Family::Columns);
  REQUIRE(r4.levels.size() == 5);
  const std::vector<std::int64_t> dims{9, 8, 6, 0, 1};
  for (int j = 0; j <= 4; ++j) CHECK(r4.levels[j].factor_dim == dims[j]);
  CHECK(r4.ok());
  CHECK(r4.full_matrix_checked);
  const auto r5 = kernel_filtration(5, Family::Columns);
  CHECK(r5.levels[0].factor_dim == 44);
  CHECK(r5.ok());
  for (int n = 2; n <= 5; ++n) {
    CHECK(kernel_filtration(n, Family::Columns).ok());
    CHECK(kernel_filtration(n, Family::TwoBlocks).ok());
  }
  // ker nu_31 inside ker nu_211 as subspaces of the regular representation
  const auto a = to_exact(nu_matrix(P("31"))), b = to_exact(nu_matrix(P("211")));
  CHECK(rank(vstack(a, b)) == rank(a));
}

TEST_CASE("gelfand model") {
  for (int n = 1; n <= 6; ++n) CHECK(gelfand_model_check(n).ok);
  const auto t = simultaneous_tables(4, Family::TwoBlocks);
  std::set<NumberPartition> at2;
  for (const auto& r : nonzero_rows(t))
    if (r.block == 2)
      for (const auto& [lam, m] : r.multiplicities) at2.insert(lam);
  CHECK(at2 == std::set<NumberPartition>{P("22"), P("1111")});
}

TEST_CASE("conjectured eigenvalue formulas") {
  for (int n = 4; n <= 6; ++n) {
    const auto rep = conjecture_eigenvalue_formulas(n);
    bool standard_ok = false, shape_22 = false;
    for (const auto& c : rep.cells) {
      if (c.what == "standard isotypic eigenvalues, full multiset") standard_ok = c.match;
      if (c.what.find("chi^" + NumberPartition({n - 2, 2}).str() + " in") != std::string::npos) shape_22 = c.match;
    }
    CHECK(standard_ok);
    CHECK(shape_22);
  }
}
