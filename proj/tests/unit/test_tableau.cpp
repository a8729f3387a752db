#include <doctest.h>

#include <map>
#include <set>

#include "shuffle/perm.hpp"
#include "shuffle/tableau.hpp"

using namespace shuffle;

namespace {

StandardTableau column(int n) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) rows.push_back({i});
  return StandardTableau(rows);
}

StandardTableau row(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return StandardTableau({r});
}

// Adds entries n+1, n+2 either as an ascent (both appended to row 0)
// or as a descent (n+1 on row 0, n+2 in a new bottom row).
StandardTableau extend_pair(const StandardTableau& q, bool descent) {
  auto rows = q.rows();
  const int n = q.size();
  rows[0].push_back(n + 1);
  if (descent)
    rows.push_back({n + 2});
  else
    rows[0].push_back(n + 2);
  return StandardTableau(rows);
}

}  // namespace

TEST_CASE("enumerate syt matches hook lengths") {
  CHECK(enumerate_syt(NumberPartition({4})).size() == 1);
  CHECK(enumerate_syt(NumberPartition({2, 1})).size() == 2);
  CHECK(enumerate_syt(NumberPartition({3, 2})).size() == 5);
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (const auto& lam : partitions_of(n)) {
      auto ts = enumerate_syt(lam);
      CHECK(ts.size() == hook_dimension(lam));
      std::set<StandardTableau> distinct(ts.begin(), ts.end());
      CHECK(distinct.size() == ts.size());
      for (const auto& t : ts) CHECK(t.shape() == lam);
      total += ts.size() * ts.size();
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("tableau validation") {
  CHECK_THROWS(StandardTableau({{2, 1}}));
  CHECK_THROWS(StandardTableau({{1, 2}, {2}}));
  CHECK_THROWS(StandardTableau({{1, 3}, {4, 2}}));
  CHECK_THROWS(StandardTableau({{1}, {2, 3}}));
}

TEST_CASE("tableau descents") {
  CHECK(tableau_descents(row(5)).empty());
  CHECK(tableau_descents(column(4)) == std::vector<int>{1, 2, 3});
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) CHECK(tableau_descents(rsk(w).second) == descent_set(w));
}

TEST_CASE("eig and k") {
  CHECK(eig_and_k(row(6)).j == 6);
  CHECK(eig_and_k(row(6)).k == 0);
  CHECK(eig_and_k(column(4)).j == 0);
  CHECK(eig_and_k(column(4)).k == 4);
  CHECK(eig_and_k(column(5)).j == 1);
  CHECK(eig_and_k(column(5)).k == 4);
  for (int n = 2; n <= 7; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& q : enumerate_syt(lam)) {
        auto ek = eig_and_k(q);
        CHECK(ek.k % 2 == 0);
        CHECK(ek.j != n - 1);
        // 1..j-1 are ascents; j+1..j+k-1 descents; j+k an ascent
        auto des = tableau_descents(q);
        std::set<int> d(des.begin(), des.end());
        for (int i = 1; i < ek.j; ++i) CHECK(!d.count(i));
        for (int i = ek.j + 1; i < ek.j + ek.k; ++i) CHECK(d.count(i));
        if (ek.j < n) CHECK(!d.count(ek.j + ek.k));
      }
}

TEST_CASE("demote") {
  CHECK(demote(row(5)) == row(4));
  CHECK(demote(column(5)) == column(4));
  CHECK(demote(StandardTableau({{1, 2, 5}, {3, 4}})) == StandardTableau({{1, 3, 4}, {2}}));
  CHECK_THROWS(demote(StandardTableau()));
}

TEST_CASE("demotion bijection and inverse") {
  for (int n = 2; n <= 7; ++n) {
    std::map<int, std::set<std::pair<StandardTableau, NumberPartition>>> images;
    std::map<int, int> counts;
    for (const auto& lam : partitions_of(n))
      for (const auto& q : enumerate_syt(lam)) {
        const int j = eig_and_k(q).j;
        if (j == 0) continue;
        StandardTableau d = q;
        for (int i = 0; i < j; ++i) d = demote(d);
        CHECK(eig_and_k(d).j == 0);
        CHECK(is_horizontal_strip(q.shape(), d.shape()));
        CHECK(undemote(d, q.shape()) == q);
        images[j].insert({d, q.shape()});
        ++counts[j];
      }
    for (auto [j, c] : counts) {
      CHECK(images[j].size() == static_cast<std::size_t>(c));
      // every admissible pair is hit
      int admissible = 0;
      for (const auto& mu : partitions_of(n - j))
        for (const auto& qh : enumerate_syt(mu)) {
          if (n - j > 0 && eig_and_k(qh).j != 0) continue;
          for (const auto& lam : partitions_of(n)) admissible += is_horizontal_strip(lam, mu);
        }
      CHECK(admissible == c);
    }
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon(StandardTableau()) == 1);
  CHECK(epsilon(shaven_minus(4)) == -1);
  CHECK(epsilon(shaven_minus(6)) == -1);
  CHECK(epsilon(shaven_plus(3)) == 1);
  CHECK(epsilon(shaven_plus(5)) == 1);
  CHECK(eig_and_k(shaven_minus(6)).j == 0);
  CHECK(eig_and_k(shaven_plus(5)).j == 0);

  // A 15-cell tableau built from Q^(6)_- by adding an ascent pair and two
  // descent pairs, then undoing three demotions.
  auto d = extend_pair(extend_pair(extend_pair(shaven_minus(6), false), true), true);
  CHECK(d.size() == 12);
  CHECK(eig_and_k(d).j == 0);
  CHECK(epsilon(d) == -1);
  std::vector<int> mu = d.shape().parts();
  mu[0] += 3;
  auto q = undemote(d, NumberPartition(mu));
  CHECK(q.size() == 15);
  CHECK(eig_and_k(q).j == 3);
  StandardTableau back = q;
  for (int i = 0; i < 3; ++i) back = demote(back);
  CHECK(back == d);
  CHECK(epsilon(q) == -1);
}

TEST_CASE("predicted factors") {
  int total = 0;
  for (const auto& [lam, e] : predicted_factor(4, 0)) total += static_cast<int>(hook_dimension(lam));
  CHECK(total == 9);
  auto top = predicted_factor(3, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == std::make_pair(NumberPartition({3}), 1));
  // third block of the n = 4 table (first nonzero eigenvalue under nu_(3,1))
  auto f41 = predicted_factor(4, 1);
  std::multiset<std::pair<NumberPartition, int>> s(f41.begin(), f41.end());
  CHECK(s.count({NumberPartition({3, 1}), 1}) == 1);
  CHECK(s.count({NumberPartition({2, 2}), 1}) == 1);
  CHECK(s.count({NumberPartition({2, 1, 1}), 1}) == 1);
  CHECK(f41.size() == 3);
  auto f42 = predicted_factor(4, 2);
  CHECK(f42 == std::vector<std::pair<NumberPartition, int>>{{NumberPartition({2, 1, 1}), -1}, {NumberPartition({3, 1}), -1}});
  CHECK(predicted_factor(5, 4).empty());

  for (int n = 1; n <= 9; ++n) {
    std::uint64_t all = 0;
    for (int j = 0; j <= n; ++j) {
      std::int64_t plus = 0, minus = 0;
      for (const auto& [lam, e] : predicted_factor(n, j)) (e > 0 ? plus : minus) += static_cast<std::int64_t>(hook_dimension(lam));
      const auto b = static_cast<std::int64_t>(binomial(n, j));
      auto d = derangement_counts(n - j);
      CHECK(plus + minus == b * d.total);
      CHECK(plus == b * d.even);
      CHECK(minus == b * d.odd);
      all += static_cast<std::uint64_t>(plus + minus);
    }
    CHECK(all == factorial(n));
  }
}

TEST_CASE("rsk") {
  auto [p, q] = rsk(Permutation::identity(4));
  CHECK(p == row(4));
  CHECK(q == row(4));
  auto [p0, q0] = rsk(longest_element(4));
  CHECK(p0 == column(4));
  CHECK(q0 == column(4));
  std::set<std::pair<StandardTableau, StandardTableau>> pairs;
  for (const auto& w : all_permutations(4)) {
    auto pq = rsk(w);
    CHECK(pq.first.shape() == pq.second.shape());
    pairs.insert(pq);
  }
  CHECK(pairs.size() == 24);
}

TEST_CASE("maj") {
  CHECK(maj(row(4)) == 0);
  CHECK(maj(column(5)) == 10);
  auto ts = enumerate_syt(NumberPartition({2, 1}));
  std::multiset<int> m;
  for (const auto& t : ts) m.insert(maj(t));
  CHECK(m == std::multiset<int>{1, 2});
}
