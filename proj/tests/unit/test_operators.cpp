#include <doctest.h>

#include "shuffle/characters.hpp"
#include "shuffle/operators.hpp"
#include "shuffle/poly.hpp"

using namespace shuffle;

namespace {
NumberPartition P(const char* s) { return NumberPartition::parse(s); }

GroupAlgebraElement from_ints(int n, const std::vector<std::int64_t>& d) {
  std::vector<Rational> r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r[i] = static_cast<long>(d[i]);
  return GroupAlgebraElement::from_dense(n, r);
}
}  // namespace

TEST_CASE("nu element coefficients") {
  const auto nu = nu_element(P("21"));
  CHECK(nu.coefficient(Permutation::from_string("123")) == 3);
  CHECK(nu.coefficient(Permutation::from_string("213")) == 2);
  CHECK(nu.coefficient(Permutation::from_string("132")) == 2);
  CHECK(nu.coefficient(Permutation::from_string("231")) == 1);
  CHECK(nu.coefficient(Permutation::from_string("312")) == 1);
  CHECK(nu.coefficient(Permutation::from_string("321")) == 0);
  for (int n = 1; n <= 5; ++n) {
    CHECK(nu_element(NumberPartition({n})) == GroupAlgebraElement::identity(n));
    for (auto c : nu_dense(NumberPartition(std::vector<int>(n, 1)))) CHECK(c == 1);
  }
}

TEST_CASE("nu matrix symmetry, row sums and positivity") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      const auto m = nu_matrix(lam);
      CHECK(m.is_symmetric());
      const auto coeffs = nu_dense(lam);
      // M[u][v] = a(v^{-1} u)
      const auto perms = all_permutations(n);
      for (std::size_t u = 0; u < perms.size(); u += 5)
        for (std::size_t v = 0; v < perms.size(); v += 3)
          CHECK(m(u, v) == coeffs[lex_rank(compose(inverse(perms[v]), perms[u]))]);
      if (lam[0] >= 2 && lam.length() == 1 + n - lam[0]) {
        const int k = lam[0];
        const auto expected = static_cast<std::int64_t>(binomial(n, k) * binomial(n, k) * factorial(n - k));
        for (std::size_t r = 0; r < m.rows(); ++r) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c);
          CHECK(s == expected);
        }
      }
      if (n <= 5) {
        const auto ev = numeric_eigenvalues_symmetric(to_exact(m));
        CHECK(ev.front() > -1e-7);
      }
    }
  CHECK_THROWS(nu_matrix(P("8")));
}

TEST_CASE("pi factorization") {
  CHECK(pi_matrix(P("21")).rows() == 6);
  CHECK(pi_matrix(P("111")).rows() == 1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      const auto pi = pi_matrix(lam);
      CHECK(pi.transpose() * pi == nu_matrix(lam));
    }
  const auto pi = to_exact(pi_matrix(P("211")));
  const auto nu = to_exact(nu_matrix(P("211")));
  CHECK(rank(pi) == rank(nu));
  CHECK(rank(vstack(pi, nu)) == rank(nu));
}

TEST_CASE("coset square root") {
  CHECK(coset_square_root(P("21")).n_x == 1);
  CHECK(coset_square_root(P("211")).n_x == 2);
  CHECK(coset_square_root(P("22")).n_x == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      const auto c = coset_square_root(lam);
      CHECK(c.n_x == c.n_x_formula);
      CHECK(c.left * c.right * Rational(1, c.n_x) == nu_element(lam));
    }
}

TEST_CASE("eulerian idempotents") {
  const auto e2 = eulerian_idempotents(2);
  const auto id = Permutation::from_string("12"), s = Permutation::from_string("21");
  CHECK(e2[0].coefficient(id) == Rational(1, 2));
  CHECK(e2[0].coefficient(s) == Rational(-1, 2));
  CHECK(e2[1].coefficient(id) == Rational(1, 2));
  CHECK(e2[1].coefficient(s) == Rational(1, 2));
  for (int n = 1; n <= 5; ++n) {
    const auto e = eulerian_idempotents(n);
    GroupAlgebraElement sum(n), alt(n);
    for (int j = 1; j <= n; ++j) {
      sum = sum + e[j - 1];
      alt = alt + e[j - 1] * Rational(j % 2 ? -1 : 1);
    }
    CHECK(sum == GroupAlgebraElement::identity(n));
    CHECK(alt == GroupAlgebraElement::basis(longest_element(n), n % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(e[i] * e[j] == (i == j ? e[i] : GroupAlgebraElement(n)));
  }
}

TEST_CASE("perron eigenvalue, sign rule and mobius") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) CHECK(perron_check(lam).ok);
    CHECK(sgn_rule_check(n).ok);
  }
  for (int n = 1; n <= 6; ++n)
    CHECK(partition_lattice_mobius(n) == (n % 2 ? 1 : -1) * static_cast<std::int64_t>(factorial(n - 1)));
}

TEST_CASE("second family eigenvalue") {
  auto v = second_family_eigenvalue(P("4"), 1);
  CHECK(v.eigenvalue == 72);
  CHECK(v.trace == 72);
  v = second_family_eigenvalue(P("22"), 2);
  CHECK(v.eigenvalue == 8);
  CHECK(v.trace == 8);
  CHECK(v.divided == 4);
  CHECK(v.block_rank == 1);
  v = second_family_eigenvalue(P("1111"), 0);
  CHECK(v.eigenvalue == 0);
  CHECK(second_family_eigenvalue(P("4"), 0).eigenvalue == 24);
  CHECK(oddcols(P("4")) == 4);
  CHECK(oddcols(P("31")) == 2);
  CHECK(oddcols(P("22")) == 0);
}

TEST_CASE("commuting pairs at n = 4, 5") {
  const auto s4 = commuting_pairs_scan(4);
  auto has = [](const CommutingPairs& c, const char* a, const char* b) {
    for (const auto& [x, y] : c.commuting)
      if ((x == P(a) && y == P(b)) || (x == P(b) && y == P(a))) return true;
    return false;
  };
  CHECK(has(s4, "211", "31"));
  CHECK(has(s4, "211", "22"));
  CHECK(s4.matches);
  const auto s5 = commuting_pairs_scan(5);
  CHECK_FALSE(has(s5, "311", "221"));
  CHECK(s5.matches);
}

TEST_CASE("family partitions") {
  CHECK(family_partitions(4, Family::Columns) == std::vector<NumberPartition>{P("1111"), P("211"), P("31")});
  CHECK(family_partitions(4, Family::TwoBlocks) == std::vector<NumberPartition>{P("1111"), P("211"), P("22")});
  CHECK(family_partitions(1, Family::Columns).size() == 1);
  CHECK(parse_family("two-blocks") == Family::TwoBlocks);
  CHECK_THROWS(parse_family("rows"));
}

TEST_CASE("group algebra products match dense products") {
  DenseIntAlgebra alg(4);
  const auto a = nu_dense(P("211")), b = nu_dense(P("31"));
  CHECK(from_ints(4, alg.multiply(a, b)) == nu_element(P("211")) * nu_element(P("31")));
  CHECK(alg.multiply(a, b) == alg.multiply(b, a));
}
