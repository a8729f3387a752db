#include <doctest.h>

#include "shuffle/linalg.hpp"
#include "shuffle/poly.hpp"

using namespace shuffle;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

Polynomial from_roots(const std::vector<std::pair<long, int>>& roots) {
  std::vector<std::pair<Rational, int>> r;
  for (auto [x, m] : roots) r.emplace_back(Rational(x), m);
  return product_of_linear(r);
}

// nu_(2,1) for n = 3 in lexicographic order 123,132,213,231,312,321
ExactMatrix nu21() {
  return from_rows({{3, 2, 2, 1, 1, 0},
                    {2, 3, 1, 0, 2, 1},
                    {2, 1, 3, 2, 0, 1},
                    {1, 0, 2, 3, 1, 2},
                    {1, 2, 0, 1, 3, 2},
                    {0, 1, 1, 2, 2, 3}});
}

}  // namespace

TEST_CASE("charpoly small cases") {
  CHECK(charpoly(ExactMatrix(2, 2)) == Polynomial::monomial(1, 2));
  CHECK(charpoly(ExactMatrix::identity(3)) == from_roots({{1, 3}}));
  CHECK(charpoly(nu21()) == from_roots({{0, 2}, {1, 1}, {4, 2}, {9, 1}}));
  CHECK(charpoly_interpolation(nu21()) == charpoly(nu21()));
  auto a = from_rows({{2, -1, 0, 5}, {7, 3, 1, 1}, {0, 0, 4, -3}, {1, 2, 3, 4}});
  CHECK(charpoly(a) == charpoly_interpolation(a));
  auto p = charpoly(a);
  CHECK(p.coeff(3) == -trace(a));
  BigIntMatrix b(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) b(i, j) = a(i, j).get_num();
  CHECK(p.coeff(0) == Rational(det_bareiss(b)));
  CHECK_THROWS(charpoly(ExactMatrix(2, 3)));
}

TEST_CASE("factor rational roots") {
  Polynomial quad({Rational(3856), Rational(-248), Rational(1)});
  auto h3 = pow(quad, 3) * from_roots({{24, 4}, {12, 5}});
  auto f = factor_rational_roots(h3);
  REQUIRE(f.roots.size() == 2);
  CHECK(f.roots[0] == std::make_pair(Rational(24), 4));
  CHECK(f.roots[1] == std::make_pair(Rational(12), 5));
  CHECK(f.quadratic == quad);
  CHECK(f.quadratic_power == 3);
  CHECK(f.str() == "(x^2-248x+3856)^3 (x-24)^4 (x-12)^5");

  Polynomial q2({Rational(8), Rational(-8), Rational(1)});
  auto b2 = pow(q2, 2) * from_roots({{0, 3}, {16, 1}});
  auto g = factor_rational_roots(b2);
  CHECK(g.multiplicity(0) == 3);
  CHECK(g.multiplicity(16) == 1);
  CHECK(g.quadratic == q2);
  CHECK(g.quadratic_power == 2);

  auto h = factor_rational_roots(Polynomial({Rational(-1), Rational(0), Rational(1)}));
  CHECK(h.multiplicity(1) == 1);
  CHECK(h.multiplicity(-1) == 1);
  CHECK(h.fully_rational());

  // non-integer rational roots and a non-monic input
  auto k = factor_rational_roots(Polynomial({Rational(-3), Rational(2)}) * Polynomial({Rational(1), Rational(3)}) *
                                 Polynomial({Rational(1), Rational(3)}));
  CHECK(k.multiplicity(Rational(3, 2)) == 1);
  CHECK(k.multiplicity(Rational(-1, 3)) == 2);
  CHECK(k.leading == 18);

  // residual with no rational root and not a quadratic power
  auto m = factor_rational_roots(Polynomial({Rational(-2), Rational(0), Rational(0), Rational(1)}) * from_roots({{5, 2}}));
  CHECK(m.multiplicity(5) == 2);
  CHECK(m.residual.degree() == 3);
  CHECK(m.quadratic_power == 0);

  // large roots with high multiplicity (H4 pattern)
  Polynomial q4({Rational(94233600), Rational(-79680), Rational(1)});
  auto h4 = factor_rational_roots(pow(q4, 4) * from_roots({{3840, 16}, {1440, 5}}));
  CHECK(h4.multiplicity(3840) == 16);
  CHECK(h4.multiplicity(1440) == 5);
  CHECK(h4.quadratic_power == 4);
  CHECK(h4.str() == "(x^2-79680x+94233600)^4 (x-3840)^16 (x-1440)^5");
}

TEST_CASE("charpoly roots evaluate to zero") {
  auto p = charpoly(nu21());
  for (auto [r, mult] : factor_rational_roots(p).roots) CHECK(p(r) == 0);
}

TEST_CASE("kernel and rank") {
  CHECK(kernel_basis(ExactMatrix::identity(4)).cols() == 0);
  ExactMatrix ones(3, 3);
  for (auto& x : ones.data()) x = 1;
  auto k = kernel_basis(ones);
  CHECK(k.cols() == 2);
  CHECK((ones * k).is_zero());
  CHECK(rank(ones) == 1);
  auto a = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  auto ka = kernel_basis(a);
  CHECK(rank(a) + ka.cols() == a.cols());
  CHECK((a * ka).is_zero());
  CHECK(kernel_basis(nu21()).cols() == 2);
  CHECK(column_space_basis(a).cols() == 2);
}

TEST_CASE("modular rank matches exact rank") {
  IntMatrix a(5, 6);
  std::int64_t v = 3;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) a(r, c) = (v = (v * 7919 + 13) % 1009) - 500;
  for (std::size_t c = 0; c < 6; ++c) a(4, c) = a(0, c) - 2 * a(3, c);
  CHECK(rank_modular(a) == rank(to_exact(a)));
  CHECK(rank_modular(a) == 4);
}

TEST_CASE("eigenprojector") {
  ExactMatrix d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 2;
  d(2, 2) = 5;
  ExactMatrix e(3, 3);
  e(2, 2) = 1;
  CHECK(eigenprojector(d, 5) == e);

  auto a = nu21();
  ExactMatrix sum(6, 6);
  for (long ev : {0, 1, 4, 9}) {
    auto p = eigenprojector(a, ev);
    CHECK(p * p == p);
    CHECK(a * p == Rational(ev) * p);
    sum = sum + p;
  }
  CHECK(sum == ExactMatrix::identity(6));
  CHECK(trace(eigenprojector(a, 4)) == 2);
  CHECK_THROWS(eigenprojector(a, 3));
}

TEST_CASE("commutator") {
  auto a = nu21();
  CHECK(commutator_is_zero(a, a));
  auto b = from_rows({{1, 1}, {0, 1}});
  auto c = from_rows({{1, 0}, {1, 1}});
  CHECK(!commutator_is_zero(b, c));
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(nu21()) == from_roots({{0, 1}, {1, 1}, {4, 1}, {9, 1}}));
  auto j = from_rows({{2, 1}, {0, 2}});
  CHECK(minimal_polynomial(j) == from_roots({{2, 2}}));
}

TEST_CASE("numeric eigenvalues are candidates only") {
  auto ev = numeric_eigenvalues_symmetric(nu21());
  REQUIRE(ev.size() == 6);
  CHECK(ev.back() == doctest::Approx(9.0));
}
