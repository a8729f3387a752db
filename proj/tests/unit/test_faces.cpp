#include <doctest.h>

#include <random>

#include "shuffle/faces.hpp"
#include "shuffle/operators.hpp"

using namespace shuffle;

namespace {
NumberPartition P(const char* s) { return NumberPartition::parse(s); }

Face random_face(int n, std::mt19937_64& rng) {
  auto comps = compositions_of(n);
  const auto& alpha = comps[rng() % comps.size()];
  auto faces = faces_of_composition(alpha);
  return faces[rng() % faces.size()];
}
}  // namespace

TEST_CASE("face product") {
  const Face x({{1, 2}, {3}}), y({{2}, {1}, {3}});
  CHECK(face_product(x, y) == Face({{2}, {1}, {3}}));
  CHECK(face_product(y, x) == y);
  CHECK_THROWS(Face({{1, 2}, {2}}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Face a = random_face(5, rng), b = random_face(5, rng);
    CHECK(face_product(a, a) == a);
    CHECK(face_product(face_product(a, b), a) == face_product(a, b));
    const Face c = Face::chamber(lex_unrank(5, rng() % 120));
    CHECK(face_product(c, a) == c);
    CHECK(face_product(a, b).act(lex_unrank(5, 7)) == face_product(a.act(lex_unrank(5, 7)), b.act(lex_unrank(5, 7))));
  }
}

TEST_CASE("faces of a composition") {
  CHECK(compositions_of(4).size() == 8);
  CHECK(faces_of_composition({2, 1, 1}).size() == 12);
  CHECK(faces_of_composition({1, 1, 1}).size() == 6);
  std::size_t total = 0;
  for (const auto& a : compositions_of(5)) total += faces_of_composition(a).size();
  CHECK(total == 541);
  CHECK(standard_face(P("211")) == Face({{1, 2}, {3}, {4}}));
}

TEST_CASE("bhr correspondence and shared kernels") {
  for (int n = 1; n <= 5; ++n) {
    DenseIntAlgebra alg(n);
    for (const auto& lam : partitions_of(n)) {
      const auto b = bhr_matrix(lam);
      const auto c = coset_square_root(lam);
      std::vector<std::int64_t> left(factorial(n), 0);
      for (const auto& [w, coef] : c.left.terms()) left[lex_rank(w)] = coef.get_num().get_si();
      CHECK(b == alg.right_multiplication_matrix(left));
      const auto nu = nu_matrix(lam);
      const auto btb = b.transpose() * b;
      bool scaled = true;
      for (std::size_t i = 0; i < nu.data().size(); ++i) scaled = scaled && btb.data()[i] == c.n_x * nu.data()[i];
      CHECK(scaled);
      if (n <= 4) {
        const auto eb = to_exact(b), en = to_exact(nu);
        CHECK(rank(eb) == rank(en));
        CHECK(rank(vstack(eb, en)) == rank(en));
      } else {
        CHECK(rank_modular(b) == rank_modular(nu));
        CHECK(rank_modular(vstack(b, nu)) == rank_modular(nu));
      }
    }
  }
  // random-to-top at n = 4 moves one card to the top in 4 ways
  const auto rtt = bhr_matrix(P("31"));
  for (std::size_t c = 0; c < rtt.cols(); ++c) {
    std::int64_t s = 0;
    for (std::size_t r = 0; r < rtt.rows(); ++r) s += rtt(r, c);
    CHECK(s == 4);
  }
}

TEST_CASE("brown minimal polynomial") {
  // n = 2: central face p0, chambers p and p'
  FaceWeights w{{{2}, 3}, {{1, 1}, 5}};
  auto rep = brown_min_poly(w, 2);
  CHECK(rep.ok());
  CHECK(rep.min_poly == Polynomial::linear_root(3) * Polynomial::linear_root(13));
  rep = brown_min_poly({{{1, 1}, 0}}, 2);
  CHECK(rep.min_poly == Polynomial::monomial(1, 1));
  CHECK_THROWS(brown_min_poly({{{2}, -1}}, 2));
  rep = brown_min_poly({{{2, 1, 1}, 1}}, 4);
  CHECK(rep.ok());
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(brown_min_poly(random_invariant_weights(4, seed), 4).ok());
}
