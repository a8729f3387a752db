#include <doctest.h>

#include <complex>
#include <random>

#include "shuffle/characters.hpp"
#include "shuffle/fourier.hpp"

using namespace shuffle;

TEST_CASE("murnaghan nakayama values") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      CHECK(mn_character(NumberPartition({n}), mu) == 1);
      CHECK(mn_character(NumberPartition(std::vector<int>(n, 1)), mu) == ((n - mu.length()) % 2 ? -1 : 1));
    }
  CHECK(mn_character(NumberPartition({2, 1}), NumberPartition({3})) == -1);
  CHECK(mn_character(NumberPartition({3, 2}), NumberPartition({1, 1, 1, 1, 1})) == 5);
}

TEST_CASE("character table orthogonality") {
  for (int n = 1; n <= 9; ++n) {
    const auto t = character_table(n);
    const auto k = t.classes.size();
    for (std::size_t a = 0; a < k; ++a) {
      CHECK(t.values[a][t.class_index(NumberPartition(std::vector<int>(n, 1)))] ==
            static_cast<std::int64_t>(hook_dimension(t.irreducibles[a])));
      for (std::size_t b = 0; b < k; ++b) {
        __int128 s = 0;
        for (std::size_t c = 0; c < k; ++c) s += static_cast<__int128>(t.class_sizes[c]) * t.values[a][c] * t.values[b][c];
        CHECK(s == (a == b ? static_cast<__int128>(factorial(n)) : 0));
        // column orthogonality
        __int128 col = 0;
        for (std::size_t l = 0; l < k; ++l) col += static_cast<__int128>(t.values[l][a]) * t.values[l][b];
        CHECK(col == (a == b ? static_cast<__int128>(factorial(n) / t.class_sizes[a]) : 0));
      }
    }
  }
}

TEST_CASE("seminormal relations") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& lam : partitions_of(n)) {
      SeminormalRep rep(lam);
      CHECK(rep.dim() == hook_dimension(lam));
      const auto I = ExactMatrix::identity(rep.dim());
      auto word = [&](std::vector<int> w) { return rep.rho_of_word(w); };
      for (int i = 1; i < n; ++i) {
        CHECK(word({i, i}) == I);
        if (i + 1 < n) CHECK(word({i, i + 1, i}) == word({i + 1, i, i + 1}));
        for (int j = i + 2; j < n; ++j) CHECK(word({i, j}) == word({j, i}));
      }
    }
  SeminormalRep triv(NumberPartition({4}));
  SeminormalRep sgn4(NumberPartition({1, 1, 1, 1}));
  for (int i = 1; i < 4; ++i) {
    CHECK(triv.generator(i)(0, 0) == 1);
    CHECK(sgn4.generator(i)(0, 0) == -1);
  }
  SeminormalRep r21(NumberPartition({2, 1}));
  CHECK(trace(r21.rho_of_word({1, 2})) == -1);
}

TEST_CASE("seminormal traces are characters and rho is multiplicative") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      SeminormalRep rep(lam);
      const auto perms = all_permutations(n);
      for (const auto& w : perms) CHECK(trace(rep.rho(w)) == mn_character(lam, cycle_type(w)));
      for (std::size_t a = 0; a < perms.size(); a += 7)
        for (std::size_t b = 0; b < perms.size(); b += 5)
          CHECK(rep.rho(compose(perms[a], perms[b])) == rep.rho(perms[a]) * rep.rho(perms[b]));
    }
}

TEST_CASE("reduced word") {
  for (const auto& w : all_permutations(5)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == inversions(w));
    Permutation p = Permutation::identity(5);
    for (int i : word) p = compose(p, adjacent_transposition(5, i));
    CHECK(p == w);
  }
}

TEST_CASE("rho of element") {
  CHECK(rho_of_element(SeminormalRep(NumberPartition({2, 2})), GroupAlgebraElement::identity(4)) ==
        ExactMatrix::identity(2));
}

TEST_CASE("fourier transform agrees with direct sums") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    FourierEngine fe(n);
    std::vector<Rational> a(factorial(n)), b(factorial(n));
    for (auto& x : a) {
      x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
      x.canonicalize();
    }
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    auto ea = GroupAlgebraElement::from_dense(n, a);
    auto eb = GroupAlgebraElement::from_dense(n, b);
    auto fa = fe.transform(a);
    auto fb = fe.transform(b);
    auto fab = fe.transform(ea * eb);
    for (std::size_t l = 0; l < fe.partitions().size(); ++l) {
      const auto& rep = fe.rep(fe.partitions()[l]);
      CHECK(fa[l] == rho_of_element(rep, ea));
      CHECK(fab[l] == fa[l] * fb[l]);
    }
  }
}

TEST_CASE("isotypic multiplicities") {
  for (int n = 1; n <= 5; ++n) {
    ClassFunction reg;
    for (const auto& mu : partitions_of(n)) reg[mu] = mu.multiplicity(1) == n ? Rational(static_cast<long>(factorial(n))) : 0;
    for (const auto& [lam, m] : isotypic_multiplicities(reg)) CHECK(m == Rational(static_cast<long>(hook_dimension(lam))));
  }
  // Ind from <(12),(34)> of sgn x trivial
  std::vector<std::pair<Permutation, Rational>> h{{Permutation::from_string("1234"), 1},
                                                  {Permutation::from_string("2134"), -1},
                                                  {Permutation::from_string("1243"), 1},
                                                  {Permutation::from_string("2143"), -1}};
  auto m = isotypic_multiplicities(induced_character_exact(h, 4));
  CHECK(m[NumberPartition({3, 1})] == 1);
  CHECK(m[NumberPartition({2, 1, 1})] == 1);
  CHECK(m[NumberPartition({4})] == 0);
  CHECK(m[NumberPartition({2, 2})] == 0);
  CHECK(m[NumberPartition({1, 1, 1, 1})] == 0);
}

TEST_CASE("induced characters from cyclic subgroups") {
  // Z_3 generated by a 3-cycle with a primitive cube root of unity
  const double pi = std::acos(-1.0);
  std::vector<std::pair<Permutation, std::complex<double>>> h;
  Permutation c = Permutation::from_string("231");
  Permutation p = Permutation::identity(3);
  for (int k = 0; k < 3; ++k) {
    h.emplace_back(p, std::polar(1.0, 2 * pi * k / 3));
    p = compose(c, p);
  }
  auto m = rounded_multiplicities(induced_character(h, 3));
  CHECK(m[NumberPartition({2, 1})] == 1);
  CHECK(m[NumberPartition({3})] == 0);
  CHECK(m[NumberPartition({1, 1, 1})] == 0);

  // trivial from S_k x S_{n-k} at k = n is the trivial character
  std::vector<std::pair<Permutation, std::complex<double>>> all;
  for (const auto& w : all_permutations(4)) all.emplace_back(w, 1.0);
  auto t = rounded_multiplicities(induced_character(all, 4));
  CHECK(t[NumberPartition({4})] == 1);
  CHECK(t[NumberPartition({3, 1})] == 0);
}
