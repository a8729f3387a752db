#include <doctest.h>

#include "shuffle/injective_words.hpp"
#include "shuffle/tableau.hpp"

using namespace shuffle;

namespace {
NumberPartition P(const char* s) { return NumberPartition::parse(s); }
}

TEST_CASE("injective word enumeration and ranks") {
  CHECK(injective_words(4, 2).size() == 12);
  CHECK(injective_words(3, 0).size() == 1);
  const auto w = injective_words(5, 3);
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(injective_word_index(5, w[i]) == i);
}

TEST_CASE("delplus") {
  CHECK(delplus(4, 4, 4) == IntMatrix::identity(24));
  auto rhs = delplus(3, 3, 1);
  for (auto& x : rhs.data()) x *= 2;
  CHECK(delplus(3, 2, 1) * delplus(3, 3, 2) == rhs);
  const auto d = delplus(3, 2, 1);
  // column "12" maps to "1" + "2"
  CHECK(d(0, 0) == 1);
  CHECK(d(1, 0) == 1);
  CHECK(d(2, 0) == 0);
  CHECK_THROWS(delplus(3, 1, 2));
}

TEST_CASE("signed boundary") {
  for (int j = 2; j <= 4; ++j) CHECK((boundary_minus(4, j - 1) * boundary_minus(4, j)).is_zero());
  const auto b = boundary_minus(3, 3);
  // 123 -> 23 - 13 + 12
  CHECK(b(injective_word_index(3, {2, 3}), 0) == 1);
  CHECK(b(injective_word_index(3, {1, 3}), 0) == -1);
  CHECK(b(injective_word_index(3, {1, 2}), 0) == 1);
}

TEST_CASE("injective words report") {
  const auto r4 = injective_words_check(4);
  CHECK(r4.ok());
  CHECK(r4.delplus_kernel_dim == 9);
  CHECK(r4.boundary_kernel_dim == 9);
  CHECK(r4.conjugate_content);
  int total = 0;
  for (const auto& [key, m] : r4.delplus_kernel_content) total += m * static_cast<int>(hook_dimension(key.first));
  CHECK(total == 9);
  const std::int64_t dn[] = {0, 0, 1, 2, 9, 44, 265};
  for (int n = 1; n <= 6; ++n) {
    const auto r = injective_words_check(n);
    CHECK_MESSAGE(r.ok(), "n = " << n);
    CHECK(r.delplus_kernel_dim == dn[n]);
  }
}
