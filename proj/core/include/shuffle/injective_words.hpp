#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"

namespace shuffle {

// Injective words of length j over {1..n}, lexicographic.
std::vector<Word> injective_words(int n, int j);
std::size_t injective_word_index(int n, const Word& w);

// Sends a word of length j to the sum of its subwords of length i.
// Columns are indexed by injective_words(n, j), rows by injective_words(n, i).
IntMatrix delplus(int n, int j, int i);
// Alternating sum of the one-letter deletions, length j to length j - 1.
IntMatrix boundary_minus(int n, int j);

struct InjectiveWordsReport {
  int n = 0;
  bool composites_ok = false;     // delplus(j,i) delplus(k,j) = C(k-i,j-i) delplus(k,i)
  bool boundary_squares_zero = false;
  bool sign_twist_ok = false;     // sgn(w) w carries ker delplus(n,n,n-1) onto ker boundary_minus(n,n)
  std::int64_t delplus_kernel_dim = 0;
  std::int64_t boundary_kernel_dim = 0;
  // (lambda, w0 sign) -> multiplicity; n <= 5
  std::map<std::pair<NumberPartition, int>, int> delplus_kernel_content;
  std::map<std::pair<NumberPartition, int>, int> boundary_kernel_content;
  bool conjugate_content = false;  // boundary content is the conjugate, signs times sgn(w0)
  bool ok() const;
};

// n <= 6; the module decompositions are computed for n <= 5.
InjectiveWordsReport injective_words_check(int n);

}  // namespace shuffle
