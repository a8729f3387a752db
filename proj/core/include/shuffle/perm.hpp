#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace shuffle {

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

// Element of S_n in one-line form; w(i) is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // "2413" for n < 10, or comma separated "10,2,...".
  static Permutation from_string(std::string_view s);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
Permutation longest_element(int n);
Permutation adjacent_transposition(int n, int i);

int sign(const Permutation& w);
int inversions(const Permutation& w);
std::vector<int> descent_set(const Permutation& w);

// Lexicographic order on one-line words; rank 0 is the identity.
std::vector<Permutation> all_permutations(int n);
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

class NumberPartition {
 public:
  NumberPartition() = default;
  explicit NumberPartition(std::vector<int> parts);

  // Accepts "(2,1,1)", "2,1,1" or the compact "211".
  static NumberPartition parse(std::string_view s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int multiplicity(int part) const;
  NumberPartition conjugate() const;
  // Compact "211" when every part is a single digit, otherwise "(2,1,1)".
  std::string str() const;

  auto operator<=>(const NumberPartition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Reverse lexicographic: (n) first, (1^n) last.
std::vector<NumberPartition> partitions_of(int n);
NumberPartition hook_partition(int n, int k);
NumberPartition two_block_partition(int n, int k);
NumberPartition cycle_type(const Permutation& w);
std::uint64_t class_size(const NumberPartition& mu);

class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int size() const { return n_; }
  NumberPartition type() const;
  // block index of each element 1..n (entry 0 unused)
  std::vector<int> block_of() const;
  // every block of this is contained in a block of other
  bool refines(const SetPartition& other) const;
  std::string str() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

void for_each_set_partition(int n, const NumberPartition& lambda,
                            const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_set_partitions(int n, const NumberPartition& lambda);
std::vector<SetPartition> all_set_partitions(int n);
// {1..l1}, {l1+1..l1+l2}, ...
SetPartition standard_set_partition(const NumberPartition& lambda);

std::int64_t noninv_k(const Permutation& w, int k);
std::int64_t noninv_lambda(const Permutation& w, const NumberPartition& lambda);
// Only for lambda = (2,1^{n-2}): the inversion number.
std::int64_t inv_lambda(const Permutation& w, const NumberPartition& lambda);

using Word = std::vector<int>;

bool is_lyndon(const Word& x);
std::vector<Word> lyndon_factorization(const Word& x);
NumberPartition lyndon_type(const Word& x);

struct DerangementCounts {
  std::int64_t total = 0;
  std::int64_t even = 0;
  std::int64_t odd = 0;
};

DerangementCounts derangement_counts(int n);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks the three-term recurrences, the signed versions, the sign
// difference, the two-step recurrence and the binomial sum for 2 <= n <= max_n.
IdentityReport derangement_recurrences(int max_n);

// Number of triples (k-subset increasing in u, l-subset increasing in v, uv = w).
std::int64_t d_coefficient(const Permutation& w, int k, int l);

struct GRCheck {
  bool ok = true;
  std::string first_mismatch;
};

// Words of length n over {1..m} with Lyndon type lambda, counted by content,
// against sum over w of cycle type lambda of F_{Des(w)} in m variables.
GRCheck gessel_reutenauer_check(const NumberPartition& lambda, int m, int n);

}  // namespace shuffle
