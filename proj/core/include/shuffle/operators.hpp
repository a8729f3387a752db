#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shuffle/fourier.hpp"
#include "shuffle/group_algebra.hpp"
#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"

namespace shuffle {

enum class Family { Columns, TwoBlocks };

Family parse_family(const std::string& s);  // "columns" | "two-blocks"
std::string family_name(Family f);
// Columns: (k,1^{n-k}) for k = 1..n-1 (just (1) when n = 1).
// Two-blocks: (2^k,1^{n-2k}) for k = 0..n/2.
std::vector<NumberPartition> family_partitions(int n, Family f);

// sum_w noninv_lambda(w) w
GroupAlgebraElement nu_element(const NumberPartition& lambda);
// Same coefficients indexed by lexicographic rank.
std::vector<std::int64_t> nu_dense(const NumberPartition& lambda);
// Right multiplication by nu_element, M[u][v] = noninv(v^{-1} u). n <= 7.
IntMatrix nu_matrix(const NumberPartition& lambda);

// Rows are (set partition of type lambda, linear order on each block); n <= 7.
IntMatrix pi_matrix(const NumberPartition& lambda);

struct CosetSquareRoot {
  GroupAlgebraElement left;   // sum of y^{-1}
  GroupAlgebraElement right;  // sum of y, blocks of the standard partition increasing in y
  std::int64_t n_x = 0;       // [N(X) : Z(X)], from explicit stabilizers when n <= 6
  std::int64_t n_x_formula = 0;  // prod of factorials of part multiplicities
};
CosetSquareRoot coset_square_root(const NumberPartition& lambda);

// e^(1) .. e^(n) from (1/n!) sum_s (t - des s)(t - des s + 1)...(t - des s + n - 1) s.
std::vector<GroupAlgebraElement> eulerian_idempotents(int n);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> details;
  void fail(std::string msg) {
    ok = false;
    details.push_back(std::move(msg));
  }
};

// Row sums equal #X * [W : Z(X)], and that value is a simple eigenvalue
// (except for lambda = (n), where nu is the identity).
CheckResult perron_check(const NumberPartition& lambda);
// Eigenvalue on the sign representation of nu_(k,1^{n-k}) for k = 1..n.
CheckResult sgn_rule_check(int n);
// mu(0, 1) of the set partition lattice by recursion over all set partitions.
std::int64_t partition_lattice_mobius(int n);

// rho_lambda(nu) for every lambda, in partitions_of order.
std::vector<ExactMatrix> nu_blocks(const FourierEngine& fe, const NumberPartition& op);

struct SecondFamilyEigenvalue {
  Rational trace;      // sum_w noninv(w) chi(w) = trace rho_lambda(nu)
  Rational divided;    // trace / f^lambda
  Rational eigenvalue; // the nonzero eigenvalue of the block (0 if nilpotent)
  int block_rank = 0;
};
SecondFamilyEigenvalue second_family_eigenvalue(const NumberPartition& lambda, int k);

int oddcols(const NumberPartition& lambda);

struct CommutingPairs {
  int n = 0;
  std::vector<std::pair<NumberPartition, NumberPartition>> commuting;
  std::vector<std::pair<NumberPartition, NumberPartition>> predicted;  // both in one family
  bool matches = false;
};
// All pairs of partitions other than (n) and (1^n) whose nu commute.
CommutingPairs commuting_pairs_scan(int n);

}  // namespace shuffle
