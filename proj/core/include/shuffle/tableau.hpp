#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/perm.hpp"

namespace shuffle {

// English orientation: row 0 on top.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  NumberPartition shape() const;
  int size() const { return n_; }
  // 0-based (row, column) of an entry
  std::pair<int, int> position(int entry) const;
  std::string str() const;  // "1 3 5/2 4"

  auto operator<=>(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

std::uint64_t hook_dimension(const NumberPartition& lambda);

// The tableau with n in corner c comes before those with n in a lower corner;
// within a corner the order of the smaller shape is kept. This is the basis
// order of the seminormal representations.
std::vector<StandardTableau> enumerate_syt(const NumberPartition& lambda);

// i is a descent when i+1 lies in a strictly lower row.
std::vector<int> tableau_descents(const StandardTableau& q);
int maj(const StandardTableau& q);

struct EigK {
  int j = 0;
  int k = 0;
};

EigK eig_and_k(const StandardTableau& q);

StandardTableau demote(const StandardTableau& q);
// Inverse of demote^j for a desarrangement qhat and a shape mu with
// mu / shape(qhat) a horizontal strip of size j.
StandardTableau undemote(const StandardTableau& qhat, const NumberPartition& mu);
// mu / nu is a horizontal strip (nu contained in mu, at most one cell per column)
bool is_horizontal_strip(const NumberPartition& mu, const NumberPartition& nu);

StandardTableau shaven_plus(int n);   // n odd >= 3
StandardTableau shaven_minus(int n);  // n even >= 4
int epsilon(const StandardTableau& q);

// Sorted multiset {(shape(Q), epsilon(Q)) : eig(Q) = j}.
std::vector<std::pair<NumberPartition, int>> predicted_factor(int n, int j);

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w);

}  // namespace shuffle
