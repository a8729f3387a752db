#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"
#include "shuffle/poly.hpp"

namespace shuffle {

// Ordered set partition of {1..n}; a face of the braid arrangement.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<std::vector<int>> blocks);
  static Face chamber(const Permutation& w);  // ({w(1)}, ..., {w(n)})

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int size() const { return n_; }
  bool is_chamber() const { return static_cast<int>(blocks_.size()) == n_; }
  std::vector<int> composition() const;
  SetPartition support() const;
  Permutation as_permutation() const;  // chambers only
  Face act(const Permutation& w) const;  // relabel every entry by w
  // "{1,2}{3}"
  std::string str() const;
  auto operator<=>(const Face&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

// x pulled by y: blocks B & C for B in x order, C in y order.
Face face_product(const Face& x, const Face& y);

// Blocks of the standard set partition of type lambda, in order.
Face standard_face(const NumberPartition& lambda);
// All faces whose block sizes read alpha in order.
std::vector<Face> faces_of_composition(const std::vector<int>& alpha);
std::vector<std::vector<int>> compositions_of(int n);

// Left multiplication on chambers by the orbit sum of standard_face(lambda);
// chambers indexed by lexicographic rank. n <= 7.
IntMatrix bhr_matrix(const NumberPartition& lambda);

using FaceWeights = std::map<std::vector<int>, Rational>;  // composition -> weight

struct BrownReport {
  Polynomial min_poly;
  Factorization factors;
  std::vector<Rational> support_values;  // distinct lambda_X, descending
  bool squarefree = false;
  bool roots_in_support = false;
  bool equivariant = false;
  bool ok() const { return squarefree && roots_in_support && equivariant; }
};
// Minimal polynomial of the weighted face operator on chambers.
BrownReport brown_min_poly(const FaceWeights& weights, int n);
// Integer weights 0..9 on every composition of n.
FaceWeights random_invariant_weights(int n, std::uint64_t seed);

}  // namespace shuffle
