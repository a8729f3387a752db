#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "shuffle/group_algebra.hpp"
#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"
#include "shuffle/tableau.hpp"

namespace shuffle {

// Murnaghan-Nakayama rule.
std::int64_t mn_character(const NumberPartition& lambda, const NumberPartition& mu);

struct CharacterTable {
  int n = 0;
  std::vector<NumberPartition> irreducibles;  // rows, partitions_of order
  std::vector<NumberPartition> classes;       // columns, partitions_of order
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<std::int64_t>> values;

  std::size_t class_index(const NumberPartition& mu) const;
  std::size_t irreducible_index(const NumberPartition& lambda) const;
};

CharacterTable character_table(int n);

// Young's seminormal form in the enumerate_syt basis.
class SeminormalRep {
 public:
  explicit SeminormalRep(const NumberPartition& lambda);

  const NumberPartition& shape() const { return lambda_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<StandardTableau>& basis() const { return basis_; }

  // dense matrix of rho(s_i), 1 <= i < n
  ExactMatrix generator(int i) const;
  // x <- rho(s_i) x, in place
  void apply_left(int i, ExactMatrix& x) const;
  ExactMatrix rho_of_word(const std::vector<int>& word) const;
  ExactMatrix rho(const Permutation& w) const;

 private:
  struct Action {
    std::vector<Rational> diag;
    std::vector<int> partner;  // -1 when s_i acts by a scalar
    std::vector<Rational> off; // coefficient of e_partner in rho(s_i) e_t
  };
  NumberPartition lambda_;
  std::vector<StandardTableau> basis_;
  std::vector<Action> actions_;  // index i-1
};

// Word s_{a_1} ... s_{a_k} = w obtained by bubble sort.
std::vector<int> reduced_word(const Permutation& w);

ExactMatrix rho_of_element(const SeminormalRep& rep, const GroupAlgebraElement& a);

using ClassFunction = std::map<NumberPartition, Rational>;
using ComplexClassFunction = std::map<NumberPartition, std::complex<double>>;

// (1/n!) sum_mu |class mu| f(mu) chi^lambda(mu)
std::map<NumberPartition, Rational> isotypic_multiplicities(const ClassFunction& f);

// Character of Ind_H^{S_n} chi for a subgroup listed element by element.
ComplexClassFunction induced_character(const std::vector<std::pair<Permutation, std::complex<double>>>& subgroup,
                                       int n);
ClassFunction induced_character_exact(const std::vector<std::pair<Permutation, Rational>>& subgroup, int n);

// Rounds inner products with the irreducibles; throws if a residual exceeds tol.
std::map<NumberPartition, std::int64_t> rounded_multiplicities(const ComplexClassFunction& f, double tol = 1e-6);

}  // namespace shuffle
