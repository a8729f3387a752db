#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "shuffle/characters.hpp"

namespace shuffle {

// Fast Fourier transform on S_n through the chain S_1 < ... < S_n, in the
// seminormal bases. Blocks come back in partitions_of(n) order.
class FourierEngine {
 public:
  explicit FourierEngine(int n);

  int n() const { return n_; }
  const std::vector<NumberPartition>& partitions() const { return parts_[n_]; }
  const SeminormalRep& rep(const NumberPartition& lambda) const;

  std::vector<ExactMatrix> transform(const std::vector<Rational>& dense) const;
  std::vector<ExactMatrix> transform(const GroupAlgebraElement& a) const;
  // rho_lambda(w0), built from generators
  ExactMatrix longest_element_block(const NumberPartition& lambda) const;

 private:
  std::vector<ExactMatrix> rec(int m, const std::vector<Rational>& a, const std::vector<std::uint32_t>& idx) const;

  int n_;
  std::vector<std::vector<NumberPartition>> parts_;
  std::map<NumberPartition, std::unique_ptr<SeminormalRep>> reps_;
  // coset_[m][i-1][r] = rank in S_m of c_i o u, u of rank r in S_{m-1}, c_i = s_i ... s_{m-1}
  std::vector<std::vector<std::vector<std::uint32_t>>> coset_;
};

}  // namespace shuffle
