#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"

namespace shuffle {

// Sparse element of Q[S_n]; product is (u, v) -> u o v.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n = 0) : n_(n) {}

  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement basis(const Permutation& w, const Rational& c = 1);
  // dense coefficients indexed by lexicographic rank
  static GroupAlgebraElement from_dense(int n, const std::vector<Rational>& dense);

  int n() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& w) const;
  void add(const Permutation& w, const Rational& c);
  std::vector<Rational> to_dense() const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Rational& s) const;
  bool operator==(const GroupAlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Matrix of x -> x * this in the lexicographic basis: M[u][v] = a(v^{-1} u).
  ExactMatrix right_multiplication_matrix() const;
  ExactMatrix left_multiplication_matrix() const;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

// Products in the dense integer representation, using a rank multiplication table.
class DenseIntAlgebra {
 public:
  explicit DenseIntAlgebra(int n);
  int n() const { return n_; }
  std::size_t order() const { return order_; }
  std::uint32_t product_rank(std::uint32_t u, std::uint32_t v) const { return table_[u * order_ + v]; }
  std::uint32_t inverse_rank(std::uint32_t u) const { return inverse_[u]; }
  // Throws on int64 overflow.
  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;
  IntMatrix right_multiplication_matrix(const std::vector<std::int64_t>& a) const;

 private:
  int n_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace shuffle
