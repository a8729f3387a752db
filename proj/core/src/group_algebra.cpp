#include "shuffle/group_algebra.hpp"

#include <stdexcept>

namespace shuffle {

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return basis(Permutation::identity(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& w, const Rational& c) {
  GroupAlgebraElement e(w.size());
  e.add(w, c);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::from_dense(int n, const std::vector<Rational>& dense) {
  if (dense.size() != factorial(n)) throw std::invalid_argument("from_dense: wrong length");
  GroupAlgebraElement e(n);
  const auto perms = all_permutations(n);
  for (std::size_t r = 0; r < dense.size(); ++r)
    if (sgn(dense[r]) != 0) e.terms_.emplace(perms[r], dense[r]);
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& w, const Rational& c) {
  if (w.size() != n_) throw std::invalid_argument("GroupAlgebraElement: size mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<Rational> GroupAlgebraElement::to_dense() const {
  std::vector<Rational> d(factorial(n_), Rational(0));
  for (const auto& [w, c] : terms_) d[lex_rank(w)] = c;
  return d;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("GroupAlgebraElement: size mismatch");
  GroupAlgebraElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const { return *this + o * Rational(-1); }

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& s) const {
  GroupAlgebraElement r(n_);
  if (sgn(s) == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("GroupAlgebraElement: size mismatch");
  std::map<Permutation, Rational> acc;
  std::vector<int> img(n_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) {
      for (int i = 1; i <= n_; ++i) img[i - 1] = u(v(i));
      acc[Permutation(img)] += a * b;
    }
  GroupAlgebraElement r(n_);
  for (auto& [w, c] : acc)
    if (sgn(c) != 0) r.terms_.emplace(w, std::move(c));
  return r;
}

ExactMatrix GroupAlgebraElement::right_multiplication_matrix() const {
  const auto perms = all_permutations(n_);
  ExactMatrix m(perms.size(), perms.size());
  for (std::size_t v = 0; v < perms.size(); ++v)
    for (const auto& [w, c] : terms_) m(lex_rank(compose(perms[v], w)), v) = c;
  return m;
}

ExactMatrix GroupAlgebraElement::left_multiplication_matrix() const {
  const auto perms = all_permutations(n_);
  ExactMatrix m(perms.size(), perms.size());
  for (std::size_t v = 0; v < perms.size(); ++v)
    for (const auto& [w, c] : terms_) m(lex_rank(compose(w, perms[v])), v) = c;
  return m;
}

DenseIntAlgebra::DenseIntAlgebra(int n) : n_(n), order_(factorial(n)) {
  const auto perms = all_permutations(n);
  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (std::size_t u = 0; u < order_; ++u) {
    inverse_[u] = static_cast<std::uint32_t>(lex_rank(inverse(perms[u])));
    for (std::size_t v = 0; v < order_; ++v)
      table_[u * order_ + v] = static_cast<std::uint32_t>(lex_rank(compose(perms[u], perms[v])));
  }
}

std::vector<std::int64_t> DenseIntAlgebra::multiply(const std::vector<std::int64_t>& a,
                                                    const std::vector<std::int64_t>& b) const {
  if (a.size() != order_ || b.size() != order_) throw std::invalid_argument("DenseIntAlgebra: wrong length");
  std::vector<__int128> acc(order_, 0);
  for (std::size_t u = 0; u < order_; ++u) {
    if (a[u] == 0) continue;
    const std::uint32_t* row = table_.data() + u * order_;
    for (std::size_t v = 0; v < order_; ++v)
      if (b[v] != 0) acc[row[v]] += static_cast<__int128>(a[u]) * b[v];
  }
  std::vector<std::int64_t> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    if (acc[i] > INT64_MAX || acc[i] < INT64_MIN) throw std::overflow_error("DenseIntAlgebra: overflow");
    out[i] = static_cast<std::int64_t>(acc[i]);
  }
  return out;
}

IntMatrix DenseIntAlgebra::right_multiplication_matrix(const std::vector<std::int64_t>& a) const {
  IntMatrix m(order_, order_);
  for (std::size_t v = 0; v < order_; ++v)
    for (std::size_t w = 0; w < order_; ++w)
      if (a[w] != 0) m(table_[v * order_ + w], v) = a[w];
  return m;
}

}  // namespace shuffle
