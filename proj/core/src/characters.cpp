#include "shuffle/characters.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace shuffle {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// Removes border strips of length mu[0] from lambda (given as row lengths).
std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::map<Key, std::int64_t>& memo) {
  if (mu.empty()) return 1;
  Key key{lambda, mu};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = mu[0];
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  // beta-numbers: a border strip of length k is removed by moving a bead down by k
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int j = 0; j < len; ++j)
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> next(len);
    for (int j = 0; j < len; ++j) next[j] = nb[j] - (len - 1 - j);
    while (!next.empty() && next.back() == 0) next.pop_back();
    total += (height % 2 ? -1 : 1) * mn_rec(next, rest, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const NumberPartition& lambda, const NumberPartition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: sizes differ");
  std::map<Key, std::int64_t> memo;
  return mn_rec(lambda.parts(), mu.parts(), memo);
}

std::size_t CharacterTable::class_index(const NumberPartition& mu) const {
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end()) throw std::out_of_range("CharacterTable: unknown class");
  return static_cast<std::size_t>(it - classes.begin());
}

std::size_t CharacterTable::irreducible_index(const NumberPartition& lambda) const {
  auto it = std::find(irreducibles.begin(), irreducibles.end(), lambda);
  if (it == irreducibles.end()) throw std::out_of_range("CharacterTable: unknown irreducible");
  return static_cast<std::size_t>(it - irreducibles.begin());
}

CharacterTable character_table(int n) {
  static std::mutex mu;
  static std::map<int, CharacterTable> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  CharacterTable t;
  t.n = n;
  t.irreducibles = partitions_of(n);
  t.classes = partitions_of(n);
  std::map<Key, std::int64_t> memo;
  for (const auto& c : t.classes) t.class_sizes.push_back(class_size(c));
  for (const auto& l : t.irreducibles) {
    std::vector<std::int64_t> row;
    for (const auto& c : t.classes) row.push_back(mn_rec(l.parts(), c.parts(), memo));
    t.values.push_back(std::move(row));
  }
  cache.emplace(n, t);
  return t;
}

SeminormalRep::SeminormalRep(const NumberPartition& lambda) : lambda_(lambda), basis_(enumerate_syt(lambda)) {
  const int n = lambda.size();
  std::map<StandardTableau, int> index;
  for (std::size_t t = 0; t < basis_.size(); ++t) index.emplace(basis_[t], static_cast<int>(t));
  for (int i = 1; i < n; ++i) {
    Action a;
    a.diag.resize(dim());
    a.partner.assign(dim(), -1);
    a.off.resize(dim());
    for (std::size_t t = 0; t < dim(); ++t) {
      const auto [r1, c1] = basis_[t].position(i);
      const auto [r2, c2] = basis_[t].position(i + 1);
      if (r1 == r2) {
        a.diag[t] = 1;
      } else if (c1 == c2) {
        a.diag[t] = -1;
      } else {
        const int r = (c2 - r2) - (c1 - r1);
        a.diag[t] = Rational(1, r);
        a.diag[t].canonicalize();
        auto rows = basis_[t].rows();
        std::swap(rows[r1][c1], rows[r2][c2]);
        a.partner[t] = index.at(StandardTableau(rows));
        a.off[t] = r > 0 ? Rational(1) : Rational(1) - Rational(1, r * r);
      }
    }
    actions_.push_back(std::move(a));
  }
}

ExactMatrix SeminormalRep::generator(int i) const {
  const Action& a = actions_.at(static_cast<std::size_t>(i - 1));
  ExactMatrix g(dim(), dim());
  for (std::size_t t = 0; t < dim(); ++t) {
    g(t, t) = a.diag[t];
    if (a.partner[t] >= 0) g(static_cast<std::size_t>(a.partner[t]), t) = a.off[t];
  }
  return g;
}

void SeminormalRep::apply_left(int i, ExactMatrix& x) const {
  const Action& a = actions_.at(static_cast<std::size_t>(i - 1));
  const std::size_t cols = x.cols();
  Rational t1, t2;
  for (std::size_t t = 0; t < dim(); ++t) {
    const int p = a.partner[t];
    if (p < 0) {
      if (a.diag[t] < 0)
        for (std::size_t c = 0; c < cols; ++c) mpq_neg(x(t, c).get_mpq_t(), x(t, c).get_mpq_t());
      continue;
    }
    const auto u = static_cast<std::size_t>(p);
    if (u < t) continue;  // pair handled from its smaller index
    Rational* xt = x.row(t);
    Rational* xu = x.row(u);
    for (std::size_t c = 0; c < cols; ++c) {
      const bool zt = sgn(xt[c]) == 0, zu = sgn(xu[c]) == 0;
      if (zt && zu) continue;
      // new_t = diag_t x_t + off_u x_u ; new_u = off_t x_t + diag_u x_u
      mpq_mul(t1.get_mpq_t(), a.diag[t].get_mpq_t(), xt[c].get_mpq_t());
      mpq_mul(t2.get_mpq_t(), a.off[u].get_mpq_t(), xu[c].get_mpq_t());
      mpq_add(t1.get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
      mpq_mul(t2.get_mpq_t(), a.off[t].get_mpq_t(), xt[c].get_mpq_t());
      mpq_swap(xt[c].get_mpq_t(), t1.get_mpq_t());
      mpq_mul(t1.get_mpq_t(), a.diag[u].get_mpq_t(), xu[c].get_mpq_t());
      mpq_add(xu[c].get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
    }
  }
}

ExactMatrix SeminormalRep::rho_of_word(const std::vector<int>& word) const {
  ExactMatrix x = ExactMatrix::identity(dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_left(*it, x);
  return x;
}

ExactMatrix SeminormalRep::rho(const Permutation& w) const {
  if (w.size() != lambda_.size()) throw std::invalid_argument("SeminormalRep: size mismatch");
  return rho_of_word(reduced_word(w));
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> v = w.images();
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] < v[i + 1]) ++i;
    if (i + 1 >= v.size()) break;
    std::swap(v[i], v[i + 1]);
    word.push_back(static_cast<int>(i + 1));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

ExactMatrix rho_of_element(const SeminormalRep& rep, const GroupAlgebraElement& a) {
  if (a.n() != rep.shape().size()) throw std::invalid_argument("rho_of_element: size mismatch");
  ExactMatrix sum(rep.dim(), rep.dim());
  for (const auto& [w, c] : a.terms()) sum = sum + c * rep.rho(w);
  return sum;
}

std::map<NumberPartition, Rational> isotypic_multiplicities(const ClassFunction& f) {
  if (f.empty()) return {};
  const int n = f.begin()->first.size();
  const auto table = character_table(n);
  std::map<NumberPartition, Rational> out;
  for (std::size_t l = 0; l < table.irreducibles.size(); ++l) {
    Rational s = 0;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      auto it = f.find(table.classes[c]);
      if (it == f.end()) throw std::invalid_argument("isotypic_multiplicities: missing class value");
      s += Rational(static_cast<long>(table.class_sizes[c])) * it->second * static_cast<long>(table.values[l][c]);
    }
    out[table.irreducibles[l]] = s / Rational(static_cast<long>(factorial(n)));
  }
  return out;
}

ComplexClassFunction induced_character(const std::vector<std::pair<Permutation, std::complex<double>>>& subgroup,
                                       int n) {
  // Ind(g) = |C(g)| / |H| * sum_{h in H, h ~ g} chi(h)
  ComplexClassFunction f;
  for (const auto& mu : partitions_of(n)) f[mu] = 0;
  for (const auto& [h, v] : subgroup) f[cycle_type(h)] += v;
  const double order = static_cast<double>(subgroup.size());
  for (auto& [mu, v] : f) v *= static_cast<double>(factorial(n)) / static_cast<double>(class_size(mu)) / order;
  return f;
}

ClassFunction induced_character_exact(const std::vector<std::pair<Permutation, Rational>>& subgroup, int n) {
  ClassFunction f;
  for (const auto& mu : partitions_of(n)) f[mu] = 0;
  for (const auto& [h, v] : subgroup) f[cycle_type(h)] += v;
  for (auto& [mu, v] : f)
    v *= Rational(static_cast<long>(factorial(n)), static_cast<long>(class_size(mu) * subgroup.size()));
  return f;
}

std::map<NumberPartition, std::int64_t> rounded_multiplicities(const ComplexClassFunction& f, double tol) {
  if (f.empty()) return {};
  const int n = f.begin()->first.size();
  const auto table = character_table(n);
  std::map<NumberPartition, std::int64_t> out;
  for (std::size_t l = 0; l < table.irreducibles.size(); ++l) {
    std::complex<double> s = 0;
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      s += static_cast<double>(table.class_sizes[c]) * f.at(table.classes[c]) * static_cast<double>(table.values[l][c]);
    s /= static_cast<double>(factorial(n));
    const double r = std::round(s.real());
    if (std::abs(s.real() - r) > tol || std::abs(s.imag()) > tol)
      throw std::runtime_error("rounded_multiplicities: inner product is not an integer");
    out[table.irreducibles[l]] = static_cast<std::int64_t>(r);
  }
  return out;
}

}  // namespace shuffle
