#include "shuffle/injective_words.hpp"

#include <algorithm>
#include <stdexcept>

#include "shuffle/characters.hpp"

namespace shuffle {

namespace {

void extend(int n, int j, Word& cur, std::vector<char>& used, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == j) {
    out.push_back(cur);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (used[a]) continue;
    used[a] = 1;
    cur.push_back(a);
    extend(n, j, cur, used, out);
    cur.pop_back();
    used[a] = 0;
  }
}

// Lexicographic rank among injective words of the same length.
std::size_t word_rank(int n, const Word& w) {
  std::size_t r = 0;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const int j = static_cast<int>(w.size());
  for (int p = 0; p < j; ++p) {
    int smaller = 0;
    for (int a = 1; a < w[p]; ++a)
      if (!used[a]) ++smaller;
    // words sharing this prefix: (n-p-1)! / (n-j)!
    std::size_t block = 1;
    for (int m = n - j + 1; m <= n - p - 1; ++m) block *= static_cast<std::size_t>(m);
    r += static_cast<std::size_t>(smaller) * block;
    used[w[p]] = 1;
  }
  return r;
}

void check_range(int n, int j, int i) {
  if (n < 0 || i < 0 || i > j || j > n) throw std::invalid_argument("injective words: need 0 <= i <= j <= n");
}

// Kernel basis together with the free rows that carry its identity block.
struct Subspace {
  ExactMatrix basis;
  std::vector<std::size_t> free;
};

Subspace kernel_with_free_rows(const ExactMatrix& a) {
  const auto e = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Subspace s;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) s.free.push_back(c);
  s.basis = ExactMatrix(a.cols(), s.free.size());
  for (std::size_t f = 0; f < s.free.size(); ++f) {
    s.basis(s.free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis(e.pivots[r], f) = -e.reduced(r, s.free[f]);
  }
  return s;
}

// Right multiplication by w0 on S_n indexed by lexicographic rank: reverses the word.
ExactMatrix reversal(const std::vector<Permutation>& perms) {
  const Permutation w0 = longest_element(perms.front().size());
  ExactMatrix r(perms.size(), perms.size());
  for (std::size_t c = 0; c < perms.size(); ++c) r(lex_rank(compose(perms[c], w0)), c) = 1;
  return r;
}

// Multiplicities of the left (letter relabeling) action on a subspace of Q S_n.
std::map<NumberPartition, int> left_content(const Subspace& s, const std::vector<Permutation>& perms) {
  const int n = perms.front().size();
  ClassFunction f;
  for (const auto& mu : partitions_of(n)) {
    // any element of cycle type mu
    std::vector<int> img(static_cast<std::size_t>(n));
    int start = 0;
    for (int part : mu.parts()) {
      for (int t = 0; t < part; ++t) img[static_cast<std::size_t>(start + t)] = start + (t + 1) % part + 1;
      start += part;
    }
    const Permutation g(img);
    Rational tr = 0;
    for (std::size_t k = 0; k < s.free.size(); ++k) {
      // coordinate k of g.(column k) is its entry at free row k
      const auto src = lex_rank(compose(inverse(g), perms[s.free[k]]));
      tr += s.basis(src, k);
    }
    f[mu] = tr;
  }
  std::map<NumberPartition, int> out;
  for (const auto& [lam, m] : isotypic_multiplicities(f)) {
    if (m.get_den() != 1) throw std::logic_error("left_content: non-integral multiplicity");
    if (m != 0) out[lam] = static_cast<int>(m.get_num().get_si());
  }
  return out;
}

std::map<std::pair<NumberPartition, int>, int> signed_content(const ExactMatrix& a,
                                                               const std::vector<Permutation>& perms) {
  const auto r = reversal(perms);
  std::map<std::pair<NumberPartition, int>, int> out;
  for (int sign : {1, -1}) {
    const auto s = kernel_with_free_rows(vstack(a, shifted(r, sign)));
    for (const auto& [lam, m] : left_content(s, perms)) out[{lam, sign}] += m;
  }
  return out;
}

}  // namespace

std::vector<Word> injective_words(int n, int j) {
  check_range(n, j, 0);
  std::vector<Word> out;
  Word cur;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  extend(n, j, cur, used, out);
  return out;
}

std::size_t injective_word_index(int n, const Word& w) { return word_rank(n, w); }

IntMatrix delplus(int n, int j, int i) {
  check_range(n, j, i);
  const auto cols = injective_words(n, j);
  std::size_t rows = 1;
  for (int m = n - i + 1; m <= n; ++m) rows *= static_cast<std::size_t>(m);
  IntMatrix d(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& w = cols[c];
    std::vector<char> keep(static_cast<std::size_t>(j), 0);
    std::fill(keep.begin(), keep.begin() + i, 1);
    do {
      Word sub;
      for (int p = 0; p < j; ++p)
        if (keep[static_cast<std::size_t>(p)]) sub.push_back(w[static_cast<std::size_t>(p)]);
      ++d(word_rank(n, sub), c);
    } while (std::prev_permutation(keep.begin(), keep.end()));
  }
  return d;
}

IntMatrix boundary_minus(int n, int j) {
  check_range(n, j, 1);
  const auto cols = injective_words(n, j);
  std::size_t rows = 1;
  for (int m = n - j + 2; m <= n; ++m) rows *= static_cast<std::size_t>(m);
  IntMatrix d(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int p = 0; p < j; ++p) {
      Word sub = cols[c];
      sub.erase(sub.begin() + p);
      d(word_rank(n, sub), c) += (p % 2 == 0) ? 1 : -1;
    }
  return d;
}

bool InjectiveWordsReport::ok() const {
  return composites_ok && boundary_squares_zero && sign_twist_ok && delplus_kernel_dim == boundary_kernel_dim &&
         (delplus_kernel_content.empty() || conjugate_content);
}

InjectiveWordsReport injective_words_check(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("injective_words_check: n must be in 1..6");
  InjectiveWordsReport rep;
  rep.n = n;

  rep.composites_ok = true;
  for (int k = 0; k <= n && rep.composites_ok; ++k)
    for (int j = 0; j <= k && rep.composites_ok; ++j)
      for (int i = 0; i <= j; ++i) {
        auto lhs = delplus(n, j, i) * delplus(n, k, j);
        auto rhs = delplus(n, k, i);
        const auto c = static_cast<std::int64_t>(binomial(k - i, j - i));
        for (auto& x : rhs.data()) x *= c;
        if (!(lhs == rhs)) {
          rep.composites_ok = false;
          break;
        }
      }

  rep.boundary_squares_zero = true;
  for (int j = 2; j <= n; ++j)
    if (!(boundary_minus(n, j - 1) * boundary_minus(n, j)).is_zero()) rep.boundary_squares_zero = false;

  const auto plus = delplus(n, n, n - 1);
  const auto minus = boundary_minus(n, n);
  const auto m = static_cast<std::int64_t>(plus.cols());
  rep.delplus_kernel_dim = m - static_cast<std::int64_t>(rank_modular(plus));
  rep.boundary_kernel_dim = m - static_cast<std::int64_t>(rank_modular(minus));

  // boundary_minus . S = D . delplus with S = diag sgn(w) and D diagonal of signs
  const auto perms = all_permutations(n);
  const auto words = injective_words(n, n - 1);
  std::vector<int> row_sign(words.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    const auto& u = words[r];
    int missing = 1;
    std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
    for (int a : u) present[static_cast<std::size_t>(a)] = 1;
    while (present[static_cast<std::size_t>(missing)]) ++missing;
    int inv = 0;
    for (std::size_t p = 0; p < u.size(); ++p)
      for (std::size_t q = p + 1; q < u.size(); ++q)
        if (u[p] > u[q]) ++inv;
    row_sign[r] = ((inv + missing - 1) % 2 == 0) ? 1 : -1;
  }
  rep.sign_twist_ok = true;
  for (std::size_t r = 0; r < words.size() && rep.sign_twist_ok; ++r)
    for (std::size_t c = 0; c < perms.size(); ++c)
      if (minus(r, c) * sign(perms[c]) != row_sign[r] * plus(r, c)) {
        rep.sign_twist_ok = false;
        break;
      }

  if (n <= 5) {
    rep.delplus_kernel_content = signed_content(to_exact(plus), perms);
    rep.boundary_kernel_content = signed_content(to_exact(minus), perms);
    const int s0 = sign(longest_element(n));
    std::map<std::pair<NumberPartition, int>, int> twisted;
    for (const auto& [key, mult] : rep.delplus_kernel_content) twisted[{key.first.conjugate(), key.second * s0}] += mult;
    rep.conjugate_content = twisted == rep.boundary_kernel_content;
  }
  return rep;
}

}  // namespace shuffle
