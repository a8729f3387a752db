#include "shuffle/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shuffle {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: n out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw std::invalid_argument("Permutation: not a bijection of {1..n}");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_string(std::string_view s) {
  std::vector<int> v;
  if (s.find(',') != std::string_view::npos) {
    std::string tmp(s);
    std::stringstream ss(tmp);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("Permutation: bad one-line string");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string s;
  const bool compact = size() < 10;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> r(u.size());
  for (int i = 1; i <= u.size(); ++i) r[i - 1] = u(v(i));
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> r(w.size());
  for (int i = 1; i <= w.size(); ++i) r[w(i) - 1] = i;
  return Permutation(std::move(r));
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element: n < 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("adjacent_transposition: index out of range");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

int inversions(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) c += w(i) > w(j);
  return c;
}

int sign(const Permutation& w) { return inversions(w) % 2 ? -1 : 1; }

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j) smaller += w(j) < w(i);
    r += static_cast<std::uint64_t>(smaller) * factorial(n - i);
  }
  return r;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> v;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    v.push_back(pool.at(idx));
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Permutation(std::move(v));
}

NumberPartition::NumberPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("NumberPartition: nonpositive part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("NumberPartition: parts not weakly decreasing");
    n_ += parts_[i];
  }
}

NumberPartition NumberPartition::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '(' && c != ')' && c != ' ') t += c;
  std::vector<int> parts;
  if (t.find(',') != std::string::npos) {
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
  } else {
    for (char c : t) {
      if (c < '0' || c > '9') throw std::invalid_argument("NumberPartition: bad string");
      parts.push_back(c - '0');
    }
  }
  return NumberPartition(std::move(parts));
}

int NumberPartition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

NumberPartition NumberPartition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return NumberPartition(std::move(c));
}

std::string NumberPartition::str() const {
  const bool compact = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
  std::string s;
  if (!compact) s += '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  if (!compact) s += ')';
  return s;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<NumberPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<NumberPartition> partitions_of(int n) {
  std::vector<NumberPartition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

NumberPartition hook_partition(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("hook_partition: k out of range");
  std::vector<int> p{k};
  p.insert(p.end(), static_cast<std::size_t>(n - k), 1);
  return NumberPartition(std::move(p));
}

NumberPartition two_block_partition(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("two_block_partition: k out of range");
  std::vector<int> p(static_cast<std::size_t>(k), 2);
  p.insert(p.end(), static_cast<std::size_t>(n - 2 * k), 1);
  return NumberPartition(std::move(p));
}

NumberPartition cycle_type(const Permutation& w) {
  const int n = w.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w(j)) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return NumberPartition(std::move(lens));
}

std::uint64_t class_size(const NumberPartition& mu) {
  std::uint64_t z = 1;
  for (int p : mu.parts()) z *= static_cast<std::uint64_t>(p);
  for (int i = 1; i <= mu.size(); ++i) z *= factorial(mu.multiplicity(i));
  return factorial(mu.size()) / z;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<char> seen(n_ + 1, 0);
  for (const auto& b : blocks_)
    for (int x : b) {
      if (x < 1 || x > n_ || seen[x]) throw std::invalid_argument("SetPartition: blocks do not partition {1..n}");
      seen[x] = 1;
    }
}

NumberPartition SetPartition::type() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return NumberPartition(std::move(sizes));
}

std::vector<int> SetPartition::block_of() const {
  std::vector<int> r(n_ + 1, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) r[x] = static_cast<int>(i);
  return r;
}

bool SetPartition::refines(const SetPartition& other) const {
  const auto ob = other.block_of();
  for (const auto& b : blocks_)
    for (int x : b)
      if (ob[x] != ob[b[0]]) return false;
  return true;
}

std::string SetPartition::str() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

namespace {

// Places elements 1..n in order; a new block is opened by its minimum and
// given one of the remaining sizes, so each set partition is produced once.
struct SetPartitionWalker {
  int n;
  std::map<int, int, std::greater<>> remaining;
  std::vector<std::vector<int>> blocks;
  std::vector<int> target;
  const std::function<void(const SetPartition&)>& visit;

  void rec(int x) {
    if (x > n) {
      visit(SetPartition(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (static_cast<int>(blocks[b].size()) < target[b]) {
        blocks[b].push_back(x);
        rec(x + 1);
        blocks[b].pop_back();
      }
    }
    for (auto& [size, count] : remaining) {
      if (count == 0) continue;
      --count;
      blocks.push_back({x});
      target.push_back(size);
      rec(x + 1);
      target.pop_back();
      blocks.pop_back();
      ++count;
    }
  }
};

}  // namespace

void for_each_set_partition(int n, const NumberPartition& lambda,
                            const std::function<void(const SetPartition&)>& visit) {
  if (lambda.size() != n) throw std::invalid_argument("set partitions: lambda does not sum to n");
  SetPartitionWalker walker{n, {}, {}, {}, visit};
  for (int p : lambda.parts()) ++walker.remaining[p];
  walker.rec(1);
}

std::vector<SetPartition> enumerate_set_partitions(int n, const NumberPartition& lambda) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, lambda, [&](const SetPartition& x) { out.push_back(x); });
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  for (const auto& lam : partitions_of(n)) {
    auto xs = enumerate_set_partitions(n, lam);
    out.insert(out.end(), xs.begin(), xs.end());
  }
  return out;
}

SetPartition standard_set_partition(const NumberPartition& lambda) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int p : lambda.parts()) {
    std::vector<int> b;
    for (int i = 0; i < p; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return SetPartition(std::move(blocks));
}

std::int64_t noninv_k(const Permutation& w, int k) {
  const int n = w.size();
  if (k < 1 || k > n) throw std::invalid_argument("noninv_k: k out of range");
  // inc[i][l]: increasing subsequences of length l ending at position i
  std::vector<std::vector<std::int64_t>> inc(n, std::vector<std::int64_t>(k + 1, 0));
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    inc[i][1] = 1;
    for (int j = 0; j < i; ++j)
      if (w(j + 1) < w(i + 1))
        for (int l = 2; l <= k; ++l) inc[i][l] += inc[j][l - 1];
    total += inc[i][k];
  }
  return total;
}

namespace {

struct NoninvCounter {
  int n;
  std::vector<int> pos;
  std::map<int, int, std::greater<>> remaining;
  std::vector<int> last;
  std::vector<int> fill;
  std::vector<int> target;

  std::int64_t rec(int x) {
    if (x > n) return 1;
    std::int64_t c = 0;
    for (std::size_t b = 0; b < last.size(); ++b) {
      if (fill[b] < target[b] && last[b] < pos[x]) {
        const int saved = last[b];
        last[b] = pos[x];
        ++fill[b];
        c += rec(x + 1);
        --fill[b];
        last[b] = saved;
      }
    }
    for (auto& [size, count] : remaining) {
      if (count == 0) continue;
      --count;
      last.push_back(pos[x]);
      fill.push_back(1);
      target.push_back(size);
      c += rec(x + 1);
      target.pop_back();
      fill.pop_back();
      last.pop_back();
      ++count;
    }
    return c;
  }
};

}  // namespace

std::int64_t noninv_lambda(const Permutation& w, const NumberPartition& lambda) {
  const int n = w.size();
  if (lambda.size() != n) throw std::invalid_argument("noninv_lambda: lambda does not sum to n");
  NoninvCounter c;
  c.n = n;
  c.pos.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) c.pos[w(i)] = i;
  for (int p : lambda.parts()) ++c.remaining[p];
  return c.rec(1);
}

std::int64_t inv_lambda(const Permutation& w, const NumberPartition& lambda) {
  const int n = w.size();
  if (lambda.size() != n || lambda.length() < 1 || lambda[0] != 2 || lambda.multiplicity(2) != 1)
    throw std::invalid_argument("inv_lambda: only lambda = (2,1^{n-2}) is supported");
  return static_cast<std::int64_t>(binomial(n, 2)) - noninv_lambda(w, lambda);
}

bool is_lyndon(const Word& x) {
  if (x.empty()) return false;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!std::lexicographical_compare(x.begin(), x.end(), x.begin() + static_cast<long>(i), x.end())) return false;
  return true;
}

std::vector<Word> lyndon_factorization(const Word& x) {
  // Duval
  std::vector<Word> out;
  const std::size_t n = x.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && x[k] <= x[j]) {
      k = x[k] < x[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + j - k));
      i += j - k;
    }
  }
  return out;
}

NumberPartition lyndon_type(const Word& x) {
  if (x.empty()) throw std::invalid_argument("lyndon_type: empty word");
  std::vector<int> lens;
  for (const auto& f : lyndon_factorization(x)) lens.push_back(static_cast<int>(f.size()));
  std::sort(lens.rbegin(), lens.rend());
  return NumberPartition(std::move(lens));
}

DerangementCounts derangement_counts(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("derangement_counts: n out of range");
  DerangementCounts c;
  if (n == 0) {
    c.total = c.even = 1;
    return c;
  }
  // sum of class sizes over cycle types without fixed points
  for (const auto& mu : partitions_of(n)) {
    if (mu.multiplicity(1) > 0) continue;
    const auto size = static_cast<std::int64_t>(class_size(mu));
    c.total += size;
    if ((n - mu.length()) % 2 == 0)
      c.even += size;
    else
      c.odd += size;
  }
  return c;
}

IdentityReport derangement_recurrences(int max_n) {
  IdentityReport rep;
  std::vector<DerangementCounts> d;
  for (int n = 0; n <= max_n; ++n) d.push_back(derangement_counts(n));
  auto fail = [&](const std::string& what, int n) {
    rep.ok = false;
    rep.failures.push_back(what + " at n=" + std::to_string(n));
  };
  const auto pm = [](int e) -> std::int64_t { return e % 2 == 0 ? 1 : -1; };
  for (int n = 2; n <= max_n; ++n) {
    const std::int64_t m = n - 1;
    if (d[n].total != m * (d[n - 1].total + d[n - 2].total)) fail("d_n = (n-1)(d_{n-1}+d_{n-2})", n);
    if (d[n].even != m * (d[n - 1].odd + d[n - 2].odd)) fail("d+_n = (n-1)(d-_{n-1}+d-_{n-2})", n);
    if (d[n].odd != m * (d[n - 1].even + d[n - 2].even)) fail("d-_n = (n-1)(d+_{n-1}+d+_{n-2})", n);
    if (d[n].total != n * d[n - 1].total + pm(n)) fail("d_n = n d_{n-1} + (-1)^n", n);
    if (d[n].even - d[n].odd != pm(n - 1) * m) fail("d+_n - d-_n = (-1)^{n-1}(n-1)", n);
    if (d[n].total != static_cast<std::int64_t>(binomial(n, 2)) * 2 * d[n - 2].total + pm(n - 1) * m)
      fail("d_n = 2 C(n,2) d_{n-2} + (-1)^{n-1}(n-1)", n);
  }
  for (int n = 0; n <= max_n; ++n) {
    std::int64_t s = 0;
    for (int j = 0; j <= n; ++j) s += static_cast<std::int64_t>(binomial(n, j)) * d[n - j].total;
    if (s != static_cast<std::int64_t>(factorial(n))) fail("sum_j C(n,j) d_{n-j} = n!", n);
  }
  return rep;
}

namespace {
// k-subsets (as bitmasks over positions) whose letters increase in w
std::int64_t increasing_subsets(const Permutation& w, int k) {
  const int n = w.size();
  std::int64_t c = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int prev = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask & (1u << i)) {
        ok = w(i + 1) > prev;
        prev = w(i + 1);
      }
    c += ok;
  }
  return c;
}
}  // namespace

std::int64_t d_coefficient(const Permutation& w, int k, int l) {
  const int n = w.size();
  if (k < 1 || k > n || l < 1 || l > n) throw std::invalid_argument("d_coefficient: k or l out of range");
  std::int64_t total = 0;
  for (const auto& u : all_permutations(n)) {
    const auto v = compose(inverse(u), w);
    total += increasing_subsets(u, k) * increasing_subsets(v, l);
  }
  return total;
}

GRCheck gessel_reutenauer_check(const NumberPartition& lambda, int m, int n) {
  if (lambda.size() != n || m < 1) throw std::invalid_argument("gessel_reutenauer_check: bad arguments");
  using Content = std::vector<int>;
  std::map<Content, std::int64_t> lhs, rhs;

  Word x(n, 1);
  while (true) {
    if (lyndon_type(x) == lambda) {
      Content c(m, 0);
      for (int a : x) ++c[a - 1];
      ++lhs[c];
    }
    int i = n - 1;
    while (i >= 0 && x[i] == m) x[i--] = 1;
    if (i < 0) break;
    ++x[i];
  }

  std::vector<std::vector<int>> descents;
  for (const auto& w : all_permutations(n))
    if (cycle_type(w) == lambda) descents.push_back(descent_set(w));

  // For a fixed content the weakly increasing sequence is unique; it is
  // admissible for w iff it strictly increases at every descent of w.
  Content c(m, 0);
  std::function<void(int, int)> rec = [&](int letter, int left) {
    if (letter == m - 1) {
      c[letter] = left;
      std::vector<int> seq;
      for (int a = 0; a < m; ++a) seq.insert(seq.end(), static_cast<std::size_t>(c[a]), a);
      std::int64_t count = 0;
      for (const auto& des : descents) {
        bool ok = true;
        for (int j : des) ok = ok && seq[j - 1] < seq[j];
        count += ok;
      }
      if (count) rhs[c] = count;
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[letter] = v;
      rec(letter + 1, left - v);
    }
  };
  rec(0, n);

  GRCheck out;
  std::map<Content, std::pair<std::int64_t, std::int64_t>> all;
  for (const auto& [k, v] : lhs) all[k].first = v;
  for (const auto& [k, v] : rhs) all[k].second = v;
  for (const auto& [k, v] : all) {
    if (v.first != v.second) {
      out.ok = false;
      std::string s = "content (";
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
      out.first_mismatch = s + "): words " + std::to_string(v.first) + ", descents " + std::to_string(v.second);
      break;
    }
  }
  return out;
}

}  // namespace shuffle
