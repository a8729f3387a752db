#include "shuffle/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace shuffle {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("StandardTableau: empty inner row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw std::invalid_argument("StandardTableau: not a partition shape");
    n_ += static_cast<int>(rows_[r].size());
  }
  std::vector<char> seen(n_ + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int x = rows_[r][c];
      if (x < 1 || x > n_ || seen[x]) throw std::invalid_argument("StandardTableau: entries must be 1..n");
      seen[x] = 1;
      if (c > 0 && rows_[r][c - 1] > x) throw std::invalid_argument("StandardTableau: row not increasing");
      if (r > 0 && rows_[r - 1][c] > x) throw std::invalid_argument("StandardTableau: column not increasing");
    }
}

NumberPartition StandardTableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return NumberPartition(std::move(p));
}

std::pair<int, int> StandardTableau::position(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
  throw std::out_of_range("StandardTableau: entry not present");
}

std::string StandardTableau::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows_[r][c]);
  }
  return s;
}

std::uint64_t hook_dimension(const NumberPartition& lambda) {
  const auto conj = lambda.conjugate();
  // multiply and divide incrementally in 128 bits to stay exact
  unsigned __int128 num = factorial(lambda.size());
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) num /= static_cast<unsigned>(lambda[r] - c + conj[c] - r - 1);
  return static_cast<std::uint64_t>(num);
}

std::vector<StandardTableau> enumerate_syt(const NumberPartition& lambda) {
  const int n = lambda.size();
  if (n == 0) return {StandardTableau()};
  std::vector<StandardTableau> out;
  const auto& parts = lambda.parts();
  for (int r = 0; r < lambda.length(); ++r) {
    if (r + 1 < lambda.length() && parts[r + 1] == parts[r]) continue;  // not a corner
    std::vector<int> smaller = parts;
    --smaller[r];
    for (const auto& t : enumerate_syt(NumberPartition(smaller))) {
      auto rows = t.rows();
      if (static_cast<int>(rows.size()) <= r) rows.resize(r + 1);
      rows[r].push_back(n);
      out.emplace_back(std::move(rows));
    }
  }
  return out;
}

std::vector<int> tableau_descents(const StandardTableau& q) {
  std::vector<int> row_of(q.size() + 1);
  for (std::size_t r = 0; r < q.rows().size(); ++r)
    for (int x : q.rows()[r]) row_of[x] = static_cast<int>(r);
  std::vector<int> d;
  for (int i = 1; i < q.size(); ++i)
    if (row_of[i + 1] > row_of[i]) d.push_back(i);
  return d;
}

int maj(const StandardTableau& q) {
  int s = 0;
  for (int i : tableau_descents(q)) s += i;
  return s;
}

EigK eig_and_k(const StandardTableau& q) {
  const int n = q.size();
  const auto des = tableau_descents(q);
  if (des.empty()) return {n, 0};
  std::vector<char> is_des(n + 2, 0);
  for (int i : des) is_des[i] = 1;
  const int first = des.front();
  int run = 0;
  while (is_des[first + run]) ++run;
  if (run % 2 == 0) return {first, run};
  return {first - 1, run + 1};
}

StandardTableau demote(const StandardTableau& q) {
  if (q.size() == 0) throw std::invalid_argument("demote: empty tableau");
  auto rows = q.rows();
  std::size_t r = 0, c = 0;
  while (true) {
    const bool has_right = c + 1 < rows[r].size();
    const bool has_down = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_down) break;
    if (has_right && (!has_down || rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r].pop_back();
  for (auto& row : rows)
    for (int& x : row) --x;
  return StandardTableau(std::move(rows));
}

bool is_horizontal_strip(const NumberPartition& mu, const NumberPartition& nu) {
  if (nu.length() > mu.length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (nu[i] > mu[i]) return false;
    if (i + 1 < mu.length() && mu[i + 1] > nu[i]) return false;
  }
  return true;
}

StandardTableau undemote(const StandardTableau& qhat, const NumberPartition& mu) {
  const auto nu = qhat.shape();
  if (!is_horizontal_strip(mu, nu)) throw std::invalid_argument("undemote: not a horizontal strip");
  const int j = mu.size() - nu.size();
  // 0 marks an empty cell of mu
  std::vector<std::vector<int>> grid(mu.length());
  for (int r = 0; r < mu.length(); ++r) {
    grid[r].assign(mu[r], 0);
    for (int c = 0; c < nu[r]; ++c) grid[r][c] = qhat.rows()[r][c];
  }
  std::vector<std::pair<int, int>> strip;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = nu[r]; c < mu[r]; ++c) strip.emplace_back(r, c);
  std::sort(strip.begin(), strip.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (auto [r, c] : strip) {
    while (true) {
      const int up = r > 0 ? grid[r - 1][c] : 0;
      const int left = c > 0 ? grid[r][c - 1] : 0;
      if (up == 0 && left == 0) break;
      if (up > left) {
        grid[r][c] = up;
        grid[r - 1][c] = 0;
        --r;
      } else {
        grid[r][c] = left;
        grid[r][c - 1] = 0;
        --c;
      }
    }
  }
  int next = 1;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c) {
      if (grid[r][c] != 0) {
        grid[r][c] += j;
      } else {
        if (r != 0) throw std::logic_error("undemote: vacated cell outside the first row");
        grid[r][c] = next++;
      }
    }
  return StandardTableau(std::move(grid));
}

StandardTableau shaven_plus(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("shaven_plus: n must be odd and at least 3");
  std::vector<std::vector<int>> rows{{1, n}};
  for (int i = 2; i <= n - 1; ++i) rows.push_back({i});
  return StandardTableau(std::move(rows));
}

StandardTableau shaven_minus(int n) {
  if (n < 4 || n % 2 == 1) throw std::invalid_argument("shaven_minus: n must be even and at least 4");
  std::vector<std::vector<int>> rows{{1, n - 1}};
  for (int i = 2; i <= n - 2; ++i) rows.push_back({i});
  rows.push_back({n});
  return StandardTableau(std::move(rows));
}

namespace {
StandardTableau remove_largest_two(const StandardTableau& q) {
  auto rows = q.rows();
  const int n = q.size();
  for (int x : {n, n - 1}) {
    bool removed = false;
    for (auto& row : rows)
      if (!row.empty() && row.back() == x) {
        row.pop_back();
        removed = true;
        break;
      }
    if (!removed) throw std::logic_error("shaving: largest entries are not removable");
  }
  return StandardTableau(std::move(rows));
}
}  // namespace

int epsilon(const StandardTableau& q) {
  const int n = q.size();
  if (n == 0) return 1;
  const int j = eig_and_k(q).j;
  if (j > 0) {
    StandardTableau d = q;
    for (int i = 0; i < j; ++i) d = demote(d);
    return epsilon(d);
  }
  if (n >= 3 && n % 2 == 1 && q == shaven_plus(n)) return 1;
  if (n >= 4 && n % 2 == 0 && q == shaven_minus(n)) return -1;
  const bool descent = q.position(n).first > q.position(n - 1).first;
  const int e = epsilon(remove_largest_two(q));
  return descent ? -e : e;
}

std::vector<std::pair<NumberPartition, int>> predicted_factor(int n, int j) {
  std::vector<std::pair<NumberPartition, int>> out;
  for (const auto& lam : partitions_of(n))
    for (const auto& q : enumerate_syt(lam))
      if (eig_and_k(q).j == j) out.emplace_back(lam, epsilon(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

}  // namespace shuffle
