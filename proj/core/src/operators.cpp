#include "shuffle/operators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "shuffle/characters.hpp"
#include "shuffle/poly.hpp"

namespace shuffle {

Family parse_family(const std::string& s) {
  if (s == "columns") return Family::Columns;
  if (s == "two-blocks") return Family::TwoBlocks;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string family_name(Family f) { return f == Family::Columns ? "columns" : "two-blocks"; }

std::vector<NumberPartition> family_partitions(int n, Family f) {
  if (n < 1) throw std::invalid_argument("family_partitions: n must be positive");
  std::vector<NumberPartition> out;
  if (f == Family::Columns) {
    if (n == 1) return {NumberPartition({1})};
    for (int k = 1; k < n; ++k) out.push_back(hook_partition(n, k));
  } else {
    for (int k = 0; 2 * k <= n; ++k) out.push_back(two_block_partition(n, k));
  }
  return out;
}

std::vector<std::int64_t> nu_dense(const NumberPartition& lambda) {
  const int n = lambda.size();
  const auto perms = all_permutations(n);
  std::vector<std::int64_t> d(perms.size());
  for (std::size_t r = 0; r < perms.size(); ++r) d[r] = noninv_lambda(perms[r], lambda);
  return d;
}

GroupAlgebraElement nu_element(const NumberPartition& lambda) {
  const int n = lambda.size();
  const auto perms = all_permutations(n);
  GroupAlgebraElement e(n);
  for (const auto& w : perms) e.add(w, Rational(static_cast<long>(noninv_lambda(w, lambda))));
  return e;
}

IntMatrix nu_matrix(const NumberPartition& lambda) {
  if (lambda.size() > 7) throw std::invalid_argument("nu_matrix: n exceeds the dense budget (7)");
  DenseIntAlgebra alg(lambda.size());
  return alg.right_multiplication_matrix(nu_dense(lambda));
}

IntMatrix pi_matrix(const NumberPartition& lambda) {
  const int n = lambda.size();
  if (n > 7) throw std::invalid_argument("pi_matrix: n exceeds the dense budget (7)");
  const auto xs = enumerate_set_partitions(n, lambda);
  std::uint64_t orders = 1;
  for (int p : lambda.parts()) orders *= factorial(p);
  const auto perms = all_permutations(n);
  IntMatrix pi(xs.size() * orders, perms.size());
  std::vector<int> pos(n + 1);
  for (std::size_t c = 0; c < perms.size(); ++c) {
    for (int i = 1; i <= n; ++i) pos[perms[c](i)] = i;
    for (std::size_t x = 0; x < xs.size(); ++x) {
      // mixed radix index of the tuple of block orders realized by the word
      std::uint64_t idx = 0;
      for (const auto& block : xs[x].blocks()) {
        std::vector<int> order(block.size());
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[block[a - 1]] < pos[block[b - 1]]; });
        idx = idx * factorial(static_cast<int>(block.size())) + lex_rank(Permutation(order));
      }
      pi(x * orders + idx, c) = 1;
    }
  }
  return pi;
}

namespace {

bool maps_blocks_to_blocks(const Permutation& w, const SetPartition& x, bool setwise_fixed) {
  const auto owner = x.block_of();
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const auto& block = x.blocks()[b];
    const int target = owner[w(block[0])];
    if (setwise_fixed && target != static_cast<int>(b)) return false;
    if (x.blocks()[static_cast<std::size_t>(target)].size() != block.size()) return false;
    for (int e : block)
      if (owner[w(e)] != target) return false;
  }
  return true;
}

}  // namespace

CosetSquareRoot coset_square_root(const NumberPartition& lambda) {
  const int n = lambda.size();
  const SetPartition x0 = standard_set_partition(lambda);
  CosetSquareRoot out{GroupAlgebraElement(n), GroupAlgebraElement(n), 0, 1};
  std::vector<int> pos(n + 1);
  std::int64_t normalizer = 0, centralizer = 0;
  for (const auto& y : all_permutations(n)) {
    for (int i = 1; i <= n; ++i) pos[y(i)] = i;
    bool increasing = true;
    for (const auto& block : x0.blocks())
      for (std::size_t i = 1; i < block.size() && increasing; ++i) increasing = pos[block[i - 1]] < pos[block[i]];
    if (increasing) {
      out.right.add(y, 1);
      out.left.add(inverse(y), 1);
    }
    if (n <= 6) {
      if (maps_blocks_to_blocks(y, x0, false)) ++normalizer;
      if (maps_blocks_to_blocks(y, x0, true)) ++centralizer;
    }
  }
  for (int i = 1; i <= n; ++i) out.n_x_formula *= static_cast<std::int64_t>(factorial(lambda.multiplicity(i)));
  out.n_x = n <= 6 ? normalizer / centralizer : out.n_x_formula;
  return out;
}

std::vector<GroupAlgebraElement> eulerian_idempotents(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_idempotents: n must be positive");
  std::vector<GroupAlgebraElement> e(static_cast<std::size_t>(n), GroupAlgebraElement(n));
  const Rational inv_fact(1, static_cast<long>(factorial(n)));
  std::map<int, Polynomial> by_descents;
  for (const auto& s : all_permutations(n)) {
    const int d = static_cast<int>(descent_set(s).size());
    auto it = by_descents.find(d);
    if (it == by_descents.end()) {
      Polynomial p = Polynomial::constant(1);
      for (int i = 0; i < n; ++i) p = p * Polynomial::linear_root(Rational(d - i));
      it = by_descents.emplace(d, p).first;
    }
    for (int j = 1; j <= n; ++j) e[static_cast<std::size_t>(j - 1)].add(s, it->second.coeff(j) * inv_fact);
  }
  return e;
}

std::vector<ExactMatrix> nu_blocks(const FourierEngine& fe, const NumberPartition& op) {
  if (op.size() != fe.n()) throw std::invalid_argument("nu_blocks: size mismatch");
  const auto d = nu_dense(op);
  std::vector<Rational> a(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a[i] = static_cast<long>(d[i]);
  return fe.transform(a);
}

CheckResult perron_check(const NumberPartition& lambda) {
  CheckResult res;
  const int n = lambda.size();
  if (n > 7) throw std::invalid_argument("perron_check: n exceeds 7");
  const auto coeffs = nu_dense(lambda);
  std::int64_t sum = std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
  std::uint64_t young = 1;
  for (int p : lambda.parts()) young *= factorial(p);
  const auto expected =
      static_cast<std::int64_t>(enumerate_set_partitions(n, lambda).size() * (factorial(n) / young));
  // every row of right multiplication sums to the coefficient sum
  if (sum != expected) res.fail("row sum " + std::to_string(sum) + " != " + std::to_string(expected));
  // nu_(n) is the identity, so simplicity only applies to the other types
  if (lambda.length() == 1) return res;
  FourierEngine fe(n);
  const auto blocks = nu_blocks(fe, lambda);
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const auto& lam = fe.partitions()[l];
    const Rational v(static_cast<long>(sum));
    const Rational at = charpoly(blocks[l])(v);
    const bool is_root = sgn(at) == 0;
    if (l == 0 && !is_root) res.fail("trivial block does not carry the row sum");
    if (l == 0 && factor_rational_roots(charpoly(blocks[l])).multiplicity(v) != 1) res.fail("trivial block multiplicity");
    if (l > 0 && is_root) res.fail("row sum is also an eigenvalue on " + lam.str());
  }
  return res;
}

CheckResult sgn_rule_check(int n) {
  CheckResult res;
  const auto perms = all_permutations(n);
  for (int k = 1; k <= n; ++k) {
    const auto lam = hook_partition(n, k);
    std::int64_t v = 0;
    for (const auto& w : perms) v += sign(w) * noninv_lambda(w, lam);
    const std::int64_t expected = (k == n || (k == n - 1 && n % 2 == 1)) ? 1 : 0;
    if (v != expected)
      res.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(v) + " != " +
               std::to_string(expected));
  }
  return res;
}

std::int64_t partition_lattice_mobius(int n) {
  auto xs = all_set_partitions(n);
  // finer partitions have more blocks, so process by block count descending
  std::stable_sort(xs.begin(), xs.end(),
                   [](const SetPartition& a, const SetPartition& b) { return a.blocks().size() > b.blocks().size(); });
  std::vector<std::int64_t> mu(xs.size(), 0);
  for (std::size_t y = 0; y < xs.size(); ++y) {
    if (y == 0) {
      mu[0] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t x = 0; x < y; ++x)
      if (xs[x].blocks().size() > xs[y].blocks().size() && xs[x].refines(xs[y])) s += mu[x];
    mu[y] = -s;
  }
  return mu.back();
}

SecondFamilyEigenvalue second_family_eigenvalue(const NumberPartition& lambda, int k) {
  const int n = lambda.size();
  const auto op = two_block_partition(n, k);
  FourierEngine fe(n);
  const auto blocks = nu_blocks(fe, op);
  const auto l = static_cast<std::size_t>(std::find(fe.partitions().begin(), fe.partitions().end(), lambda) -
                                          fe.partitions().begin());
  const auto& b = blocks[l];
  SecondFamilyEigenvalue out;
  out.trace = trace(b);
  out.divided = out.trace / Rational(static_cast<long>(hook_dimension(lambda)));
  out.block_rank = static_cast<int>(rank(b));
  out.eigenvalue = 0;
  if (out.block_rank > 0) {
    const auto f = factor_rational_roots(charpoly(b));
    for (const auto& [r, m] : f.roots)
      if (sgn(r) != 0) {
        if (sgn(out.eigenvalue) != 0) throw std::runtime_error("second_family_eigenvalue: several nonzero eigenvalues");
        out.eigenvalue = r;
      }
  }
  return out;
}

int oddcols(const NumberPartition& lambda) {
  const auto c = lambda.conjugate();
  int odd = 0;
  for (int p : c.parts()) odd += p % 2;
  return odd;
}

CommutingPairs commuting_pairs_scan(int n) {
  CommutingPairs out;
  out.n = n;
  FourierEngine fe(n);
  std::vector<NumberPartition> ops;
  std::vector<std::vector<ExactMatrix>> blocks;
  for (const auto& lam : partitions_of(n)) {
    if (lam.length() == 1 || lam.length() == n) continue;
    ops.push_back(lam);
    blocks.push_back(nu_blocks(fe, lam));
  }
  auto is_hook = [](const NumberPartition& p) {
    return std::all_of(p.parts().begin() + 1, p.parts().end(), [](int x) { return x == 1; });
  };
  auto is_two_block = [](const NumberPartition& p) { return p[0] <= 2; };
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      bool commute = true;
      for (std::size_t l = 0; l < blocks[a].size() && commute; ++l)
        commute = commutator_is_zero(blocks[a][l], blocks[b][l]);
      if (commute) out.commuting.emplace_back(ops[a], ops[b]);
      if ((is_hook(ops[a]) && is_hook(ops[b])) || (is_two_block(ops[a]) && is_two_block(ops[b])))
        out.predicted.emplace_back(ops[a], ops[b]);
    }
  out.matches = out.commuting == out.predicted;
  return out;
}

}  // namespace shuffle
