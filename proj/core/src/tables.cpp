#include "shuffle/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "shuffle/characters.hpp"
#include "shuffle/poly.hpp"
#include "shuffle/tableau.hpp"

namespace shuffle {

namespace {

struct Piece {
  std::vector<Rational> eig;
  int w0 = 0;
  std::size_t dim = 0;
};

struct BlockResult {
  std::vector<Piece> pieces;
  std::vector<std::string> warnings;
  bool integral = true;
  bool stable = true;
  bool complete = true;
};

// Subspace spanned by the columns of basis, which is the identity on the rows in pivots.
struct Subspace {
  ExactMatrix basis;
  std::vector<std::size_t> pivots;
};

// Kernel of c with the identity on the free rows.
Subspace kernel_with_free(const ExactMatrix& c) {
  const auto e = rref(c);
  std::vector<char> is_pivot(c.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Subspace k;
  for (std::size_t col = 0; col < c.cols(); ++col)
    if (!is_pivot[col]) k.pivots.push_back(col);
  k.basis = ExactMatrix(c.cols(), k.pivots.size());
  for (std::size_t f = 0; f < k.pivots.size(); ++f) {
    k.basis(k.pivots[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.basis(e.pivots[r], f) = -e.reduced(r, k.pivots[f]);
  }
  return k;
}

// Rational eigenvalues of c: integer candidates from a floating point solve,
// confirmed by exact kernels; the exact characteristic polynomial is used
// only when the candidates do not account for the whole space.
std::vector<std::pair<Rational, Subspace>> eigenspaces(const ExactMatrix& c, bool& integral, bool& complete,
                                                       std::string& residual) {
  std::vector<std::pair<Rational, Subspace>> out;
  std::set<Rational> tried;
  std::size_t found = 0;
  auto attempt = [&](const Rational& e) {
    if (!tried.insert(e).second) return;
    auto k = kernel_with_free(shifted(c, e));
    if (k.pivots.empty()) return;
    found += k.pivots.size();
    out.emplace_back(e, std::move(k));
  };
  if (c.rows() == 1) {
    attempt(c(0, 0));
  } else {
    for (double v : numeric_eigenvalues(c)) {
      if (!std::isfinite(v)) continue;
      attempt(Rational(static_cast<long>(std::llround(v))));
      if (found == c.rows()) break;
    }
  }
  if (found < c.rows()) {
    const auto f = factor_rational_roots(charpoly(c));
    for (const auto& [r, m] : f.roots) attempt(r);
    if (!f.fully_rational()) {
      complete = false;
      residual = f.residual.str();
    }
  }
  for (const auto& [e, k] : out)
    if (e.get_den() != 1) integral = false;
  if (found < c.rows()) integral = false;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

Subspace compose_subspace(const Subspace& outer, const Subspace& inner) {
  Subspace s;
  s.basis = outer.basis * inner.basis;
  for (auto p : inner.pivots) s.pivots.push_back(outer.pivots[p]);
  return s;
}

ExactMatrix restrict_to(const ExactMatrix& m, const Subspace& s) { return select_rows(m, s.pivots) * s.basis; }

void split(const std::vector<ExactMatrix>& ops, const std::vector<std::size_t>& order, const ExactMatrix& w,
           const Subspace& s, std::size_t depth, std::vector<Rational>& eig, const std::string& label,
           BlockResult& res) {
  if (depth == order.size()) {
    for (std::size_t k = 0; k < ops.size(); ++k)
      if (!(ops[k] * s.basis == eig[k] * s.basis)) {
        res.complete = false;
        res.warnings.push_back(label + ": restriction is not invariant, the operators do not commute");
        return;
      }
    const ExactMatrix wb = w * s.basis;
    const ExactMatrix cw = select_rows(wb, s.pivots);
    if (!(wb == s.basis * cw)) {
      res.stable = false;
      res.warnings.push_back(label + ": joint eigenspace is not w0-stable");
      res.pieces.push_back({eig, 0, s.basis.cols()});
      return;
    }
    std::size_t seen = 0;
    for (int sign : {1, -1}) {
      auto k = kernel_with_free(shifted(cw, sign));
      if (k.pivots.empty()) continue;
      seen += k.pivots.size();
      res.pieces.push_back({eig, sign, k.pivots.size()});
    }
    if (seen != s.basis.cols()) {
      res.stable = false;
      res.warnings.push_back(label + ": w0 is not diagonalizable on a joint eigenspace");
    }
    return;
  }
  const std::size_t k = order[depth];
  const ExactMatrix c = restrict_to(ops[k], s);
  std::string residual;
  bool complete = true;
  const auto spaces = eigenspaces(c, res.integral, complete, residual);
  if (!complete) {
    res.complete = false;
    res.warnings.push_back(label + ": non-rational eigenvalues, characteristic polynomial factor " + residual);
  }
  for (const auto& [e, sub] : spaces) {
    eig[k] = e;
    split(ops, order, w, compose_subspace(s, sub), depth + 1, eig, label, res);
  }
}

// Verifies that every piece is a genuine joint eigenspace, so the dimensions
// summing to f certify simultaneous diagonalizability.
BlockResult decompose_block(const std::vector<ExactMatrix>& blocks, const ExactMatrix& w0, const std::string& label) {
  const std::size_t f = w0.rows();
  std::vector<ExactMatrix> ops;
  for (const auto& b : blocks) ops.push_back(b.transpose());
  const ExactMatrix w = w0.transpose();
  std::vector<std::size_t> order(ops.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  Subspace whole{ExactMatrix::identity(f), {}};
  for (std::size_t i = 0; i < f; ++i) whole.pivots.push_back(i);
  BlockResult res;
  std::vector<Rational> eig(ops.size(), Rational(0));
  split(ops, order, w, whole, 0, eig, label, res);
  std::size_t total = 0;
  for (const auto& p : res.pieces) total += p.dim;
  if (total != f) {
    res.complete = false;
    res.warnings.push_back(label + ": joint eigenspaces do not span the block");
  }
  return res;
}

int column_block(int n, const std::vector<Rational>& eig) {
  for (std::size_t k = 0; k < eig.size(); ++k)
    if (sgn(eig[k]) != 0) return k == 0 ? n : n - static_cast<int>(k + 1);
  return 0;
}

int two_block_block(const std::vector<Rational>& eig) {
  for (std::size_t k = 0; k < eig.size(); ++k)
    if (sgn(eig[k]) != 0) return static_cast<int>(k);
  return static_cast<int>(eig.size());
}

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SimultaneousTable simultaneous_tables(int n, Family family, const TableOptions& opts) {
  if (n < 1 || n > 9) throw std::invalid_argument("simultaneous_tables: n must be in 1..9");
  SimultaneousTable t;
  t.n = n;
  t.family = family;
  t.operators = family_partitions(n, family);
  FourierEngine fe(n);
  std::vector<std::vector<ExactMatrix>> per_op;
  for (const auto& op : t.operators) per_op.push_back(nu_blocks(fe, op));
  const auto& lambdas = fe.partitions();
  std::vector<BlockResult> results(lambdas.size());
  parallel_for(lambdas.size(), opts.threads, [&](std::size_t l) {
    std::vector<ExactMatrix> blocks;
    for (const auto& b : per_op) blocks.push_back(b[l]);
    results[l] = decompose_block(blocks, fe.longest_element_block(lambdas[l]), lambdas[l].str());
  });

  std::map<std::pair<std::vector<Rational>, int>, std::map<NumberPartition, int>> merged;
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const auto& r = results[l];
    t.integral = t.integral && r.integral && r.complete;
    t.w0_stable = t.w0_stable && r.stable;
    t.commuting = t.commuting && r.complete;
    t.warnings.insert(t.warnings.end(), r.warnings.begin(), r.warnings.end());
    for (const auto& p : r.pieces) merged[{p.eig, p.w0}][lambdas[l]] += static_cast<int>(p.dim);
  }
  for (auto& [key, mult] : merged) {
    TableRow row;
    row.eigenvalues = key.first;
    row.w0 = key.second;
    row.multiplicities = std::move(mult);
    row.block = family == Family::Columns ? column_block(n, row.eigenvalues) : two_block_block(row.eigenvalues);
    t.rows.push_back(std::move(row));
  }
  std::sort(t.rows.begin(), t.rows.end(), [&](const TableRow& a, const TableRow& b) {
    if (family == Family::Columns) {
      if (a.block != b.block) return a.block > b.block;
      if (a.w0 != b.w0) return a.w0 > b.w0;
      return a.eigenvalues > b.eigenvalues;
    }
    if (a.eigenvalues != b.eigenvalues) return a.eigenvalues > b.eigenvalues;
    return a.w0 > b.w0;
  });
  return t;
}

std::vector<TableRow> nonzero_rows(const SimultaneousTable& t) {
  std::vector<TableRow> out;
  for (const auto& r : t.rows)
    if (std::any_of(r.eigenvalues.begin(), r.eigenvalues.end(), [](const Rational& q) { return sgn(q) != 0; }))
      out.push_back(r);
  return out;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string multiplicities_str(const std::map<NumberPartition, int>& m) {
  // partitions_of order: larger shapes first
  std::vector<std::pair<NumberPartition, int>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string s;
  for (const auto& [lam, k] : v) s += (s.empty() ? "" : ",") + lam.str() + ":" + std::to_string(k);
  return s;
}

std::string to_tsv(const SimultaneousTable& t) {
  std::ostringstream os;
  os << "# n=" << t.n << " family=" << family_name(t.family) << " operators=";
  for (std::size_t i = 0; i < t.operators.size(); ++i) os << (i ? "," : "") << t.operators[i].str();
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) os << (i ? "," : "") << rational_str(r.eigenvalues[i]);
    os << "\t" << r.w0 << "\t" << multiplicities_str(r.multiplicities) << "\n";
  }
  return os.str();
}

std::string to_json(const SimultaneousTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = t.n;
  j["family"] = family_name(t.family);
  j["operators"] = nlohmann::ordered_json::array();
  for (const auto& op : t.operators) j["operators"].push_back(op.str());
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["eigenvalues"] = nlohmann::ordered_json::array();
    for (const auto& e : r.eigenvalues) {
      if (e.get_den() == 1 && e.get_num().fits_slong_p())
        row["eigenvalues"].push_back(e.get_num().get_si());
      else
        row["eigenvalues"].push_back(rational_str(e));
    }
    row["w0"] = r.w0 == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.w0);
    row["block"] = r.block;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    std::vector<std::pair<NumberPartition, int>> v(r.multiplicities.begin(), r.multiplicities.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [lam, k] : v) m[lam.str()] = k;
    row["multiplicities"] = m;
    j["rows"].push_back(row);
  }
  j["integral"] = t.integral;
  j["w0_stable"] = t.w0_stable;
  j["warnings"] = t.warnings;
  return j.dump(2) + "\n";
}

std::string to_markdown(const SimultaneousTable& t) {
  std::ostringstream os;
  os << "|";
  for (const auto& op : t.operators) os << " nu_" << op.str() << " |";
  os << " w0 | irreducibles |\n|";
  for (std::size_t i = 0; i < t.operators.size() + 2; ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) {
    os << "|";
    for (const auto& e : r.eigenvalues) os << " " << (sgn(e) == 0 ? std::string("·") : rational_str(e)) << " |";
    os << " " << (r.w0 > 0 ? "+1" : r.w0 < 0 ? "-1" : "?") << " |";
    std::vector<std::pair<NumberPartition, int>> v(r.multiplicities.begin(), r.multiplicities.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string cell;
    for (const auto& [lam, k] : v)
      cell += (cell.empty() ? "" : ", ") + std::string("chi^") + lam.str() + (k > 1 ? " x" + std::to_string(k) : "");
    os << " " << cell << " |\n";
  }
  return os.str();
}

namespace {

std::int64_t left_nullity(const ExactMatrix& a) { return static_cast<std::int64_t>(a.rows() - rank(a)); }

}  // namespace

FiltrationReport kernel_filtration(int n, Family family, int full_matrix_limit) {
  if (n < 1 || n > 8) throw std::invalid_argument("kernel_filtration: n must be in 1..8");
  FiltrationReport rep;
  rep.n = n;
  rep.family = family;
  // operators ordered so that kernels grow
  std::vector<NumberPartition> chain;
  if (family == Family::Columns) {
    for (int j = 0; j < n; ++j) chain.push_back(hook_partition(n, n - j));
  } else {
    for (int a = n / 2; a >= 0; --a) chain.push_back(two_block_partition(n, a));
  }
  FourierEngine fe(n);
  const auto& lambdas = fe.partitions();
  std::vector<std::vector<ExactMatrix>> blocks;
  for (const auto& op : chain) blocks.push_back(nu_blocks(fe, op));
  std::vector<ExactMatrix> w0;
  for (const auto& lam : lambdas) w0.push_back(fe.longest_element_block(lam));

  const std::size_t c = chain.size();
  std::vector<std::int64_t> kd(c, 0), kp(c, 0), km(c, 0);
  std::int64_t whole_plus = 0, whole_minus = 0;
  rep.nested = true;
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const auto f = static_cast<std::int64_t>(w0[l].rows());
    const auto wp = shifted(w0[l], 1), wm = shifted(w0[l], -1);
    whole_plus += f * left_nullity(wp);
    whole_minus += f * left_nullity(wm);
    for (std::size_t i = 0; i < c; ++i) {
      const auto& a = blocks[i][l];
      const auto r = static_cast<std::int64_t>(rank(a));
      kd[i] += f * (f - r);
      kp[i] += f * left_nullity(hstack(a, wp));
      km[i] += f * left_nullity(hstack(a, wm));
      // left kernels grow: the columns of the next block lie in the span of the previous one
      if (i > 0 && rank(hstack(blocks[i - 1][l], a)) != rank(blocks[i - 1][l])) rep.nested = false;
    }
  }
  if (n <= full_matrix_limit) {
    rep.full_matrix_checked = true;
    for (std::size_t i = 0; i < c; ++i)
      if (static_cast<std::int64_t>(factorial(n) - rank_modular(nu_matrix(chain[i]))) != kd[i]) {
        rep.full_matrix_checked = false;
        rep.nested = false;
      }
  }

  const auto table = simultaneous_tables(n, family);
  auto content = [&](int block) {
    std::vector<std::pair<NumberPartition, int>> v;
    for (const auto& r : table.rows)
      if (r.block == block)
        for (const auto& [lam, m] : r.multiplicities)
          for (int i = 0; i < m; ++i) v.emplace_back(lam, r.w0);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto total = static_cast<std::int64_t>(factorial(n));
  rep.dims_ok = rep.z2_ok = rep.tableaux_ok = true;
  std::int64_t sum = 0;
  if (family == Family::Columns) {
    for (int j = 0; j <= n; ++j) {
      FiltrationLevel lv;
      lv.j = j;
      if (j <= n - 2) {
        lv.kernel_dim = kd[static_cast<std::size_t>(j + 1)];
        const std::int64_t below = kd[static_cast<std::size_t>(j)];
        lv.factor_dim = lv.kernel_dim - below;
        lv.plus_dim = kp[static_cast<std::size_t>(j + 1)] - kp[static_cast<std::size_t>(j)];
        lv.minus_dim = km[static_cast<std::size_t>(j + 1)] - km[static_cast<std::size_t>(j)];
      } else if (j == n - 1) {
        lv.kernel_dim = kd[c - 1];
      } else {
        lv.kernel_dim = total;
        lv.factor_dim = total - kd[c - 1];
        lv.plus_dim = whole_plus - kp[c - 1];
        lv.minus_dim = whole_minus - km[c - 1];
      }
      const auto d = derangement_counts(n - j);
      const auto b = static_cast<std::int64_t>(binomial(n, j));
      lv.expected_dim = b * d.total;
      lv.expected_plus = b * d.even;
      lv.expected_minus = b * d.odd;
      lv.computed = content(j);
      lv.predicted = predicted_factor(n, j);
      rep.dims_ok = rep.dims_ok && lv.factor_dim == lv.expected_dim;
      rep.z2_ok = rep.z2_ok && lv.plus_dim == lv.expected_plus && lv.minus_dim == lv.expected_minus;
      rep.tableaux_ok = rep.tableaux_ok && lv.computed == lv.predicted;
      sum += lv.factor_dim;
      rep.levels.push_back(std::move(lv));
    }
  } else {
    // chain[c-1] is nu_(1^n); level a corresponds to chain[c-1-a]
    for (std::size_t a = 0; a < c; ++a) {
      FiltrationLevel lv;
      lv.j = static_cast<int>(a);
      const std::size_t i = c - 1 - a;
      lv.kernel_dim = kd[i];
      const std::int64_t above = a == 0 ? total : kd[i + 1];
      const std::int64_t above_p = a == 0 ? whole_plus : kp[i + 1];
      const std::int64_t above_m = a == 0 ? whole_minus : km[i + 1];
      lv.factor_dim = above - kd[i];
      lv.plus_dim = above_p - kp[i];
      lv.minus_dim = above_m - km[i];
      lv.computed = content(static_cast<int>(a));
      for (const auto& lam : lambdas)
        if (oddcols(lam) == n - 2 * static_cast<int>(a)) lv.expected_dim += static_cast<std::int64_t>(hook_dimension(lam));
      for (const auto& [lam, s] : lv.computed) {
        lv.predicted.emplace_back(lam, s);
        (s > 0 ? lv.expected_plus : lv.expected_minus) += static_cast<std::int64_t>(hook_dimension(lam));
      }
      std::set<NumberPartition> got, want;
      for (const auto& [lam, s] : lv.computed) got.insert(lam);
      for (const auto& lam : lambdas)
        if (oddcols(lam) == n - 2 * static_cast<int>(a)) want.insert(lam);
      rep.tableaux_ok = rep.tableaux_ok && got == want && lv.computed.size() == want.size();
      rep.dims_ok = rep.dims_ok && lv.factor_dim == lv.expected_dim;
      rep.z2_ok = rep.z2_ok && lv.plus_dim == lv.expected_plus && lv.minus_dim == lv.expected_minus;
      sum += lv.factor_dim;
      rep.levels.push_back(std::move(lv));
    }
    sum += kd[0];
  }
  rep.dims_ok = rep.dims_ok && sum == total;
  return rep;
}

GelfandModelReport gelfand_model_check(int n) {
  GelfandModelReport rep;
  rep.n = n;
  rep.ok = true;
  const auto t = simultaneous_tables(n, Family::TwoBlocks);
  std::map<NumberPartition, int> seen;
  for (const auto& r : nonzero_rows(t))
    for (const auto& [lam, m] : r.multiplicities) {
      seen[lam] += m;
      if (m != 1) {
        rep.ok = false;
        rep.details.push_back(lam.str() + " has multiplicity " + std::to_string(m) + " in a nonzero row");
      }
      if (2 * r.block != n - oddcols(lam)) {
        rep.ok = false;
        rep.details.push_back(lam.str() + " first leaves the kernel at a = " + std::to_string(r.block));
      }
    }
  for (const auto& lam : partitions_of(n))
    if (seen[lam] != 1) {
      rep.ok = false;
      rep.details.push_back(lam.str() + " occurs " + std::to_string(seen[lam]) + " times outside the kernels");
    }
  return rep;
}

bool FormulaReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const FormulaCell& c) { return c.match; });
}

namespace {

Rational binom_q(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  return Rational(static_cast<long>(binomial(a, b)));
}

Rational fact_q(int a) { return Rational(static_cast<long>(factorial(a))); }

std::string vec_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_str(v[i]);
  return s + ")";
}

}  // namespace

FormulaReport conjecture_eigenvalue_formulas(int n) {
  if (n < 4 || n > 8) throw std::invalid_argument("conjecture_eigenvalue_formulas: n must be in 4..8");
  FormulaReport rep;
  rep.n = n;
  const auto t = simultaneous_tables(n, Family::Columns);

  struct Prediction {
    int j;
    std::vector<int> shape;
    std::vector<Rational> values;  // nu_(1^n), nu_(2,1^(n-2)), nu_(3,1^(n-3))
  };
  const Rational nf = fact_q(n);
  std::vector<Prediction> preds{
      {n, {n}, {binom_q(n, 1) * fact_q(n - 1), binom_q(n, 2) * fact_q(n - 2), binom_q(n, 3) * fact_q(n - 3)}},
      {n - 2, {n - 1, 1}, {0, fact_q(n + 1) / 6, fact_q(n + 1) / 24}},
      {n - 2, {n - 2, 1, 1}, {0, nf / 6, binom_q(n, 2) * fact_q(n - 1) / 6}},
      {n - 3, {n - 1, 1}, {0, 0, fact_q(n + 2) / 120}},
      {n - 3, {n - 2, 2}, {0, 0, fact_q(n + 1) / 30}},
      {n - 3, {n - 2, 1, 1}, {0, 0, fact_q(n + 1) / 60}},
      {n - 3, {n - 3, 2, 1}, {0, 0, nf / 15}},
  };
  for (const auto& p : preds) {
    std::vector<int> parts;
    for (int x : p.shape)
      if (x > 0) parts.push_back(x);
    if (!std::is_sorted(parts.rbegin(), parts.rend())) continue;
    const NumberPartition lam(parts);
    FormulaCell cell;
    cell.what = "stability table: chi^" + lam.str() + " in V_{" + std::to_string(n) + "," + std::to_string(p.j) + "}";
    cell.expected = vec_str(p.values);
    std::vector<std::string> found;
    for (const auto& r : t.rows) {
      if (r.block != p.j || !r.multiplicities.count(lam)) continue;
      std::vector<Rational> first(r.eigenvalues.begin(), r.eigenvalues.begin() + 3);
      found.push_back(vec_str(first));
      if (first == p.values) cell.match = true;
    }
    for (const auto& s : found) cell.computed += (cell.computed.empty() ? "" : " ") + s;
    rep.cells.push_back(std::move(cell));
  }

  const NumberPartition std_shape({n - 1, 1});
  std::multiset<std::vector<Rational>> computed, expected;
  for (const auto& r : t.rows)
    if (auto it = r.multiplicities.find(std_shape); it != r.multiplicities.end())
      for (int i = 0; i < it->second; ++i) computed.insert(r.eigenvalues);
  for (int r = 1; r <= n - 1; ++r) {
    std::vector<Rational> v;
    for (int k = 1; k <= n - 1; ++k) v.push_back(fact_q(n - k) * binom_q(n - r - 1, k - r - 1) * binom_q(n + r, k + r));
    FormulaCell cell;
    cell.what = "standard isotypic eigenvalues, r = " + std::to_string(r);
    cell.expected = vec_str(v);
    cell.match = computed.count(v) > 0;
    cell.computed = cell.match ? cell.expected : "absent";
    expected.insert(v);
    rep.cells.push_back(std::move(cell));
  }
  FormulaCell whole;
  whole.what = "standard isotypic eigenvalues, full multiset";
  whole.match = computed == expected;
  whole.expected = std::to_string(expected.size()) + " vectors";
  whole.computed = std::to_string(computed.size()) + " vectors";
  rep.cells.push_back(std::move(whole));
  return rep;
}

}  // namespace shuffle
