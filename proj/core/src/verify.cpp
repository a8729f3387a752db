#include "shuffle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shuffle/faces.hpp"
#include "shuffle/injective_words.hpp"
#include "shuffle/operators.hpp"
#include "shuffle/roots.hpp"
#include "shuffle/tables.hpp"
#include "shuffle/tableau.hpp"

namespace shuffle {

namespace {

using Clock = std::chrono::steady_clock;

void require_range(const std::string& suite, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::invalid_argument("suite " + suite + ": n must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Accumulates failures of one named identity.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}
  std::string name;
  std::vector<std::string> failures;
  std::size_t cases = 0;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  Check done() const {
    Check c{name, failures.empty(), "", false};
    if (failures.empty()) {
      c.detail = std::to_string(cases) + " cases";
    } else {
      for (std::size_t i = 0; i < failures.size(); ++i) c.detail += (i ? "; " : "") + failures[i];
    }
    return c;
  }
};

std::vector<std::int64_t> to_ints(const GroupAlgebraElement& a, int n) {
  std::vector<std::int64_t> v(factorial(n), 0);
  for (const auto& [w, c] : a.terms()) {
    if (c.get_den() != 1) throw std::logic_error("to_ints: non-integral coefficient");
    v[lex_rank(w)] = c.get_num().get_si();
  }
  return v;
}

std::vector<NumberPartition> sampled_partitions(int n, const VerifyOptions& opts) {
  auto parts = partitions_of(n);
  if (n <= 5) return parts;
  std::mt19937_64 rng(opts.seed);
  std::shuffle(parts.begin(), parts.end(), rng);
  parts.resize(std::min<std::size_t>(parts.size(), 10));
  return parts;
}

void suite_factorizations(int n, const VerifyOptions& opts, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  DenseIntAlgebra alg(n);
  Tally pi{"nu = pi^T pi"}, coset{"nu = (1/n_X) left right"}, nx{"n_X from stabilizers = prod m_i!"};
  Tally bhr{"bhr = right multiplication by the coset sum"}, btb{"b^T b = n_X nu"}, ker{"ker b = ker nu"};
  for (const auto& lam : sampled_partitions(n, opts)) {
    const auto s = lam.str();
    const auto p = pi_matrix(lam);
    const auto nu = nu_matrix(lam);
    pi.expect(p.transpose() * p == nu, s);
    const auto c = coset_square_root(lam);
    nx.expect(c.n_x == c.n_x_formula, s);
    auto prod = alg.multiply(to_ints(c.left, n), to_ints(c.right, n));
    auto want = nu_dense(lam);
    for (auto& x : want) x *= c.n_x;
    coset.expect(prod == want, s);
    if (n <= 5) {
      const auto b = bhr_matrix(lam);
      bhr.expect(b == alg.right_multiplication_matrix(to_ints(c.left, n)), s);
      auto scaled = nu;
      for (auto& x : scaled.data()) x *= c.n_x;
      btb.expect(b.transpose() * b == scaled, s);
      const auto rn = rank_modular(nu);
      ker.expect(rank_modular(b) == rn && rank_modular(vstack(b, nu)) == rn, s);
    }
  }
  for (const auto* t : {&pi, &coset, &nx}) r.checks.push_back(t->done());
  if (n <= 5)
    for (const auto* t : {&bhr, &btb, &ker}) r.checks.push_back(t->done());
}

void commutativity_blocks(int n, Family f, Tally& t) {
  const FourierEngine fe(n);
  std::vector<std::vector<ExactMatrix>> blocks;
  const auto ops = family_partitions(n, f);
  for (const auto& op : ops) blocks.push_back(nu_blocks(fe, op));
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      bool ok = true;
      for (std::size_t k = 0; k < blocks[a].size() && ok; ++k) ok = commutator_is_zero(blocks[a][k], blocks[b][k]);
      t.expect(ok, ops[a].str() + " x " + ops[b].str());
    }
}

void commutativity_dense(int n, Family f, const DenseIntAlgebra& alg, Tally& t) {
  const auto ops = family_partitions(n, f);
  std::vector<std::vector<std::int64_t>> dense;
  for (const auto& op : ops) dense.push_back(nu_dense(op));
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      t.expect(alg.multiply(dense[a], dense[b]) == alg.multiply(dense[b], dense[a]), ops[a].str() + " x " + ops[b].str());
}

void suite_commutativity(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 8);
  Tally cols{"columns family commutes"}, two{"two-block family commutes"};
  if (n <= 7) {
    const DenseIntAlgebra alg(n);
    commutativity_dense(n, Family::Columns, alg, cols);
    commutativity_dense(n, Family::TwoBlocks, alg, two);
    cols.name += " (group algebra products)";
    two.name += " (group algebra products)";
  } else {
    commutativity_blocks(n, Family::Columns, cols);
    commutativity_blocks(n, Family::TwoBlocks, two);
    cols.name += " (Fourier blocks)";
    two.name += " (Fourier blocks)";
  }
  r.checks.push_back(cols.done());
  r.checks.push_back(two.done());
  if (n <= 4) {
    Tally d{"d^{k,l}_w = d^{l,k}_w"};
    for (const auto& w : all_permutations(n))
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) d.expect(d_coefficient(w, k, l) == d_coefficient(w, l, k), w.str());
    r.checks.push_back(d.done());
  }
}

void suite_integrality(int n, const VerifyOptions& opts, SuiteReport& r) {
  require_range(r.suite, n, 1, 8);
  TableOptions to;
  to.threads = opts.threads;
  for (auto f : {Family::Columns, Family::TwoBlocks}) {
    const auto t = simultaneous_tables(n, f, to);
    std::string detail = std::to_string(t.rows.size()) + " joint eigenspaces";
    for (const auto& w : t.warnings) detail += "; " + w;
    r.checks.push_back({family_name(f) + " eigenvalues are integers", t.integral, detail, false});
    r.checks.push_back({family_name(f) + " eigenspaces are w0-stable", t.w0_stable, "", false});
    r.checks.push_back({family_name(f) + " commutes in every block", t.commuting, "", false});
  }
}

void suite_filtration(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 8);
  const auto rep = kernel_filtration(n, Family::Columns);
  std::ostringstream dims;
  for (const auto& l : rep.levels) dims << (l.j ? " " : "") << l.factor_dim << "(" << l.plus_dim << "+" << l.minus_dim << ")";
  r.checks.push_back({"kernels nested", rep.nested, "", false});
  r.checks.push_back({"dim F_j = C(n,j) d_(n-j)", rep.dims_ok, dims.str(), false});
  r.checks.push_back({"Z2 split C(n,j) d^+-_(n-j)", rep.z2_ok, "", false});
  if (rep.full_matrix_checked) r.checks.push_back({"kernel dims confirmed on full matrices", true, "", false});
  const auto two = kernel_filtration(n, Family::TwoBlocks);
  r.checks.push_back({"two-block kernels nested", two.nested, "", false});
  const auto d = derangement_recurrences(std::max(n, 12));
  std::string fails;
  for (const auto& f : d.failures) fails += (fails.empty() ? "" : "; ") + f;
  r.checks.push_back({"derangement recurrences up to " + std::to_string(std::max(n, 12)), d.ok, fails, false});
}

void suite_tableaux(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 8);
  const auto rep = kernel_filtration(n, Family::Columns);
  Tally t{"predicted (lambda, eps) multiset equals computed factor"};
  for (const auto& l : rep.levels) {
    auto a = l.computed, b = l.predicted;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.expect(a == b, "j = " + std::to_string(l.j));
  }
  r.checks.push_back(t.done());
}

void suite_gelfand_model(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 8);
  const auto g = gelfand_model_check(n);
  std::string detail;
  for (const auto& d : g.details) detail += (detail.empty() ? "" : "; ") + d;
  r.checks.push_back({"each irreducible once, at oddcols level", g.ok, detail, false});
}

void suite_brown(int n, const VerifyOptions& opts, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  Tally sq{"minimal polynomial squarefree"}, roots{"roots among the support values"}, eq{"operator W-equivariant"};
  for (int s = 0; s < opts.samples; ++s) {
    const auto seed = opts.seed * 1000 + static_cast<std::uint64_t>(s);
    const auto rep = brown_min_poly(random_invariant_weights(n, seed), n);
    const auto tag = "seed " + std::to_string(seed);
    sq.expect(rep.squarefree, tag);
    roots.expect(rep.roots_in_support, tag);
    eq.expect(rep.equivariant, tag);
  }
  for (const auto* t : {&sq, &roots, &eq}) r.checks.push_back(t->done());
}

void suite_eulerian(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  const auto e = eulerian_idempotents(n);
  const auto nf = static_cast<std::int64_t>(factorial(n));
  // n! e^(j) is integral
  std::vector<std::vector<std::int64_t>> scaled;
  for (const auto& x : e) scaled.push_back(to_ints(x * Rational(nf), n));
  const DenseIntAlgebra alg(n);
  const auto m = static_cast<std::size_t>(nf);
  std::vector<std::int64_t> sum(m, 0), alt(m, 0);
  for (int j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      sum[i] += scaled[j - 1][i];
      alt[i] += (j % 2 ? -1 : 1) * scaled[j - 1][i];
    }
  std::vector<std::int64_t> id(m, 0), w0(m, 0);
  id[0] = nf;
  w0[lex_rank(longest_element(n))] = (n % 2 ? -1 : 1) * nf;
  r.checks.push_back({"sum e^(j) = 1", sum == id, "", false});
  r.checks.push_back({"sum (-1)^j e^(j) = (-1)^n w0", alt == w0, "", false});
  Tally orth{"e^(i) e^(j) = delta_ij e^(i)"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto want = scaled[i];
      for (auto& x : want) x = i == j ? x * nf : 0;
      orth.expect(alg.multiply(scaled[i], scaled[j]) == want, std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  r.checks.push_back(orth.done());
}

void suite_gr(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 7);
  Tally t{"Lyndon type counts equal descent-class fundamental sums, m = n"};
  for (const auto& lam : partitions_of(n)) {
    const auto g = gessel_reutenauer_check(lam, n, n);
    t.expect(g.ok, lam.str() + (g.first_mismatch.empty() ? "" : " " + g.first_mismatch));
  }
  r.checks.push_back(t.done());
}

void suite_derangements(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 0, 20);
  const int top = std::max(n, 12);
  const auto d = derangement_recurrences(top);
  std::string fails;
  for (const auto& f : d.failures) fails += (fails.empty() ? "" : "; ") + f;
  r.checks.push_back({"recurrences and binomial identity up to " + std::to_string(top), d.ok, fails, false});
  if (n <= 8) {
    DerangementCounts brute;
    for (const auto& w : all_permutations(std::max(n, 1))) {
      if (n == 0) break;
      bool fixed = false;
      for (int i = 1; i <= n; ++i) fixed = fixed || w(i) == i;
      if (fixed) continue;
      ++brute.total;
      ++(sign(w) > 0 ? brute.even : brute.odd);
    }
    if (n == 0) brute = {1, 1, 0};
    const auto c = derangement_counts(n);
    r.checks.push_back({"counts agree with enumeration", c.total == brute.total && c.even == brute.even && c.odd == brute.odd,
                        std::to_string(c.total) + " = " + std::to_string(c.even) + " + " + std::to_string(c.odd), false});
  }
}

void suite_commuting_pairs(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  const auto s = commuting_pairs_scan(n);
  std::string detail = std::to_string(s.commuting.size()) + " commuting pairs";
  r.checks.push_back({"commuting pairs are exactly those inside one family", s.matches, detail, false});
}

void suite_conjecture_formulas(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 4, 8);
  const auto rep = conjecture_eigenvalue_formulas(n);
  for (const auto& c : rep.cells)
    r.checks.push_back({c.what, c.match, "expected " + c.expected + ", computed " + c.computed, true});
}

void suite_injective_words(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  const auto rep = injective_words_check(n);
  r.checks.push_back({"delplus composites", rep.composites_ok, "", false});
  r.checks.push_back({"boundary squares to zero", rep.boundary_squares_zero, "", false});
  r.checks.push_back({"sign twist carries ker delplus to ker boundary", rep.sign_twist_ok, "", false});
  const auto d = derangement_counts(n).total;
  r.checks.push_back({"kernel dimensions equal d_n", rep.delplus_kernel_dim == d && rep.boundary_kernel_dim == d,
                      std::to_string(rep.delplus_kernel_dim) + ", " + std::to_string(rep.boundary_kernel_dim), false});
  if (n <= 5) r.checks.push_back({"kernel contents are conjugate", rep.conjugate_content, "", false});
}

void suite_perron(int n, const VerifyOptions&, SuiteReport& r) {
  require_range(r.suite, n, 1, 6);
  Tally p{"Perron eigenvalue and simplicity"};
  for (const auto& lam : partitions_of(n)) {
    const auto c = perron_check(lam);
    std::string d;
    for (const auto& x : c.details) d += " " + x;
    p.expect(c.ok, lam.str() + d);
  }
  r.checks.push_back(p.done());
  const auto s = sgn_rule_check(n);
  r.checks.push_back({"sign representation eigenvalues", s.ok, "", false});
  const auto mu = partition_lattice_mobius(n);
  r.checks.push_back({"|mu(0,1)| = (n-1)!", mu == (n % 2 ? 1 : -1) * static_cast<std::int64_t>(factorial(n - 1)),
                      std::to_string(mu), false});
}

void suite_rank_one(int, const VerifyOptions& opts, SuiteReport& r) {
  for (const auto& [label, orbit] : rank_one_table_rows(opts.allow_long)) {
    const auto rs = build_root_system(label);
    const auto hs = select_hyperplanes(rs, orbit);
    const auto res = rank_one_charpoly(rs, hs);
    const auto want = expected_rank_one_row(label, orbit);
    const auto name = label + (orbit.empty() ? "" : " " + orbit);
    r.checks.push_back({name + " factored charpoly", res.factors.str() == want, res.factors.str(), false});
    r.checks.push_back({name + " trace |W||O|/2", res.trace_ok && res.symmetric, res.trace.get_str(), false});
    if (is_crystallographic(rs)) {
      const auto w = weyl_closed_forms(rs, hs);
      r.checks.push_back({name + " Weyl closed forms", w.ok, "", false});
      const auto t = triple_span_check(rs, hs);
      r.checks.push_back({name + " triple span", t.ok,
                          std::to_string(t.span_rank) + " of " + std::to_string(t.expected_rank), false});
    }
  }
}

void suite_gelfand_pair(int, const VerifyOptions&, SuiteReport& r) {
  Tally t{"multiplicity-free induced characters"};
  std::vector<std::string> labels;
  for (int n = 2; n <= 6; ++n) labels.push_back("A" + std::to_string(n - 1));
  for (int n = 2; n <= 4; ++n) labels.push_back("B" + std::to_string(n));
  for (int m = 3; m <= 8; ++m) labels.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& l : labels) t.expect(gelfand_pair_check(l).ok, l);
  r.checks.push_back(t.done());
  const auto b2 = build_root_system("B2");
  const auto nu = arrangement_nu_matrix(b2, select_hyperplanes(b2, "all"));
  const auto f = factor_rational_roots(charpoly(to_exact(nu)));
  r.checks.push_back({"B2 all hyperplanes charpoly", f.str('t') == "(t^2-8t+8)^2 (t-16) t^3", f.str('t'), false});
  Tally rk{"rank pi_O = 1 + |O|"};
  for (const char* l : {"A2", "A3", "A4", "B2", "B3", "I2(5)"}) {
    const auto rs = build_root_system(l);
    auto sets = hyperplane_orbits(rs);
    sets.push_back(select_hyperplanes(rs, "all"));
    for (const auto& hs : sets) rk.expect(rank_modular(arrangement_pi_matrix(rs, hs)) == 1 + hs.size(), l);
  }
  r.checks.push_back(rk.done());
}

using SuiteFn = void (*)(int, const VerifyOptions&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"factorizations", suite_factorizations},
      {"commutativity", suite_commutativity},
      {"integrality", suite_integrality},
      {"filtration", suite_filtration},
      {"tableaux", suite_tableaux},
      {"gelfand-model", suite_gelfand_model},
      {"brown", suite_brown},
      {"eulerian", suite_eulerian},
      {"gr", suite_gr},
      {"derangements", suite_derangements},
      {"conjecture-1.6", suite_commuting_pairs},
      {"conjecture-formulas", suite_conjecture_formulas},
      {"injective-words", suite_injective_words},
      {"perron", suite_perron},
      {"rank-one", suite_rank_one},
      {"gelfand-pair", suite_gelfand_pair},
  };
  return r;
}

std::string closed_form_row(std::vector<std::pair<Rational, int>> roots) {
  Factorization f;
  for (auto& [x, m] : roots) {
    x.canonicalize();
    if (m > 0) f.roots.emplace_back(x, m);
  }
  std::sort(f.roots.begin(), f.roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  f.residual = Polynomial::constant(1);
  return f.str();
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok || c.reported; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& suite, int n, const VerifyOptions& opts) {
  for (const auto& [name, fn] : registry()) {
    if (name != suite) continue;
    SuiteReport r;
    r.suite = suite;
    r.n = n;
    const auto t0 = Clock::now();
    fn(n, opts, r);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
  throw std::invalid_argument("unknown suite " + suite);
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = 1;
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    json s;
    s["suite"] = r.suite;
    s["n"] = r.n;
    s["ok"] = r.ok();
    s["seconds"] = r.seconds;
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj;
      cj["name"] = c.name;
      cj["ok"] = c.ok;
      if (c.reported) cj["reported"] = true;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    s["checks"] = checks;
    arr.push_back(s);
    ok = ok && r.ok();
  }
  j["ok"] = ok;
  j["suites"] = arr;
  return j.dump(2) + "\n";
}

std::string expected_rank_one_row(const std::string& label, const std::string& orbit) {
  const auto rs = build_root_system(label);
  const long n = rs.rank;
  const auto nf = static_cast<long>(factorial(static_cast<int>(n)));
  const long p = 1L << (n - 1);
  switch (rs.family) {
    case 'A':
      return closed_form_row({{Rational((n + 2) * (n + 1) * nf, 6), static_cast<int>(n)},
                              {Rational((n + 1) * nf, 6), static_cast<int>(binomial(static_cast<int>(n), 2))}});
    case 'B':
      if (orbit == "sign-change" || orbit == "short" || orbit == "2")
        return closed_form_row({{Rational(p * nf), static_cast<int>(n)}});
      return closed_form_row({{Rational(p * nf * (2 * n - 1), 3), static_cast<int>(n)},
                              {Rational(p * nf, 3), static_cast<int>(n * (n - 2))}});
    case 'D':
      return closed_form_row({{Rational(p / 2 * nf * (2 * n - 1), 3), static_cast<int>(n)},
                              {Rational(p / 2 * nf, 3), static_cast<int>(n * (n - 2))}});
    case 'E':
      if (n == 6) return "(x-112320)^6 (x-8640)^30";
      if (n == 7) return "(x-9192960)^7 (x-483840)^56";
      return "(x-3599769600)^8 (x-116121600)^112";
    case 'F':
      return "(x-1344)^4 (x-192)^8";
    case 'H':
      if (n == 3) return "(x^2-248x+3856)^3 (x-24)^4 (x-12)^5";
      return "(x^2-79680x+94233600)^4 (x-3840)^16 (x-1440)^36";
    default:
      throw std::invalid_argument("expected_rank_one_row: no table row for " + label);
  }
}

std::vector<std::pair<std::string, std::string>> rank_one_table_rows(bool allow_long) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (int n = 3; n <= 7; ++n) rows.emplace_back("A" + std::to_string(n - 1), "");
  for (int n = 2; n <= 5; ++n) {
    rows.emplace_back("B" + std::to_string(n), "sign-change");
    rows.emplace_back("B" + std::to_string(n), "transposition");
  }
  for (const char* l : {"D4", "D5"}) rows.emplace_back(l, "");
  rows.emplace_back("F4", "long");
  rows.emplace_back("F4", "short");
  for (const char* l : {"H3", "H4", "E6"}) rows.emplace_back(l, "");
  if (allow_long) {
    rows.emplace_back("E7", "");
    rows.emplace_back("E8", "");
  }
  return rows;
}

}  // namespace shuffle
