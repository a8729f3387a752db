#include "shuffle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "shuffle/characters.hpp"

namespace shuffle {

namespace {

constexpr double kTol = 1e-9;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool same(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-8) return false;
  return true;
}

Vec negate(Vec v) {
  for (double& x : v) x = -x;
  return v;
}

using CoxeterMatrix = std::vector<std::vector<int>>;

CoxeterMatrix chain(int r) {
  CoxeterMatrix c(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 2));
  for (int i = 0; i < r; ++i) c[i][i] = 1;
  for (int i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = 3;
  return c;
}

void set_edge(CoxeterMatrix& c, int i, int j, int m) { c[i][j] = c[j][i] = m; }

// Rows of the Cholesky factor of the Gram matrix -cos(pi / m_ij).
std::vector<Vec> simple_roots_from(const CoxeterMatrix& c) {
  const std::size_t r = c.size();
  std::vector<Vec> l(r, Vec(r, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double g = i == j ? 1.0 : -std::cos(M_PI / c[i][j]);
      for (std::size_t k = 0; k < j; ++k) g -= l[i][k] * l[j][k];
      if (i == j) {
        if (g <= 0) throw std::logic_error("build_root_system: Gram matrix not positive definite");
        l[i][i] = std::sqrt(g);
      } else {
        l[i][j] = g / l[j][j];
      }
    }
  }
  return l;
}

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

std::size_t find_line(const std::vector<Vec>& roots, const Vec& v, int& sign) {
  const Vec nv = negate(v);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (same(roots[i], v)) {
      sign = 1;
      return i;
    }
    if (same(roots[i], nv)) {
      sign = -1;
      return i;
    }
  }
  return roots.size();
}

std::size_t find_root_index(const HyperplaneSet& hs, std::size_t root) {
  const auto it = std::lower_bound(hs.begin(), hs.end(), root);
  if (it == hs.end() || *it != root) return hs.size();
  return static_cast<std::size_t>(it - hs.begin());
}

int max_denominator(const RootSystem& rs) { return std::max(2 * rs.coxeter_number, 12); }

Polynomial scaled_charpoly(const ExactMatrix& a) {
  Integer num = 0, den = 1;
  for (const auto& x : a.data()) {
    if (sgn(x) == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (num == 0) return charpoly(a);
  const Rational g(num, den);
  ExactMatrix k = a;
  for (auto& x : k.data()) x /= g;
  const auto p = charpoly(k);
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Rational gp = 1;
  for (int i = n; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = p.coeff(i) * gp;
    gp *= g;
  }
  return Polynomial(std::move(c));
}

}  // namespace

Vec reflect(const Vec& v, const Vec& alpha) {
  const double t = 2 * dot(v, alpha) / dot(alpha, alpha);
  Vec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= t * alpha[i];
  return out;
}

RootSystem build_root_system(const std::string& label) {
  static const std::regex plain("([ABDEFH])([0-9]+)");
  static const std::regex dihedral("I2\\(([0-9]+)\\)");
  std::smatch mt;
  RootSystem rs;
  rs.label = label;
  CoxeterMatrix c;
  auto unsupported = [&] { return std::invalid_argument("build_root_system: unsupported type " + label); };
  if (std::regex_match(label, mt, dihedral)) {
    rs.family = 'I';
    rs.m = std::stoi(mt[1]);
    if (rs.m < 3 || rs.m > 60) throw unsupported();
    rs.rank = 2;
    c = chain(2);
    set_edge(c, 0, 1, rs.m);
    rs.order = 2 * static_cast<std::uint64_t>(rs.m);
    rs.coxeter_number = rs.m;
  } else if (std::regex_match(label, mt, plain)) {
    rs.family = mt[1].str()[0];
    const int r = std::stoi(mt[2]);
    rs.rank = r;
    c = chain(r);
    switch (rs.family) {
      case 'A':
        if (r < 1 || r > 8) throw unsupported();
        rs.order = factorial(r + 1);
        rs.coxeter_number = r + 1;
        break;
      case 'B':
        if (r < 2 || r > 8) throw unsupported();
        set_edge(c, r - 2, r - 1, 4);
        rs.order = pow2(r) * factorial(r);
        rs.coxeter_number = 2 * r;
        break;
      case 'D':
        if (r < 4 || r > 8) throw unsupported();
        set_edge(c, r - 2, r - 1, 2);
        set_edge(c, r - 3, r - 1, 3);
        rs.order = pow2(r - 1) * factorial(r);
        rs.coxeter_number = 2 * r - 2;
        break;
      case 'E': {
        if (r < 6 || r > 8) throw unsupported();
        c = CoxeterMatrix(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 2));
        for (int i = 0; i < r; ++i) c[i][i] = 1;
        set_edge(c, 0, 2, 3);
        set_edge(c, 1, 3, 3);
        for (int i = 2; i + 1 < r; ++i) set_edge(c, i, i + 1, 3);
        static const std::uint64_t orders[] = {51840, 2903040, 696729600};
        static const int h[] = {12, 18, 30};
        rs.order = orders[r - 6];
        rs.coxeter_number = h[r - 6];
        break;
      }
      case 'F':
        if (r != 4) throw unsupported();
        set_edge(c, 1, 2, 4);
        rs.order = 1152;
        rs.coxeter_number = 12;
        break;
      case 'H':
        if (r != 3 && r != 4) throw unsupported();
        set_edge(c, 0, 1, 5);
        rs.order = r == 3 ? 120 : 14400;
        rs.coxeter_number = r == 3 ? 10 : 30;
        break;
      default:
        throw unsupported();
    }
  } else {
    throw unsupported();
  }
  rs.simple_roots = simple_roots_from(c);

  std::vector<Vec> roots;
  for (const auto& a : rs.simple_roots) {
    roots.push_back(a);
    roots.push_back(negate(a));
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (const auto& s : rs.simple_roots) {
      Vec v = reflect(roots[i], s);
      if (std::none_of(roots.begin(), roots.end(), [&](const Vec& x) { return same(x, v); })) roots.push_back(std::move(v));
    }

  // positive means <x0, alpha> > 0 with <x0, alpha_i> = 1 on simple roots
  const std::size_t r = rs.simple_roots.size();
  Vec x0(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    double s = 1;
    for (std::size_t k = 0; k < i; ++k) s -= rs.simple_roots[i][k] * x0[k];
    x0[i] = s / rs.simple_roots[i][i];
  }
  rs.positive_roots = rs.simple_roots;
  for (const auto& v : roots) {
    if (dot(v, x0) <= 0) continue;
    if (std::none_of(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Vec& x) { return same(x, v); }))
      rs.positive_roots.push_back(v);
  }
  return rs;
}

bool is_crystallographic(const RootSystem& rs) {
  if (rs.family == 'I') return rs.m == 3 || rs.m == 4 || rs.m == 6;
  return rs.family != 'H';
}

bool is_simply_laced(const RootSystem& rs) {
  return rs.family == 'A' || rs.family == 'D' || rs.family == 'E' || (rs.family == 'I' && rs.m == 3);
}

std::pair<std::size_t, int> root_line(const RootSystem& rs, const Vec& v) {
  int sign = 0;
  const auto i = find_line(rs.positive_roots, v, sign);
  if (i == rs.positive_roots.size()) throw std::logic_error("root_line: not a root");
  return {i, sign};
}

std::vector<HyperplaneSet> hyperplane_orbits(const RootSystem& rs) {
  const std::size_t n = rs.positive_roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& s : rs.simple_roots) {
      const auto b = root_line(rs, reflect(rs.positive_roots[a], s)).first;
      parent[find(a)] = find(b);
    }
  std::map<std::size_t, HyperplaneSet> groups;
  for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(a);
  std::vector<HyperplaneSet> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const HyperplaneSet& x, const HyperplaneSet& y) { return x.front() < y.front(); });
  return out;
}

HyperplaneSet select_hyperplanes(const RootSystem& rs, const std::string& selector) {
  const auto orbits = hyperplane_orbits(rs);
  if (selector == "all") {
    HyperplaneSet all(rs.positive_roots.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::size_t pick = 0;
  if (selector.empty() || selector == "long" || selector == "1") {
    pick = 0;
  } else if (selector == "short" || selector == "2") {
    pick = 1;
  } else if (selector == "transposition" && rs.family == 'B') {
    pick = 0;
  } else if (selector == "sign-change" && rs.family == 'B') {
    pick = 1;
  } else {
    throw std::invalid_argument("select_hyperplanes: unknown orbit selector " + selector);
  }
  if (pick >= orbits.size()) throw std::invalid_argument("select_hyperplanes: " + rs.label + " has one orbit");
  return orbits[pick];
}

Rational snapped_angle(const Vec& a, const Vec& b, int max_den) {
  const double c = std::clamp(dot(a, b) / std::sqrt(dot(a, a) * dot(b, b)), -1.0, 1.0);
  const double phi = std::acos(c) / M_PI;
  for (int q = 1; q <= max_den; ++q) {
    const double p = std::round(phi * q);
    // compare cosines to stay accurate near 0 and pi
    if (std::abs(std::cos(M_PI * p / q) - c) < kTol) return Rational(static_cast<long>(p), q);
  }
  throw std::logic_error("snapped_angle: angle does not snap to a rational multiple of pi");
}

ExactMatrix mu_minus_matrix(const RootSystem& rs, const HyperplaneSet& hs) {
  if (hs.empty()) throw std::invalid_argument("mu_minus_matrix: empty hyperplane set");
  const int den = max_denominator(rs);
  const Rational half_order = Rational(static_cast<long>(rs.order)) / 2;
  ExactMatrix m(hs.size(), hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i; j < hs.size(); ++j) {
      const auto phi = snapped_angle(rs.positive_roots[hs[i]], rs.positive_roots[hs[j]], den);
      Rational e = half_order * (1 - 2 * phi);
      e.canonicalize();
      m(i, j) = m(j, i) = e;
    }
  return m;
}

RankOneResult rank_one_charpoly(const RootSystem& rs, const HyperplaneSet& hs) {
  const auto m = mu_minus_matrix(rs, hs);
  RankOneResult r;
  r.label = rs.label;
  r.orbit_size = hs.size();
  r.symmetric = m.is_symmetric();
  r.trace = trace(m);
  r.trace_ok = r.trace == Rational(static_cast<long>(rs.order)) * static_cast<long>(hs.size()) / 2;
  r.charpoly = scaled_charpoly(m);
  r.factors = factor_rational_roots(r.charpoly);
  return r;
}

WeylReport weyl_closed_forms(const RootSystem& rs, const HyperplaneSet& hs) {
  WeylReport w;
  w.applicable = is_crystallographic(rs);
  if (!w.applicable) return w;
  const int den = max_denominator(rs);
  for (std::size_t i = 0; i < hs.size() && !w.pi_over_3; ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const auto phi = snapped_angle(rs.positive_roots[hs[i]], rs.positive_roots[hs[j]], den);
      if (phi == Rational(1, 3) || phi == Rational(2, 3)) {
        w.pi_over_3 = true;
        break;
      }
    }
  const Rational order(static_cast<long>(rs.order));
  const long o = static_cast<long>(hs.size());
  const long l = rs.rank;
  if (w.pi_over_3) {
    w.predicted.emplace_back(Rational((2 * o + l) * order / (6 * l)), static_cast<int>(l));
    if (o > l) w.predicted.emplace_back(Rational(order / 6), static_cast<int>(o - l));
  } else {
    w.predicted.emplace_back(Rational(order * o / (2 * l)), static_cast<int>(l));
  }
  for (auto& [x, mult] : w.predicted) x.canonicalize();
  std::sort(w.predicted.begin(), w.predicted.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  const auto r = rank_one_charpoly(rs, hs);
  if (r.factors.fully_rational()) w.computed = r.factors.roots;
  if (is_simply_laced(rs)) {
    w.coxeter_form = Rational((rs.coxeter_number + 1) * order / 6);
    w.coxeter_form_ok = !w.predicted.empty() && w.predicted.front().first == w.coxeter_form;
  }
  w.ok = w.computed == w.predicted && w.coxeter_form_ok;
  return w;
}

TripleSpanReport triple_span_check(const RootSystem& rs, const HyperplaneSet& hs) {
  TripleSpanReport t;
  const auto m = mu_minus_matrix(rs, hs);
  const Rational eig = Rational(static_cast<long>(rs.order)) / 6;
  std::vector<Vec> phi;
  for (auto a : hs) {
    phi.push_back(rs.positive_roots[a]);
    phi.push_back(negate(rs.positive_roots[a]));
  }
  std::set<std::vector<std::pair<std::size_t, int>>> seen;
  std::vector<std::vector<Rational>> psis;
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = i + 1; j < phi.size(); ++j) {
      Vec c(phi[i].size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = -phi[i][k] - phi[j][k];
      if (std::abs(dot(c, c) - 1) > 1e-8) continue;
      int sign = 0;
      const auto line = find_line(rs.positive_roots, c, sign);
      if (line == rs.positive_roots.size() || find_root_index(hs, line) == hs.size()) continue;
      std::vector<std::pair<std::size_t, int>> key;
      for (const auto& v : {phi[i], phi[j], c}) {
        const auto [idx, s] = root_line(rs, v);
        key.emplace_back(find_root_index(hs, idx), s);
      }
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      std::vector<Rational> psi(hs.size(), Rational(0));
      for (const auto& [idx, s] : key) psi[idx] += s;
      psis.push_back(std::move(psi));
    }
  t.triples = psis.size();
  t.eigenvectors = true;
  for (const auto& psi : psis)
    for (std::size_t r = 0; r < hs.size() && t.eigenvectors; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < hs.size(); ++c) s += m(r, c) * psi[c];
      if (s != eig * psi[r]) t.eigenvectors = false;
    }
  if (!psis.empty()) {
    ExactMatrix span(psis.size(), hs.size());
    for (std::size_t r = 0; r < psis.size(); ++r)
      for (std::size_t c = 0; c < hs.size(); ++c) span(r, c) = psis[r][c];
    t.span_rank = rank(span);
  }
  t.expected_rank = t.triples == 0 ? 0 : hs.size() - static_cast<std::size_t>(rs.rank);
  t.ok = t.eigenvectors && t.span_rank == t.expected_rank;
  return t;
}

std::vector<std::vector<char>> chamber_sides(const RootSystem& rs) {
  if (rs.order > 60000) throw std::invalid_argument("chamber_sides: group too large");
  const std::size_t r = rs.simple_roots.size();
  Vec x0(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    double s = 1;
    for (std::size_t k = 0; k < i; ++k) s -= rs.simple_roots[i][k] * x0[k];
    x0[i] = s / rs.simple_roots[i][i];
  }
  auto signs = [&](const Vec& p) {
    std::vector<char> s(rs.positive_roots.size());
    for (std::size_t a = 0; a < s.size(); ++a) s[a] = dot(p, rs.positive_roots[a]) > 0 ? 1 : 0;
    return s;
  };
  std::vector<std::vector<char>> out;
  std::vector<Vec> points;
  std::map<std::vector<char>, std::size_t> index;
  out.push_back(signs(x0));
  points.push_back(x0);
  index[out.back()] = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& s : rs.simple_roots) {
      Vec p = reflect(points[i], s);
      auto key = signs(p);
      if (index.count(key)) continue;
      index[key] = out.size();
      out.push_back(std::move(key));
      points.push_back(std::move(p));
    }
  if (out.size() != rs.order) throw std::logic_error("chamber_sides: chamber count differs from |W|");
  return out;
}

IntMatrix arrangement_pi_matrix(const RootSystem& rs, const HyperplaneSet& hs) {
  const auto sides = chamber_sides(rs);
  IntMatrix p(2 * hs.size(), sides.size());
  for (std::size_t c = 0; c < sides.size(); ++c)
    for (std::size_t t = 0; t < hs.size(); ++t) p(2 * t + (sides[c][hs[t]] ? 0 : 1), c) = 1;
  return p;
}

IntMatrix arrangement_nu_matrix(const RootSystem& rs, const HyperplaneSet& hs) {
  const auto sides = chamber_sides(rs);
  IntMatrix nu(sides.size(), sides.size());
  for (std::size_t a = 0; a < sides.size(); ++a)
    for (std::size_t b = 0; b < sides.size(); ++b)
      for (auto h : hs) nu(a, b) += sides[a][h] == sides[b][h] ? 1 : 0;
  return nu;
}

namespace {

// Commutant of the signed permutation action on e_a - e_{-a}, a in the orbit.
ExactMatrix signed_action(const RootSystem& rs, const HyperplaneSet& hs, const Vec& s) {
  ExactMatrix p(hs.size(), hs.size());
  for (std::size_t a = 0; a < hs.size(); ++a) {
    const auto [idx, sign] = root_line(rs, reflect(rs.positive_roots[hs[a]], s));
    p(find_root_index(hs, idx), a) = sign;
  }
  return p;
}

void commutant(const RootSystem& rs, const HyperplaneSet& hs, OrbitGelfand& g) {
  const std::size_t k = hs.size();
  std::vector<ExactMatrix> gens;
  for (const auto& s : rs.simple_roots) gens.push_back(signed_action(rs, hs, s));
  ExactMatrix eq(gens.size() * k * k, k * k);
  std::size_t row = 0;
  for (const auto& p : gens)
    for (std::size_t u = 0; u < k; ++u)
      for (std::size_t v = 0; v < k; ++v, ++row)
        for (std::size_t w = 0; w < k; ++w) {
          // (X P)_{uv} - (P X)_{uv}
          eq(row, u * k + w) += p(w, v);
          eq(row, w * k + v) -= p(u, w);
        }
  const auto basis = kernel_basis(eq);
  g.commutant_dim = basis.cols();
  std::vector<ExactMatrix> mats;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    ExactMatrix x(k, k);
    for (std::size_t i = 0; i < k * k; ++i) x(i / k, i % k) = basis(i, b);
    mats.push_back(std::move(x));
  }
  g.commutative = true;
  for (std::size_t i = 0; i < mats.size() && g.commutative; ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commutator_is_zero(mats[i], mats[j])) {
        g.commutative = false;
        break;
      }
}

}  // namespace

GelfandPairReport gelfand_pair_check(const std::string& label) {
  const auto rs = build_root_system(label);
  GelfandPairReport rep;
  rep.label = label;
  rep.ok = true;
  for (const auto& hs : hyperplane_orbits(rs)) {
    OrbitGelfand g;
    g.orbit_size = hs.size();
    if (hs.size() > 28) throw std::invalid_argument("gelfand_pair_check: orbit too large");
    commutant(rs, hs, g);
    g.multiplicity_free = g.commutative;
    if (rs.family == 'A') {
      const int n = rs.rank + 1;
      std::vector<std::pair<Permutation, Rational>> z;
      for (const auto& w : all_permutations(n))
        if (w(1) <= 2 && w(2) <= 2) z.emplace_back(w, w(1) == 2 ? -1 : 1);
      for (const auto& [lam, mult] : isotypic_multiplicities(induced_character_exact(z, n))) {
        if (mult.get_den() != 1) throw std::logic_error("gelfand_pair_check: non-integral multiplicity");
        const auto m = mult.get_num().get_si();
        if (m != 0) g.multiplicities[lam] = m;
        if (m > 1) g.multiplicity_free = false;
      }
      std::int64_t squares = 0;
      for (const auto& [lam, m] : g.multiplicities) squares += m * m;
      if (static_cast<std::size_t>(squares) != g.commutant_dim) g.multiplicity_free = false;
    }
    rep.ok = rep.ok && g.multiplicity_free;
    rep.orbits.push_back(std::move(g));
  }
  return rep;
}

}  // namespace shuffle
