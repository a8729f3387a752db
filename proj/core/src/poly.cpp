#include "shuffle/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

namespace shuffle {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

bool Polynomial::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

std::string Polynomial::str(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    const Rational a = abs(c);
    if (sgn(c) < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (d == 0 || a != 1) s += a.get_str();
    if (d >= 1) s += var;
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1, Rational(0));
  const Rational inv = 1 / b.leading();
  for (int k = dq; k >= 0; --k) {
    const Rational c = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

namespace {
// Scales to a primitive integer polynomial with positive leading coefficient.
Polynomial primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (sgn(p.leading()) < 0) s = -s;
  return p * s;
}
}  // namespace

Polynomial gcd(Polynomial a, Polynomial b) {
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial product_of_linear(const std::vector<std::pair<Rational, int>>& roots) {
  Polynomial r = Polynomial::constant(1);
  for (const auto& [x, m] : roots) r = r * pow(Polynomial::linear_root(x), m);
  return r;
}

int Factorization::multiplicity(const Rational& r) const {
  for (const auto& [x, m] : roots)
    if (x == r) return m;
  return 0;
}

std::string Factorization::str(char var) const {
  std::vector<std::string> parts;
  if (leading != 1) parts.push_back(leading.get_str());
  auto power = [](const std::string& base, int m) { return m == 1 ? base : base + "^" + std::to_string(m); };
  if (quadratic_power > 0) {
    parts.push_back(power("(" + quadratic.str(var) + ")", quadratic_power));
  } else if (residual.degree() > 0) {
    parts.push_back("(" + residual.str(var) + ")");
  }
  for (const auto& [x, m] : roots) {
    if (sgn(x) == 0) {
      parts.push_back(power(std::string(1, var), m));
      continue;
    }
    parts.push_back(power("(" + Polynomial::linear_root(x).str(var) + ")", m));
  }
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  return s.empty() ? "1" : s;
}

namespace {

std::vector<double> numeric_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  if (d == 1) return {Rational(-p.coeff(0) / p.coeff(1)).get_d()};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const Rational lead = p.leading();
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -Rational(p.coeff(i) / lead).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<double> out;
  for (long i = 0; i < d; ++i) {
    const auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) <= 1e-6 * std::max(1.0, std::abs(z.real()))) out.push_back(z.real());
  }
  return out;
}

std::vector<Integer> small_divisors(const Integer& v, long limit) {
  std::vector<Integer> out;
  Integer a = abs(v);
  if (a == 0 || a > limit) return out;
  const long n = a.get_si();
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.emplace_back(d);
      if (d != n / d) out.emplace_back(n / d);
    }
  return out;
}

// exact division by (x - r); returns false if r is not a root
bool divide_root(Polynomial& p, const Rational& r) {
  if (p(r) != 0) return false;
  p = divmod(p, Polynomial::linear_root(r)).first;
  return true;
}

}  // namespace

Factorization factor_rational_roots(const Polynomial& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("factor_rational_roots: zero polynomial");
  Factorization f;
  f.leading = p_in.leading();
  Polynomial p = p_in.monic();

  int zero_mult = 0;
  while (p.degree() > 0 && sgn(p.coeff(0)) == 0) {
    p = divmod(p, Polynomial::monomial(1, 1)).first;
    ++zero_mult;
  }

  const Polynomial sqf = primitive(squarefree_part(p));
  std::set<Rational> candidates;
  const Integer lead = sqf.leading().get_num();
  const Integer tail = sqf.coeff(0).get_num();
  auto lead_divs = small_divisors(lead, 1000000);
  if (lead_divs.empty()) lead_divs.emplace_back(1);
  for (double x : numeric_roots(sqf)) {
    for (const auto& q : lead_divs) {
      const double scaled = x * q.get_d();
      if (!std::isfinite(scaled)) continue;
      Integer num;
      mpz_set_d(num.get_mpz_t(), std::nearbyint(scaled));
      Rational c(num, q);
      c.canonicalize();
      candidates.insert(c);
    }
  }
  for (const auto& a : small_divisors(tail, 1000000))
    for (const auto& q : small_divisors(lead, 10000)) {
      Rational c(a, q);
      c.canonicalize();
      candidates.insert(c);
      candidates.insert(-c);
    }

  std::vector<std::pair<Rational, int>> found;
  for (const auto& c : candidates) {
    if (sgn(c) == 0 || sqf(c) != 0) continue;
    int m = 0;
    while (p.degree() > 0 && divide_root(p, c)) ++m;
    if (m > 0) found.emplace_back(c, m);
  }
  if (zero_mult > 0) found.emplace_back(Rational(0), zero_mult);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  f.roots = found;
  f.residual = p.monic();

  if (f.residual.degree() >= 2) {
    const Polynomial q = squarefree_part(f.residual);
    if (q.degree() == 2 && f.residual.degree() % 2 == 0) {
      const int m = f.residual.degree() / 2;
      if (pow(q, m) == f.residual) {
        f.quadratic = q;
        f.quadratic_power = m;
      }
    }
  }
  return f;
}

Polynomial charpoly(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("charpoly: not square");
  const std::size_t n = a.rows();
  ExactMatrix h = a;
  Rational u, t;
  // similarity reduction to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && sgn(h(piv, m - 1)) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      if (sgn(h(i, m - 1)) == 0) continue;
      u = h(i, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(h(m, j)) == 0) continue;
        mpq_mul(t.get_mpq_t(), u.get_mpq_t(), h(m, j).get_mpq_t());
        mpq_sub(h(i, j).get_mpq_t(), h(i, j).get_mpq_t(), t.get_mpq_t());
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (sgn(h(r, i)) == 0) continue;
        mpq_mul(t.get_mpq_t(), u.get_mpq_t(), h(r, i).get_mpq_t());
        mpq_add(h(r, m).get_mpq_t(), h(r, m).get_mpq_t(), t.get_mpq_t());
      }
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> ps{Polynomial::constant(1)};
  for (std::size_t m = 0; m < n; ++m) {
    Polynomial pm = Polynomial({-h(m, m), Rational(1)}) * ps[m];
    Rational prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod *= h(i + 1, i);
      if (sgn(prod) == 0) break;
      if (sgn(h(i, m)) == 0) continue;
      pm = pm - ps[i] * (h(i, m) * prod);
    }
    ps.push_back(std::move(pm));
  }
  return ps.back();
}

Polynomial evaluate_interpolation(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences
  const std::size_t n = xs.size();
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  Polynomial p;
  for (std::size_t i = n; i-- > 0;) p = p * Polynomial::linear_root(xs[i]) + Polynomial::constant(c[i]);
  return p;
}

Polynomial charpoly_interpolation(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("charpoly: not square");
  const std::size_t n = a.rows();
  Integer d = 1;
  for (const auto& x : a.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  BigIntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j).get_num() * (d / a(i, j).get_den());
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    BigIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Integer(static_cast<long>(t)) : Integer(0)) - b(i, j);
    xs.emplace_back(static_cast<long>(t));
    ys.emplace_back(det_bareiss(std::move(m)));
  }
  const Polynomial pb = evaluate_interpolation(xs, ys);
  // det(tI - B/d) = d^{-n} det(d t I - B)
  std::vector<Rational> c(n + 1);
  Rational scale = 1;
  for (std::size_t k = 0; k < n; ++k) scale /= d;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = pb.coeff(static_cast<int>(k)) * scale;
    scale *= d;
  }
  return Polynomial(std::move(c));
}

ExactMatrix eigenprojector(const ExactMatrix& a, const std::vector<Rational>& distinct_eigenvalues,
                           const Rational& lambda0) {
  if (std::find(distinct_eigenvalues.begin(), distinct_eigenvalues.end(), lambda0) == distinct_eigenvalues.end())
    throw std::invalid_argument("eigenprojector: lambda0 is not an eigenvalue");
  ExactMatrix p = ExactMatrix::identity(a.rows());
  for (const auto& mu : distinct_eigenvalues) {
    if (mu == lambda0) continue;
    p = (1 / (lambda0 - mu)) * (shifted(a, mu) * p);
  }
  return p;
}

ExactMatrix eigenprojector(const ExactMatrix& a, const Rational& lambda0) {
  const auto f = factor_rational_roots(charpoly(a));
  if (!f.fully_rational()) throw std::invalid_argument("eigenprojector: spectrum is not rational");
  std::vector<Rational> ev;
  for (const auto& [x, m] : f.roots) ev.push_back(x);
  const auto p = eigenprojector(a, ev, lambda0);
  if (!(a * p == lambda0 * p) || !(p * p == p))
    throw std::invalid_argument("eigenprojector: minimal polynomial has a repeated root");
  return p;
}

Polynomial krylov_minimal_polynomial(const ExactMatrix& a, const std::vector<Rational>& v) {
  const std::size_t n = a.rows();
  if (!a.square() || v.size() != n) throw std::invalid_argument("krylov_minimal_polynomial: size mismatch");
  std::vector<std::vector<Rational>> rows;   // reduced Krylov vectors
  std::vector<std::vector<Rational>> combos; // their coordinates in powers
  std::vector<std::size_t> pivots;
  std::vector<Rational> w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> cw(k + 1, Rational(0));
    cw[k] = 1;
    std::vector<Rational> r = w;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (sgn(r[pivots[i]]) == 0) continue;
      const Rational f = r[pivots[i]] / rows[i][pivots[i]];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(rows[i][j]) != 0) r[j] -= f * rows[i][j];
      for (std::size_t j = 0; j < combos[i].size(); ++j) cw[j] -= f * combos[i][j];
    }
    std::size_t piv = 0;
    while (piv < n && sgn(r[piv]) == 0) ++piv;
    if (piv == n) return Polynomial(cw).monic();
    rows.push_back(std::move(r));
    combos.push_back(std::move(cw));
    pivots.push_back(piv);
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(a(i, j)) != 0 && sgn(w[j]) != 0) next[i] += a(i, j) * w[j];
    w = std::move(next);
  }
  throw std::logic_error("krylov_minimal_polynomial: no dependency found");
}

Polynomial minimal_polynomial(const ExactMatrix& a) {
  Polynomial m = Polynomial::constant(1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rational> e(a.rows(), Rational(0));
    e[i] = 1;
    const Polynomial p = krylov_minimal_polynomial(a, e);
    m = divmod(m * p, gcd(m, p)).first.monic();
  }
  return m;
}

}  // namespace shuffle
