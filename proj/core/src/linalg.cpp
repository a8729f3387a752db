#include "shuffle/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

namespace shuffle {

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}
}  // namespace

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Rational* ar = a.row(i);
    Rational* cr = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(ar[k]) == 0) continue;
      const Rational* br = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(br[j]) == 0) continue;
        mpq_mul(t.get_mpq_t(), ar[k].get_mpq_t(), br[j].get_mpq_t());
        mpq_add(cr[j].get_mpq_t(), cr[j].get_mpq_t(), t.get_mpq_t());
      }
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
  ExactMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  std::vector<__int128> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::int64_t* ar = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ar[k] == 0) continue;
      const std::int64_t* br = b.row(k);
      const __int128 x = ar[k];
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += x * br[j];
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (acc[j] > INT64_MAX || acc[j] < INT64_MIN) throw std::overflow_error("integer matrix product overflow");
      c(i, j) = static_cast<std::int64_t>(acc[j]);
    }
  }
  return c;
}

ExactMatrix to_exact(const IntMatrix& a) {
  ExactMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) m.data()[i] = static_cast<long>(a.data()[i]);
  return m;
}

ExactMatrix shifted(const ExactMatrix& a, const Rational& lambda) {
  if (!a.square()) throw std::invalid_argument("shifted: not square");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c(i, i) -= lambda;
  return c;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  ExactMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(r, a.cols() + j) = b(r, j);
  }
  return c;
}

namespace {
template <class T>
Matrix<T> vstack_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), c.data().begin());
  std::copy(b.data().begin(), b.data().end(), c.data().begin() + static_cast<long>(a.data().size()));
  return c;
}
}  // namespace

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) { return vstack_impl(a, b); }
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) { return vstack_impl(a, b); }

ExactMatrix select_rows(const ExactMatrix& a, const std::vector<std::size_t>& rows) {
  ExactMatrix c(rows.size(), a.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(rows[r], j);
  return c;
}

Rational trace(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace: not square");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

std::string to_string(const ExactMatrix& a) {
  std::ostringstream os;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a(r, c);
    os << '\n';
  }
  return os.str();
}

Echelon rref(ExactMatrix a) {
  Echelon e;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  Rational f, t;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a(p, c)) == 0) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < n; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < n; ++j) {
        if (sgn(a(r, j)) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a(r, j).get_mpq_t());
        mpq_sub(a(i, j).get_mpq_t(), a(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const ExactMatrix& a) {
  // forward elimination only
  ExactMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational f, t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
        mpq_sub(m(i, j).get_mpq_t(), m(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
    ++r;
  }
  return r;
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
  const auto e = rref(a);
  const std::size_t n = a.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  ExactMatrix k(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

ExactMatrix column_space_basis(const ExactMatrix& a) {
  const auto e = rref(a.transpose());
  ExactMatrix b(a.rows(), e.pivots.size());
  for (std::size_t j = 0; j < e.pivots.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = e.reduced(j, i);
  return b;
}

Integer det_bareiss(BigIntMatrix a) {
  if (!a.square()) throw std::invalid_argument("det_bareiss: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool commutator_is_zero(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.square() || a.rows() != b.rows() || !b.square()) throw std::invalid_argument("commutator: size mismatch");
  return a * b == b * a;
}

bool commutator_is_zero(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || a.rows() != b.rows() || !b.square()) throw std::invalid_argument("commutator: size mismatch");
  return a * b == b * a;
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::uint64_t> m(rows * cols);
  const auto P = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint64_t>(((a.data()[i] % P) + P) % P);
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const std::uint64_t iv = inv(m[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * iv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = (m[i * cols + j] + (p - f) * m[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_modular(const IntMatrix& a) {
  std::size_t best = 0;
  for (std::uint32_t p : {2147483647u, 2147483629u, 2147483587u}) best = std::max(best, rank_mod_p(a, p));
  return best;
}

namespace {
Eigen::MatrixXd to_double(const ExactMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<long>(i), static_cast<long>(j)) = a(i, j).get_d();
  return m;
}
}  // namespace

std::vector<double> numeric_eigenvalues(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("numeric_eigenvalues: not square");
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_double(a), false);
  std::vector<double> out;
  for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> numeric_eigenvalues_symmetric(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("numeric_eigenvalues: not square");
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_double(a), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace shuffle
