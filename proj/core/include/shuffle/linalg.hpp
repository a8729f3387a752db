#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shuffle {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  T* row(std::size_t r) { return data_.data() + r * cols_; }
  const T* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using BigIntMatrix = Matrix<Integer>;

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
// Throws on int64 overflow.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

ExactMatrix to_exact(const IntMatrix& a);
ExactMatrix shifted(const ExactMatrix& a, const Rational& lambda);  // a - lambda I
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
ExactMatrix select_rows(const ExactMatrix& a, const std::vector<std::size_t>& rows);
Rational trace(const ExactMatrix& a);
std::string to_string(const ExactMatrix& a);

struct Echelon {
  ExactMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(ExactMatrix a);
std::size_t rank(const ExactMatrix& a);
// Columns form the reduced basis of ker a: free variable f has a 1 in row f
// and zeros in the other free rows.
ExactMatrix kernel_basis(const ExactMatrix& a);
// Columns form a basis of the column space, in reduced form.
ExactMatrix column_space_basis(const ExactMatrix& a);

Integer det_bareiss(BigIntMatrix a);
bool commutator_is_zero(const ExactMatrix& a, const ExactMatrix& b);
bool commutator_is_zero(const IntMatrix& a, const IntMatrix& b);

// Rank over Z/p for p < 2^31.
std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p);
// Largest rank over a few fixed 31-bit primes; equals the rational rank
// unless every prime divides a maximal nonzero minor.
std::size_t rank_modular(const IntMatrix& a);

// Double-precision eigenvalues (real parts) used only as exact-check candidates.
std::vector<double> numeric_eigenvalues(const ExactMatrix& a);
std::vector<double> numeric_eigenvalues_symmetric(const ExactMatrix& a);

}  // namespace shuffle
