#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shuffle/linalg.hpp"

namespace shuffle {

// Univariate polynomial over Q, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial linear_root(const Rational& r);  // x - r

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  bool all_integer() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  // "x^2-248x+3856"
  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic
Polynomial pow(const Polynomial& p, int e);
Polynomial squarefree_part(const Polynomial& p);  // monic
Polynomial product_of_linear(const std::vector<std::pair<Rational, int>>& roots);

struct Factorization {
  Rational leading = 1;
  std::vector<std::pair<Rational, int>> roots;  // descending roots
  Polynomial residual;                           // monic, no rational root
  Polynomial quadratic;                          // set when residual = quadratic^power
  int quadratic_power = 0;

  bool fully_rational() const { return residual.degree() == 0; }
  int multiplicity(const Rational& r) const;
  // "(x^2-248x+3856)^3 (x-24)^4 (x-12)^5", zero root as "x^m"
  std::string str(char var = 'x') const;
};

Factorization factor_rational_roots(const Polynomial& p);

// Hessenberg reduction over Q followed by the Hessenberg recurrence.
Polynomial charpoly(const ExactMatrix& a);
// Fraction-free determinants det(tI - A) at t = 0..N, then interpolation.
Polynomial charpoly_interpolation(const ExactMatrix& a);

Polynomial evaluate_interpolation(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// P = prod_{mu != lambda0} (A - mu I)/(lambda0 - mu) over the distinct eigenvalues.
ExactMatrix eigenprojector(const ExactMatrix& a, const std::vector<Rational>& distinct_eigenvalues,
                           const Rational& lambda0);
// Computes the spectrum first; throws if it is not rational or lambda0 is not an eigenvalue.
ExactMatrix eigenprojector(const ExactMatrix& a, const Rational& lambda0);

// Minimal polynomial of a, from the first linear dependency among powers applied to v
// (equals the minimal polynomial of a when v generates, e.g. the identity of a
// regular representation).
Polynomial krylov_minimal_polynomial(const ExactMatrix& a, const std::vector<Rational>& v);
Polynomial minimal_polynomial(const ExactMatrix& a);

}  // namespace shuffle
