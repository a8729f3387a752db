#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/operators.hpp"

namespace shuffle {

struct TableRow {
  std::vector<Rational> eigenvalues;  // one per family operator
  int w0 = 0;                         // +1 or -1; 0 when the space is not w0-stable
  std::map<NumberPartition, int> multiplicities;
  // columns: filtration index j; two-blocks: first operator index with a nonzero
  // eigenvalue, or the operator count for kernel rows
  int block = 0;
};

struct SimultaneousTable {
  int n = 0;
  Family family = Family::Columns;
  std::vector<NumberPartition> operators;
  std::vector<TableRow> rows;
  std::vector<std::string> warnings;
  bool integral = true;   // every eigenvalue is an integer
  bool w0_stable = true;  // every joint eigenspace is w0-stable
  bool commuting = true;  // the family commutes in every block
};

struct TableOptions {
  int threads = 1;
};

// Joint eigenspaces of the family together with the w0 action, computed block
// by block on the seminormal Fourier transform. n <= 9.
SimultaneousTable simultaneous_tables(int n, Family family, const TableOptions& opts = {});

// Rows with at least one nonzero eigenvalue.
std::vector<TableRow> nonzero_rows(const SimultaneousTable& t);

std::string rational_str(const Rational& q);
std::string multiplicities_str(const std::map<NumberPartition, int>& m);
std::string to_tsv(const SimultaneousTable& t);
std::string to_json(const SimultaneousTable& t);
// Zero eigenvalues as a centered dot.
std::string to_markdown(const SimultaneousTable& t);

struct FiltrationLevel {
  int j = 0;
  std::int64_t kernel_dim = 0;  // of the operator that cuts this level
  std::int64_t factor_dim = 0;
  std::int64_t expected_dim = 0;
  std::int64_t plus_dim = 0, minus_dim = 0;
  std::int64_t expected_plus = 0, expected_minus = 0;
  std::vector<std::pair<NumberPartition, int>> computed;   // (lambda, w0 sign) with multiplicity
  std::vector<std::pair<NumberPartition, int>> predicted;  // tableaux model (columns family)
};

struct FiltrationReport {
  int n = 0;
  Family family = Family::Columns;
  std::vector<FiltrationLevel> levels;
  bool nested = false;
  bool dims_ok = false;
  bool z2_ok = false;
  bool tableaux_ok = false;
  bool full_matrix_checked = false;  // kernel dims also confirmed on n! x n! matrices
  bool ok() const { return nested && dims_ok && z2_ok && tableaux_ok; }
};

// Columns: F_j = ker nu_(n-j-1,1^(j+1)) / ker nu_(n-j,1^j) with dims C(n,j) d_(n-j).
// Two-blocks: level a is the new non-kernel content of nu_(2^a,1^(n-2a)).
FiltrationReport kernel_filtration(int n, Family family, int full_matrix_limit = 5);

struct GelfandModelReport {
  int n = 0;
  bool ok = false;
  std::vector<std::string> details;
};
// New non-kernel content of nu_(2^a,1^(n-2a)) is {lambda : oddcols(lambda) = n - 2a}, each once.
GelfandModelReport gelfand_model_check(int n);

struct FormulaCell {
  std::string what;
  std::string expected;
  std::string computed;
  bool match = false;
};
struct FormulaReport {
  int n = 0;
  std::vector<FormulaCell> cells;
  bool all_match() const;
};
// Conjectured eigenvalues of nu_(1^n), nu_(2,1^(n-2)), nu_(3,1^(n-3)) and of the
// whole column family on the (n-1,1)-isotypic component.
FormulaReport conjecture_eigenvalue_formulas(int n);

}  // namespace shuffle
