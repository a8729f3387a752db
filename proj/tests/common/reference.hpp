#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shuffle/tables.hpp"

namespace shuffle::reference {

struct Row {
  std::vector<Rational> eigenvalues;
  int w0 = 0;
  std::map<NumberPartition, int> multiplicities;
  bool operator==(const Row&) const = default;
  bool operator<(const Row& o) const {
    if (eigenvalues != o.eigenvalues) return eigenvalues < o.eigenvalues;
    if (w0 != o.w0) return w0 < o.w0;
    return multiplicities < o.multiplicities;
  }
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

inline std::vector<Rational> parse_eigenvalues(const std::string& s) {
  std::vector<Rational> v;
  for (const auto& x : split(s, ',')) v.emplace_back(x);
  return v;
}

inline std::string data_path(const std::string& dir, const std::string& name) { return dir + "/" + name; }

// Lines "eigenvalues<TAB>w0<TAB>lambda:mult,...". The printed tables for n >= 6
// show the nu_(1^n) eigenvalue multiplied by n; first_column_divisor undoes that.
inline std::vector<Row> load_columns(const std::string& path, int first_column_divisor) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Row> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '\t');
    Row r;
    r.eigenvalues = parse_eigenvalues(f.at(0));
    r.eigenvalues.at(0) /= first_column_divisor;
    r.w0 = std::stoi(f.at(1));
    for (const auto& m : split(f.at(2), ',')) {
      const auto kv = split(m, ':');
      r.multiplicities[NumberPartition::parse(kv.at(0))] = std::stoi(kv.at(1));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// Lines "lambda<TAB>eigenvalues<TAB>w0", one non-kernel line per irreducible.
inline std::vector<Row> load_two_blocks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Row> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '\t');
    Row r;
    r.multiplicities[NumberPartition::parse(f.at(0))] = 1;
    r.eigenvalues = parse_eigenvalues(f.at(1));
    r.w0 = std::stoi(f.at(2));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<Row> columns_rows(const SimultaneousTable& t) {
  std::vector<Row> rows;
  for (const auto& r : t.rows) rows.push_back({r.eigenvalues, r.w0, r.multiplicities});
  return rows;
}

// Non-kernel rows, one per irreducible, in reference order.
inline std::vector<Row> two_block_rows(const SimultaneousTable& t) {
  std::vector<Row> rows;
  for (const auto& r : nonzero_rows(t))
    for (const auto& [lam, m] : r.multiplicities) rows.push_back({r.eigenvalues, r.w0, {{lam, m}}});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.eigenvalues != b.eigenvalues) return a.eigenvalues > b.eigenvalues;
    return a.multiplicities.begin()->first > b.multiplicities.begin()->first;
  });
  return rows;
}

}  // namespace shuffle::reference
