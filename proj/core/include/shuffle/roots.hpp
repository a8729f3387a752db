#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/linalg.hpp"
#include "shuffle/perm.hpp"
#include "shuffle/poly.hpp"

namespace shuffle {

using Vec = std::vector<double>;

struct RootSystem {
  std::string label;  // "A3", "B4", "I2(7)"
  char family = 'A';
  int rank = 0;
  int m = 0;  // dihedral parameter for I2(m)
  std::uint64_t order = 0;
  int coxeter_number = 0;
  std::vector<Vec> simple_roots;    // unit vectors
  std::vector<Vec> positive_roots;  // unit vectors, simple roots first
};

// Accepts "A1".."A8", "B2".."B8", "D4".."D8", "E6", "E7", "E8", "F4", "H3", "H4", "I2(m)".
RootSystem build_root_system(const std::string& label);
bool is_crystallographic(const RootSystem& rs);
bool is_simply_laced(const RootSystem& rs);

using HyperplaneSet = std::vector<std::size_t>;  // indices into positive_roots, ascending

// Orbits of root lines; ordered by the first simple root they contain.
std::vector<HyperplaneSet> hyperplane_orbits(const RootSystem& rs);
// "all", "long", "short", "sign-change", "transposition", or an orbit number "1", "2".
// An empty selector picks the only orbit, or the long one.
HyperplaneSet select_hyperplanes(const RootSystem& rs, const std::string& selector);

// Angle between unit vectors as a rational multiple of pi; throws if it does
// not snap within 1e-9 to a denominator at most max_den.
Rational snapped_angle(const Vec& a, const Vec& b, int max_den);
// Index of the positive root on the line of v, and the sign relating them.
std::pair<std::size_t, int> root_line(const RootSystem& rs, const Vec& v);
Vec reflect(const Vec& v, const Vec& alpha);

// mu on the minus space, basis e_a - e_{-a} for positive a in the set:
// entry |W| (1 - 2 phi / pi) / 2 with phi the angle between the roots.
ExactMatrix mu_minus_matrix(const RootSystem& rs, const HyperplaneSet& hs);

struct RankOneResult {
  std::string label;
  std::size_t orbit_size = 0;
  Polynomial charpoly;
  Factorization factors;
  Rational trace;
  bool trace_ok = false;  // trace = |W| |O| / 2
  bool symmetric = false;
};
RankOneResult rank_one_charpoly(const RootSystem& rs, const HyperplaneSet& hs);

struct WeylReport {
  bool applicable = false;  // crystallographic
  bool pi_over_3 = false;   // two hyperplanes of the orbit meet at angle pi/3
  std::vector<std::pair<Rational, int>> predicted;  // descending
  std::vector<std::pair<Rational, int>> computed;
  Rational coxeter_form;  // (h + 1) |W| / 6 when simply laced
  bool coxeter_form_ok = true;
  bool ok = false;
};
WeylReport weyl_closed_forms(const RootSystem& rs, const HyperplaneSet& hs);

struct TripleSpanReport {
  std::size_t triples = 0;
  std::size_t span_rank = 0;
  std::size_t expected_rank = 0;  // |O| - rank
  bool eigenvectors = false;      // mu psi = (|W|/6) psi for every triple
  bool ok = false;
};
TripleSpanReport triple_span_check(const RootSystem& rs, const HyperplaneSet& hs);

// Sign vectors of the chambers: entry [c][a] is 1 when positive root a is
// positive on chamber c. Chamber 0 is the fundamental chamber. |W| <= 60000.
std::vector<std::vector<char>> chamber_sides(const RootSystem& rs);
// Rows (hyperplane, side), columns chambers.
IntMatrix arrangement_pi_matrix(const RootSystem& rs, const HyperplaneSet& hs);
// pi^T pi: entry counts the hyperplanes of the set not separating the chambers.
IntMatrix arrangement_nu_matrix(const RootSystem& rs, const HyperplaneSet& hs);

struct OrbitGelfand {
  std::size_t orbit_size = 0;
  std::size_t commutant_dim = 0;  // sum of squared multiplicities
  bool commutative = false;
  std::map<NumberPartition, std::int64_t> multiplicities;  // type A only
  bool multiplicity_free = false;
};
struct GelfandPairReport {
  std::string label;
  std::vector<OrbitGelfand> orbits;
  bool ok = false;
};
// Induced sign-on-the-line character of each reflection centralizer:
// Murnaghan-Nakayama in type A, commutant of the signed monomial action otherwise.
GelfandPairReport gelfand_pair_check(const std::string& label);

}  // namespace shuffle
