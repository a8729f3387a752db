#include "shuffle/faces.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace shuffle {

Face::Face(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("Face: empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::vector<char> seen(n_ + 1, 0);
  for (const auto& b : blocks_)
    for (int x : b) {
      if (x < 1 || x > n_ || seen[x]) throw std::invalid_argument("Face: blocks must partition 1..n");
      seen[x] = 1;
    }
}

Face Face::chamber(const Permutation& w) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= w.size(); ++i) b.push_back({w(i)});
  return Face(std::move(b));
}

std::vector<int> Face::composition() const {
  std::vector<int> c;
  for (const auto& b : blocks_) c.push_back(static_cast<int>(b.size()));
  return c;
}

SetPartition Face::support() const { return SetPartition(blocks_); }

Permutation Face::as_permutation() const {
  if (!is_chamber()) throw std::logic_error("Face: not a chamber");
  std::vector<int> img;
  for (const auto& b : blocks_) img.push_back(b[0]);
  return Permutation(std::move(img));
}

Face Face::act(const Permutation& w) const {
  if (w.size() != n_) throw std::invalid_argument("Face: size mismatch");
  auto b = blocks_;
  for (auto& block : b)
    for (int& x : block) x = w(x);
  return Face(std::move(b));
}

std::string Face::str() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += '}';
  }
  return s;
}

Face face_product(const Face& x, const Face& y) {
  if (x.size() != y.size()) throw std::invalid_argument("face_product: size mismatch");
  std::vector<int> owner(static_cast<std::size_t>(y.size()) + 1);
  for (std::size_t c = 0; c < y.blocks().size(); ++c)
    for (int e : y.blocks()[c]) owner[e] = static_cast<int>(c);
  std::vector<std::vector<int>> out;
  for (const auto& b : x.blocks()) {
    std::vector<std::vector<int>> parts(y.blocks().size());
    for (int e : b) parts[owner[e]].push_back(e);
    for (auto& p : parts)
      if (!p.empty()) out.push_back(std::move(p));
  }
  return Face(std::move(out));
}

Face standard_face(const NumberPartition& lambda) { return Face(standard_set_partition(lambda).blocks()); }

namespace {

void fill_faces(const std::vector<int>& alpha, std::size_t i, std::vector<int>& rest,
                std::vector<std::vector<int>>& cur, std::vector<Face>& out) {
  if (i == alpha.size()) {
    out.emplace_back(cur);
    return;
  }
  const auto k = static_cast<std::size_t>(alpha[i]);
  const std::size_t m = rest.size();
  std::vector<char> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
  // prev_permutation walks subsets in lexicographic order of the chosen elements
  do {
    std::vector<int> block, left;
    for (std::size_t j = 0; j < m; ++j) (pick[j] ? block : left).push_back(rest[j]);
    cur.push_back(block);
    fill_faces(alpha, i + 1, left, cur, out);
    cur.pop_back();
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::vector<Face> faces_of_composition(const std::vector<int>& alpha) {
  int n = 0;
  for (int a : alpha) {
    if (a < 1) throw std::invalid_argument("faces_of_composition: parts must be positive");
    n += a;
  }
  std::vector<int> rest(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rest[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> cur;
  std::vector<Face> out;
  fill_faces(alpha, 0, rest, cur, out);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix bhr_matrix(const NumberPartition& lambda) {
  const int n = lambda.size();
  if (n > 7) throw std::invalid_argument("bhr_matrix: n exceeds the dense budget (7)");
  const auto orbit = faces_of_composition(standard_face(lambda).composition());
  const auto perms = all_permutations(n);
  IntMatrix b(perms.size(), perms.size());
  for (std::size_t c = 0; c < perms.size(); ++c) {
    const Face ch = Face::chamber(perms[c]);
    for (const auto& y : orbit) ++b(lex_rank(face_product(y, ch).as_permutation()), c);
  }
  return b;
}

BrownReport brown_min_poly(const FaceWeights& weights, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("brown_min_poly: n must be in 1..6");
  for (const auto& [alpha, p] : weights)
    if (sgn(p) < 0) throw std::invalid_argument("brown_min_poly: negative weight");
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  ExactMatrix t(m, m);
  std::vector<std::pair<Face, Rational>> faces;
  for (const auto& [alpha, p] : weights) {
    if (sgn(p) == 0) continue;
    for (auto& f : faces_of_composition(alpha)) faces.emplace_back(std::move(f), p);
  }
  for (std::size_t c = 0; c < m; ++c) {
    const Face ch = Face::chamber(perms[c]);
    for (const auto& [f, p] : faces) t(lex_rank(face_product(f, ch).as_permutation()), c) += p;
  }
  BrownReport rep;
  std::vector<Rational> e(m, Rational(0));
  e[0] = 1;
  rep.min_poly = krylov_minimal_polynomial(t, e);
  rep.squarefree = gcd(rep.min_poly, rep.min_poly.derivative()).degree() == 0;
  rep.factors = factor_rational_roots(rep.min_poly);

  for (const auto& x : all_set_partitions(n)) {
    Rational v = 0;
    for (const auto& [f, p] : faces)
      if (x.refines(f.support())) v += p;
    rep.support_values.push_back(v);
  }
  std::sort(rep.support_values.rbegin(), rep.support_values.rend());
  rep.support_values.erase(std::unique(rep.support_values.begin(), rep.support_values.end()), rep.support_values.end());
  rep.roots_in_support = rep.factors.fully_rational();
  for (const auto& [r, mult] : rep.factors.roots)
    if (std::find(rep.support_values.begin(), rep.support_values.end(), r) == rep.support_values.end())
      rep.roots_in_support = false;

  // commutes with relabeling chambers by each simple reflection
  rep.equivariant = true;
  for (int i = 1; i < n && rep.equivariant; ++i) {
    const auto s = adjacent_transposition(n, i);
    std::vector<std::size_t> move(m);
    for (std::size_t c = 0; c < m; ++c) move[c] = lex_rank(compose(s, perms[c]));
    for (std::size_t r = 0; r < m && rep.equivariant; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (t(move[r], move[c]) != t(r, c)) {
          rep.equivariant = false;
          break;
        }
  }
  return rep;
}

FaceWeights random_invariant_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 9);
  FaceWeights w;
  for (const auto& alpha : compositions_of(n)) w[alpha] = dist(rng);
  return w;
}

}  // namespace shuffle
