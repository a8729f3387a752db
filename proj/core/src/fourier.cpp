#include "shuffle/fourier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shuffle {

FourierEngine::FourierEngine(int n) : n_(n) {
  if (n < 1 || n > 10) throw std::invalid_argument("FourierEngine: n out of range");
  parts_.resize(n + 1);
  coset_.resize(n + 1);
  for (int m = 1; m <= n; ++m) {
    parts_[m] = partitions_of(m);
    for (const auto& lam : parts_[m]) reps_.emplace(lam, std::make_unique<SeminormalRep>(lam));
    if (m == 1) continue;
    const auto sub = all_permutations(m - 1);
    for (int i = 1; i <= m; ++i) {
      // c_i maps m to i and shifts i..m-1 up by one
      std::vector<int> c(m);
      for (int x = 1; x <= m; ++x) c[x - 1] = x < i ? x : (x == m ? i : x + 1);
      std::vector<std::uint32_t> table(sub.size());
      std::vector<int> img(m);
      for (std::size_t r = 0; r < sub.size(); ++r) {
        for (int x = 1; x < m; ++x) img[x - 1] = c[sub[r](x) - 1];
        img[m - 1] = c[m - 1];
        table[r] = static_cast<std::uint32_t>(lex_rank(Permutation(img)));
      }
      coset_[m].push_back(std::move(table));
    }
  }
}

const SeminormalRep& FourierEngine::rep(const NumberPartition& lambda) const {
  auto it = reps_.find(lambda);
  if (it == reps_.end()) throw std::out_of_range("FourierEngine: no representation for this shape");
  return *it->second;
}

std::vector<ExactMatrix> FourierEngine::rec(int m, const std::vector<Rational>& a,
                                            const std::vector<std::uint32_t>& idx) const {
  if (m == 1) {
    ExactMatrix b(1, 1);
    b(0, 0) = a[idx[0]];
    return {b};
  }
  const auto& lambdas = parts_[m];
  const auto& mus = parts_[m - 1];
  std::vector<ExactMatrix> out;
  for (const auto& lam : lambdas) out.emplace_back(rep(lam).dim(), rep(lam).dim());

  std::vector<std::uint32_t> sub_idx(coset_[m][0].size());
  for (int i = 1; i <= m; ++i) {
    const auto& table = coset_[m][static_cast<std::size_t>(i - 1)];
    bool nonzero = false;
    for (std::size_t r = 0; r < table.size(); ++r) {
      sub_idx[r] = idx[table[r]];
      nonzero = nonzero || sgn(a[sub_idx[r]]) != 0;
    }
    if (!nonzero) continue;
    const auto sub = rec(m - 1, a, sub_idx);
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      const auto& lam = lambdas[l];
      const SeminormalRep& r = rep(lam);
      ExactMatrix x(r.dim(), r.dim());
      std::size_t offset = 0;
      bool any = false;
      for (int row = 0; row < lam.length(); ++row) {
        if (row + 1 < lam.length() && lam[row + 1] == lam[row]) continue;
        std::vector<int> smaller = lam.parts();
        --smaller[static_cast<std::size_t>(row)];
        const NumberPartition mu(smaller);
        const auto k = static_cast<std::size_t>(std::find(mus.begin(), mus.end(), mu) - mus.begin());
        const ExactMatrix& blk = sub[k];
        for (std::size_t p = 0; p < blk.rows(); ++p)
          for (std::size_t q = 0; q < blk.cols(); ++q)
            if (sgn(blk(p, q)) != 0) {
              x(offset + p, offset + q) = blk(p, q);
              any = true;
            }
        offset += blk.rows();
      }
      if (!any) continue;
      for (int g = m - 1; g >= i; --g) r.apply_left(g, x);
      auto& acc = out[l];
      for (std::size_t e = 0; e < acc.data().size(); ++e)
        if (sgn(x.data()[e]) != 0) acc.data()[e] += x.data()[e];
    }
  }
  return out;
}

std::vector<ExactMatrix> FourierEngine::transform(const std::vector<Rational>& dense) const {
  if (dense.size() != factorial(n_)) throw std::invalid_argument("FourierEngine: wrong length");
  std::vector<std::uint32_t> idx(dense.size());
  std::iota(idx.begin(), idx.end(), 0u);
  return rec(n_, dense, idx);
}

std::vector<ExactMatrix> FourierEngine::transform(const GroupAlgebraElement& a) const {
  if (a.n() != n_) throw std::invalid_argument("FourierEngine: size mismatch");
  return transform(a.to_dense());
}

ExactMatrix FourierEngine::longest_element_block(const NumberPartition& lambda) const {
  return rep(lambda).rho(longest_element(n_));
}

}  // namespace shuffle
