#include "excov/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace excov {

namespace {

std::vector<int64_t> identity_matrix(int r) {
  std::vector<int64_t> m(r * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

std::vector<int64_t> mat_mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int r) {
  std::vector<int64_t> c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const int64_t aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

}  // namespace

WeylGroup WeylGroup::generate(const RootSystem& rs, int64_t budget) {
  const Int order = rs.weyl_order();
  if (order > budget) {
    std::ostringstream os;
    os << "Weyl group of " << rs.name() << " has order " << order
       << ", beyond the enumeration budget " << budget;
    throw WeylBudgetError(os.str());
  }
  const int r = rs.rank();

  // Generator matrices: (s_i mu)_k = mu_k - mu_i * cartan[k][i].
  std::vector<std::vector<int64_t>> gens;
  for (int i = 0; i < r; ++i) {
    auto m = identity_matrix(r);
    for (int k = 0; k < r; ++k) m[k * r + i] -= rs.cartan()[k][i];
    gens.push_back(std::move(m));
  }

  WeylGroup g;
  g.rank_ = r;
  std::map<std::vector<int64_t>, std::size_t> seen;
  g.elems_.push_back(WeylElement{identity_matrix(r), {}, 1});
  seen.emplace(g.elems_[0].matrix, 0);
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    // BFS over words, generators in index order: deterministic enumeration.
    const WeylElement cur = g.elems_[head];
    for (int i = 0; i < r; ++i) {
      // word composes left to right: matrix(word + [i]) = matrix(word) * s_i
      auto m = mat_mul(cur.matrix, gens[i], r);
      if (seen.contains(m)) continue;
      WeylElement next;
      next.word = cur.word;
      next.word.push_back(i);
      next.sign = -cur.sign;
      seen.emplace(m, g.elems_.size());
      next.matrix = std::move(m);
      g.elems_.push_back(std::move(next));
    }
  }
  if (Int(static_cast<int64_t>(g.elems_.size())) != order)
    throw std::logic_error("Weyl enumeration size disagrees with exponent product");
  return g;
}

Weight WeylGroup::apply(const WeylElement& w, const Weight& mu) const {
  const int r = rank_;
  Weight out(std::vector<int64_t>(r, 0));
  for (int i = 0; i < r; ++i) {
    int64_t s = 0;
    for (int j = 0; j < r; ++j) s += w.matrix[i * r + j] * mu.fund[j];
    out.fund[i] = s;
  }
  return out;
}

std::vector<Weight> WeylGroup::orbit(const Weight& mu) const {
  std::set<Weight> out;
  for (const auto& w : elems_) out.insert(apply(w, mu));
  return std::vector<Weight>(out.begin(), out.end());
}

}  // namespace excov
