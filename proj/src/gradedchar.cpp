#include "excov/gradedchar.hpp"

#include <algorithm>
#include <sstream>

namespace excov {

namespace {

constexpr int kFieldBits = 12;
constexpr int64_t kFieldOffset = 2048;
constexpr int64_t kFieldMask = (1 << kFieldBits) - 1;

void add_shifted(DegCounts& dst, const DegCounts& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

DegCounts convolve(const DegCounts& a, const DegCounts& b) {
  DegCounts c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

DegCounts binomial_row(int r) {
  DegCounts row{1};
  for (int i = 0; i < r; ++i) {
    DegCounts next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

QPoly counts_to_poly(const DegCounts& c) {
  QPoly p;
  for (std::size_t d = 0; d < c.size(); ++d)
    if (c[d] != 0) p.add_term(static_cast<int>(d), Int(c[d]));
  return p;
}

}  // namespace

GradedCharacter::Key GradedCharacter::key_of(const Weight& w) const {
  Key k = 0;
  for (std::size_t i = 0; i < w.fund.size(); ++i) {
    const int64_t f = w.fund[i] + kFieldOffset;
    if (f < 0 || f > kFieldMask) throw std::logic_error("weight outside packable range");
    k |= static_cast<Key>(f) << (kFieldBits * i);
  }
  return k;
}

Weight GradedCharacter::weight_of(Key k) const {
  std::vector<int64_t> c(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i)
    c[i] = static_cast<int64_t>((k >> (kFieldBits * i)) & kFieldMask) - kFieldOffset;
  return Weight(std::move(c));
}

bool GradedCharacter::in_support_box(const Weight& w) const {
  for (std::size_t i = 0; i < w.fund.size(); ++i)
    if (w.fund[i] < box_min_[i] || w.fund[i] > box_max_[i]) return false;
  return true;
}

GradedCharacter::Map GradedCharacter::expand_product(const RootSystem& rs,
                                                     const std::vector<Weight>& roots) {
  GradedCharacter tmp(rs, CharMode::Full);  // only for key packing
  Map cur;
  cur.emplace(tmp.key_of(rs.zero_weight()), DegCounts{1});
  for (const auto& alpha : roots) {
    Map next;
    next.reserve(cur.size() * 2);
    for (const auto& [k, p] : cur) {
      add_shifted(next[k], p, 0);
      add_shifted(next[tmp.key_of(tmp.weight_of(k) + alpha)], p, 1);
    }
    cur = std::move(next);
  }
  return cur;
}

GradedCharacter GradedCharacter::build(const RootSystem& rs, CharMode mode, Options opt) {
  if (rs.rank() > 5) {
    throw CharBudgetError("character expansion is limited to rank <= 5; " + rs.name() +
                          " exceeds it in either mode");
  }
  if (mode == CharMode::Full && rs.rank() > opt.max_full_rank) {
    std::ostringstream os;
    os << "full character expansion of " << rs.name() << " exceeds the rank cap "
       << opt.max_full_rank << "; use targeted mode";
    throw CharBudgetError(os.str());
  }

  GradedCharacter gc(rs, mode);
  std::vector<Weight> roots = rs.positive_root_weights();
  if (mode == CharMode::Full) {
    const Weight zero = rs.zero_weight();
    for (const auto& w : rs.positive_root_weights()) roots.push_back(zero - w);
  }
  gc.table_ = expand_product(rs, roots);
  if (mode == CharMode::Full) {
    const DegCounts cartan = binomial_row(rs.rank());
    for (auto& [k, p] : gc.table_) p = convolve(p, cartan);
    gc.cartan_factor_ = DegCounts{1};
  } else {
    gc.cartan_factor_ = binomial_row(rs.rank());
  }
  gc.finish_build();
  return gc;
}

void GradedCharacter::finish_build() {
  const int r = rs_.rank();
  std::vector<int64_t> lo(r, 0), hi(r, 0);
  for (const auto& [k, p] : table_) {
    const Weight w = weight_of(k);
    for (int i = 0; i < r; ++i) {
      lo[i] = std::min(lo[i], w.fund[i]);
      hi[i] = std::max(hi[i], w.fund[i]);
    }
  }
  if (mode_ == CharMode::Full) {
    box_min_ = lo;
    box_max_ = hi;
  } else {
    // full support = (half support) - (half support)
    box_min_.resize(r);
    box_max_.resize(r);
    for (int i = 0; i < r; ++i) {
      box_min_[i] = lo[i] - hi[i];
      box_max_[i] = hi[i] - lo[i];
    }
  }
}

QPoly GradedCharacter::raw_coefficient(const Weight& mu) const {
  if (!in_support_box(mu)) return QPoly();
  if (mode_ == CharMode::Full) {
    auto it = table_.find(key_of(mu));
    return it == table_.end() ? QPoly() : counts_to_poly(it->second);
  }
  // coefficient(mu) = sum_nu H(nu) * H(nu - mu), convolved over degrees
  const Key dmu = key_of(mu);
  const Key zero = key_of(rs_.zero_weight());
  DegCounts acc;
  for (const auto& [k, p] : table_) {
    // in-box guarantee keeps every packed field in range, so plain
    // integer key arithmetic is exact here
    const Key partner = k - dmu + zero;
    auto it = table_.find(partner);
    if (it == table_.end()) continue;
    add_shifted(acc, convolve(p, it->second), 0);
  }
  if (acc.empty()) return QPoly();
  return counts_to_poly(convolve(acc, cartan_factor_));
}

QPoly GradedCharacter::coefficient(const Weight& mu) const {
  if (static_cast<int>(mu.fund.size()) != rs_.rank())
    throw std::invalid_argument("weight rank mismatch");
  return raw_coefficient(mu);
}

QPoly GradedCharacter::coefficient_cached(const Weight& mu) const {
  if (static_cast<int>(mu.fund.size()) != rs_.rank())
    throw std::invalid_argument("weight rank mismatch");
  if (mode_ == CharMode::Full) return raw_coefficient(mu);
  const Weight dom = rs_.dominant_rep(mu);
  if (!in_support_box(dom)) return QPoly();
  const Key k = key_of(dom);
  {
    std::lock_guard lock(*cache_mu_);
    auto it = dom_cache_.find(k);
    if (it != dom_cache_.end()) return it->second;
  }
  QPoly p = raw_coefficient(dom);
  std::lock_guard lock(*cache_mu_);
  return dom_cache_.emplace(k, std::move(p)).first->second;
}

std::vector<std::pair<Weight, QPoly>> GradedCharacter::support() const {
  if (mode_ != CharMode::Full)
    throw std::logic_error("support() requires a full-mode character");
  std::vector<std::pair<Weight, QPoly>> out;
  out.reserve(table_.size());
  for (const auto& [k, p] : table_) out.emplace_back(weight_of(k), counts_to_poly(p));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Int GradedCharacter::total_at_one() const {
  if (mode_ != CharMode::Full)
    throw std::logic_error("total_at_one() requires a full-mode character");
  Int total = 0;
  for (const auto& [k, p] : table_)
    for (int64_t c : p) total += c;
  return total;
}

GradedCharacter::Payload GradedCharacter::payload() const {
  Payload pl;
  pl.mode = mode_;
  pl.entries.reserve(table_.size());
  for (const auto& [k, p] : table_) pl.entries.emplace_back(weight_of(k).fund, p);
  std::sort(pl.entries.begin(), pl.entries.end());
  return pl;
}

GradedCharacter GradedCharacter::restore(const RootSystem& rs, const Payload& p) {
  GradedCharacter gc(rs, p.mode);
  gc.table_.reserve(p.entries.size());
  for (const auto& [coords, counts] : p.entries) {
    if (static_cast<int>(coords.size()) != rs.rank())
      throw std::invalid_argument("character payload rank mismatch");
    gc.table_.emplace(gc.key_of(Weight(coords)), counts);
  }
  if (p.mode == CharMode::Full) {
    gc.cartan_factor_ = DegCounts{1};
  } else {
    gc.cartan_factor_ = binomial_row(rs.rank());
  }
  gc.finish_build();
  return gc;
}

}  // namespace excov
