#include "excov/closedforms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace excov {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; parts.empty() ? false : j <= parts[0]; ++j) {
    int len = 0;
    for (int p : parts)
      if (p >= j) ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

int Partition::hook(int i, int j) const {
  const int arm = parts[i - 1] - j;
  int leg = 0;
  for (int k = i; k < rows(); ++k)
    if (parts[k] >= j) ++leg;
  return arm + leg + 1;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> Partition::all_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

void require_short_roots(const RootSystem& rs, const char* what) {
  if (rs.simply_laced()) {
    throw std::invalid_argument(std::string(what) + ": " + rs.name() +
                                " is simply laced (no highest short root)");
  }
}

}  // namespace

QPoly bazlov_gm(const RootSystem& rs) {
  require_short_roots(rs, "bazlov_gm");
  const auto& m = rs.exponents();
  const int r = rs.rank();
  const int rs_cnt = rs.r_short(), rl_cnt = rs.r_long();

  QPoly p = QPoly::one() + QPoly::q_pow(-1);
  for (int i = 0; i + 1 < r; ++i) p = p * QPoly::one_plus_q_pow(2 * m[i] + 1);
  p = p.shifted(m[r - 1] + 1 - 2 * (rs_cnt - 1) * rl_cnt);
  const auto ratio =
      QPoly::one_minus_q_pow(4 * rl_cnt * rs_cnt).exact_div(QPoly::one_minus_q_pow(4 * rl_cnt));
  if (!ratio) throw std::logic_error("bazlov_gm: geometric ratio failed to divide");
  p = p * *ratio;

  if (!p.is_polynomial() || !p.nonnegative())
    throw std::logic_error("bazlov_gm: result is not a nonnegative polynomial");
  return p;
}

int n0(const RootSystem& rs) {
  require_short_roots(rs, "n0");
  const int mr = rs.exponents().back();
  const int rs_cnt = rs.r_short(), rl_cnt = rs.r_long();
  if (rs_cnt == 1) {
    if ((mr + 1) % 2 != 0) throw std::logic_error("n0: odd top exponent expected");
    return (mr + 1) / 2;
  }
  // both branches must agree for r_s > 1
  const int by_exponent = (mr + 1) / 2 - (rs_cnt - 1) * rl_cnt;
  if ((mr + 1) % 2 != 0 || by_exponent != 2 * rl_cnt)
    throw std::logic_error("n0: branch formulas disagree");
  return 2 * rl_cnt;
}

QPoly bazlov_product_form(const RootSystem& rs) {
  require_short_roots(rs, "bazlov_product_form");
  const auto& m = rs.exponents();
  const int r = rs.rank();
  const int deg = n0(rs);

  QPoly p = QPoly::one() + QPoly::q_pow(-1);
  for (int i = 0; i + 1 < r; ++i) p = p * QPoly::one_plus_q_pow(2 * m[i] + 1);
  QPoly geom;
  for (int j = 0; j < rs.r_short(); ++j) geom += QPoly::q_pow(2 * j * deg);
  return (p * geom).shifted(2 * deg);
}

Weight partition_to_weight(const Partition& p) {
  const int n = p.n();
  if (n < 2) throw std::invalid_argument("partition_to_weight needs a partition of n >= 2");
  const Partition conj = p.conjugate();
  std::vector<int64_t> coords(n - 1, 0);
  for (int col = 0; col < conj.rows(); ++col) {
    const int len = conj.parts[col];
    if (len < n) ++coords[len - 1];
  }
  return Weight(std::move(coords));
}

QPoly stembridge_gm(const Partition& p) {
  const int n = p.n();
  // numerator: prod_{i=1..n} (1-q^{2i}) * prod_{boxes} (q^{2i-1} + q^{2j-2})
  // denominator: (1+q) * prod_{boxes} (1-q^{2 h(i,j)})
  QPoly num = QPoly::one();
  for (int i = 1; i <= n; ++i) num = num * QPoly::one_minus_q_pow(2 * i);
  std::vector<QPoly> denom_factors{QPoly::one_plus_q_pow(1)};
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.parts[i - 1]; ++j) {
      QPoly box = QPoly::q_pow(2 * i - 1) + QPoly::q_pow(2 * j - 2);
      num = num * box;
      denom_factors.push_back(QPoly::one_minus_q_pow(2 * p.hook(i, j)));
    }
  }
  // Every factor divides the assembled numerator exactly, so sequential exact
  // division is safe.
  QPoly result = num;
  for (const auto& f : denom_factors) {
    auto d = result.exact_div(f);
    if (!d) throw std::logic_error("stembridge_gm: division failed for " + p.str());
    result = *d;
  }
  if (!result.is_polynomial() || !result.nonnegative())
    throw std::logic_error("stembridge_gm: non-polynomial outcome for " + p.str());
  return result;
}

QPoly invariant_poincare(const RootSystem& rs) {
  QPoly p = QPoly::one();
  for (int m : rs.exponents()) p = p * QPoly::one_plus_q_pow(2 * m + 1);
  return p;
}

QPoly lower_invariant_product(const RootSystem& rs) {
  QPoly p = QPoly::one();
  const auto& m = rs.exponents();
  for (std::size_t i = 0; i + 1 < m.size(); ++i) p = p * QPoly::one_plus_q_pow(2 * m[i] + 1);
  return p;
}

FreenessVerdict freeness_divisibility(const QPoly& m, const RootSystem& rs, int64_t zero_dim) {
  FreenessVerdict v;
  v.expected_count = 2 * Int(zero_dim);
  auto q = m.exact_div(lower_invariant_product(rs));
  v.divisible = q.has_value();
  if (!v.divisible) return v;
  v.quotient = *q;
  v.quotient_nonneg = q->nonnegative();
  if (v.quotient_nonneg) v.generator_count = q->eval_one();
  return v;
}

namespace {

// Exponent-vector polynomial over the rationals, just enough for the Newton
// pairing check.
using MPoly = std::map<std::vector<int>, Rational>;

MPoly mp_scale(const MPoly& a, const Rational& c) {
  MPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : a) out[e] = v * c;
  return out;
}

MPoly mp_add(MPoly a, const MPoly& b) {
  for (const auto& [e, v] : b) {
    auto [it, fresh] = a.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) a.erase(it);
    }
  }
  return a;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, va] : a)
    for (const auto& [eb, vb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.emplace(std::move(e), va * vb);
      if (!fresh) {
        it->second += va * vb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

MPoly mp_diff(const MPoly& a, int var) {
  MPoly out;
  for (const auto& [e, v] : a) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    out[std::move(d)] = v * e[var];
  }
  return out;
}

MPoly power_sum(int m, int k) {  // sum_i x_i^k (k >= 0)
  MPoly out;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e(m, 0);
    e[i] = k;
    auto [it, fresh] = out.emplace(std::move(e), 1);
    if (!fresh) it->second += 1;
  }
  return out;
}

}  // namespace

bool newton_pairing_identity_check(int k, int g, int m) {
  if (k < 1 || g < 1 || m < 1)
    throw std::invalid_argument("newton_pairing_identity_check needs k,g,m >= 1");
  const MPoly psi_k = mp_scale(power_sum(m, k), Rational(1, k));
  const MPoly psi_g = mp_scale(power_sum(m, g), Rational(1, g));
  MPoly lhs;
  for (int i = 0; i < m; ++i) lhs = mp_add(lhs, mp_mul(mp_diff(psi_k, i), mp_diff(psi_g, i)));
  // the right side in its unnormalized form, valid also for k+g = 2
  MPoly rhs = power_sum(m, k + g - 2);
  if (lhs != rhs) return false;
  if (k + g > 2) {
    const MPoly scaled =
        mp_scale(mp_scale(power_sum(m, k + g - 2), Rational(1, k + g - 2)), Rational(k + g - 2));
    if (lhs != scaled) return false;
  }
  return true;
}

}  // namespace excov
