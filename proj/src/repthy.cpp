#include "excov/repthy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace excov {

namespace {

// All dominant weights mu <= lam, i.e. lam - mu a nonnegative integral
// combination of simple roots. Dominant weights have nonnegative rational
// coordinates on the simple roots, which bounds the search box.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lam) {
  const int r = rs.rank();
  const RatVec lam_coords = rs.root_coords(lam);
  std::vector<int64_t> bound(r);
  for (int i = 0; i < r; ++i) {
    const Rational& x = lam_coords[i];
    bound[i] = static_cast<int64_t>(numerator(x) / denominator(x));  // floor for x >= 0
    if (bound[i] < 0) throw std::invalid_argument("dominant weight with negative root coordinate");
  }
  std::vector<Weight> out;
  std::vector<int64_t> c(r, 0);
  std::vector<Weight> simple;
  for (int i = 0; i < r; ++i) simple.push_back(rs.simple_root_weight(i));

  for (;;) {
    Weight mu = lam;
    for (int i = 0; i < r; ++i) mu = mu - c[i] * simple[i];
    if (rs.is_dominant(mu)) out.push_back(mu);
    int i = 0;
    while (i < r) {
      if (++c[i] <= bound[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  return out;
}

int64_t height_diff(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  Rational h = 0;
  for (const auto& x : rs.root_coords(lam - mu)) h += x;
  if (denominator(h) != 1) throw std::logic_error("non-integral height difference");
  return static_cast<int64_t>(numerator(h));
}

std::vector<Weight> weight_orbit(const RootSystem& rs, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::vector<Weight> queue{mu};
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank(); ++i) {
      Weight v = rs.simple_reflect(i, w);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Int weyl_dimension(const RootSystem& rs, const Weight& lam) {
  const RatVec lam_rho = add(rs.ambient_of(lam), rs.rho_ambient());
  Rational d = 1;
  for (const auto& alpha : rs.positive_roots())
    d *= rs.form(lam_rho, alpha) / rs.form(rs.rho_ambient(), alpha);
  if (denominator(d) != 1) throw std::logic_error("Weyl dimension not integral");
  return numerator(d);
}

IrrepInfo irrep_info(const RootSystem& rs, const Weight& lam) {
  if (static_cast<int>(lam.fund.size()) != rs.rank())
    throw std::invalid_argument("weight rank mismatch");
  if (!rs.is_dominant(lam)) throw std::invalid_argument("irrep_info requires a dominant weight");

  std::vector<Weight> dom = dominant_weights_below(rs, lam);
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    const int64_t ha = height_diff(rs, lam, a), hb = height_diff(rs, lam, b);
    return ha != hb ? ha < hb : a < b;
  });

  const Weight rho = rs.rho();
  const Rational lam_norm = rs.weight_form(lam + rho, lam + rho);
  std::map<Weight, int64_t> dom_mult;  // on dominant representatives

  for (const auto& mu : dom) {
    if (mu == lam) {
      dom_mult[mu] = 1;
      continue;
    }
    // Freudenthal: (|lam+rho|^2 - |mu+rho|^2) m_mu
    //            = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m_{mu+k alpha}
    Rational rhs = 0;
    for (const auto& alpha : rs.positive_root_weights()) {
      for (int64_t k = 1;; ++k) {
        const Weight nu = mu + k * alpha;
        auto it = dom_mult.find(rs.dominant_rep(nu));
        if (it == dom_mult.end()) break;  // the alpha-string through mu has ended
        rhs += 2 * Rational(it->second) * rs.weight_form(nu, alpha);
      }
    }
    const Rational denom = lam_norm - rs.weight_form(mu + rho, mu + rho);
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
    const Rational m = rhs / denom;
    if (denominator(m) != 1 || m <= 0) throw std::logic_error("non-positive Freudenthal multiplicity");
    dom_mult[mu] = static_cast<int64_t>(numerator(m));
  }

  IrrepInfo info;
  info.highest_weight = lam;
  for (const auto& [mu, m] : dom_mult) {
    const auto orbit = weight_orbit(rs, mu);
    for (const auto& w : orbit) info.weight_mults[w] = m;
    info.dim += Int(m) * static_cast<int64_t>(orbit.size());
  }
  info.zero_weight_dim = info.mult(rs.zero_weight());

  if (info.dim != weyl_dimension(rs, lam))
    throw std::logic_error("Freudenthal/Weyl dimension disagreement");
  return info;
}

SmallnessResult is_small(const RootSystem& rs, const Weight& lam, bool cross_check) {
  SmallnessResult res;
  res.small = true;
  std::vector<Weight> dominant_roots{rs.theta()};
  if (rs.theta_s()) dominant_roots.push_back(*rs.theta_s());
  for (const auto& eta : dominant_roots) {
    if (rs.dominance_geq(lam, 2 * eta)) {
      res.small = false;
      res.witness = eta;
      break;
    }
  }
  if (cross_check) {
    const IrrepInfo info = irrep_info(rs, lam);
    bool definitional_small = true;
    for (const auto& alpha : rs.positive_root_weights()) {
      const Weight zero = rs.zero_weight();
      if (info.mult(2 * alpha) > 0 || info.mult(zero - (2 * alpha)) > 0) {
        definitional_small = false;
        break;
      }
    }
    if (definitional_small != res.small)
      throw std::logic_error("smallness criterion disagrees with the definitional test");
  }
  return res;
}

QPoly graded_multiplicity(const RootSystem& rs, const WeylGroup& weyl, const Weight& lam,
                          const GradedCharacter& chr) {
  if (!rs.is_dominant(lam))
    throw std::invalid_argument("graded_multiplicity requires a dominant weight");
  if (!rs.in_root_lattice(lam)) return QPoly();

  const Weight lam_rho = lam + rs.rho();
  const Weight rho = rs.rho();
  QPoly m;
  for (const auto& w : weyl.elements()) {
    const QPoly c = chr.coefficient_cached(weyl.apply(w, lam_rho) - rho);
    if (c.is_zero()) continue;
    if (w.sign > 0)
      m += c;
    else
      m -= c;
  }
  if (!m.is_zero() && (!m.is_polynomial() || !m.nonnegative()))
    throw std::logic_error("graded multiplicity came out negative: internal inconsistency");
  return m;
}

}  // namespace excov
