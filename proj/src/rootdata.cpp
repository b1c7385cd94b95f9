#include "excov/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace excov {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    case 'E': case 'e': return LieType::E;
    case 'F': case 'f': return LieType::F;
    case 'G': case 'g': return LieType::G;
  }
  throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight w = a;
  for (std::size_t i = 0; i < w.fund.size(); ++i) w.fund[i] += b.fund[i];
  return w;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight w = a;
  for (std::size_t i = 0; i < w.fund.size(); ++i) w.fund[i] -= b.fund[i];
  return w;
}

Weight operator*(int64_t c, const Weight& a) {
  Weight w = a;
  for (auto& v : w.fund) v *= c;
  return w;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.fund.size(); ++i) {
    if (i) os << ",";
    os << w.fund[i];
  }
  os << ")";
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int64_t v : w.fund) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

RatVec basis_vec(int dim, int i, const Rational& v = 1) {
  RatVec e(dim, 0);
  e[i] = v;
  return e;
}

// Simple roots in the standard ambient realizations.
std::pair<int, std::vector<RatVec>> simple_roots_for(LieType t, int r) {
  std::vector<RatVec> s;
  switch (t) {
    case LieType::A: {
      const int d = r + 1;
      for (int i = 0; i < r; ++i) {
        RatVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      return {d, s};
    }
    case LieType::B: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(basis_vec(r, r - 1));
      return {r, s};
    }
    case LieType::C: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(basis_vec(r, r - 1, 2));
      return {r, s};
    }
    case LieType::D: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      RatVec v(r, 0);
      v[r - 2] = 1;
      v[r - 1] = 1;
      s.push_back(v);
      return {r, s};
    }
    case LieType::E: {
      const int d = 8;
      RatVec a1(d, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      RatVec a2(d, 0);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i + 1 < 7; ++i) {
        RatVec v(d, 0);
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
        if (static_cast<int>(s.size()) == r) break;
      }
      s.resize(r);
      return {d, s};
    }
    case LieType::F: {
      const int d = 4;
      s.push_back(sub(basis_vec(d, 1), basis_vec(d, 2)));
      s.push_back(sub(basis_vec(d, 2), basis_vec(d, 3)));
      s.push_back(basis_vec(d, 3));
      RatVec v(d, Rational(-1, 2));
      v[0] = Rational(1, 2);
      s.push_back(v);
      return {d, s};
    }
    case LieType::G: {
      const int d = 3;
      s.push_back(sub(basis_vec(d, 0), basis_vec(d, 1)));
      RatVec v(d, 0);
      v[0] = -2;
      v[1] = 1;
      v[2] = 1;
      s.push_back(v);
      return {d, s};
    }
  }
  throw std::invalid_argument("unreachable");
}

void validate_type_rank(LieType t, int r) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = r >= 1; break;
    case LieType::B: ok = r >= 2; break;
    case LieType::C: ok = r >= 2; break;
    case LieType::D: ok = r >= 4; break;
    case LieType::E: ok = r >= 6 && r <= 8; break;
    case LieType::F: ok = r == 4; break;
    case LieType::G: ok = r == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid simple type " << static_cast<char>(t) << r
       << " (valid: A r>=1, B r>=2, C r>=2, D r>=4, E r in {6,7,8}, F r=4, G r=2)";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  validate_type_rank(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  auto [dim, simple] = simple_roots_for(type, rank);
  rs.ambient_dim_ = dim;
  rs.simple_roots_ = simple;

  // Scale the form so the long roots have squared length 2.
  Rational max_norm = 0;
  for (const auto& a : simple) max_norm = std::max(max_norm, dot(a, a));
  rs.form_scale_ = Rational(2) / max_norm;

  // Close the simple roots under all simple reflections to get the root set.
  std::set<RatVec> roots(simple.begin(), simple.end());
  std::vector<RatVec> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    RatVec beta = queue.back();
    queue.pop_back();
    for (const auto& alpha : simple) {
      const Rational c = 2 * rs.form(beta, alpha) / rs.form(alpha, alpha);
      RatVec refl = sub(beta, scale(c, alpha));
      if (roots.insert(refl).second) queue.push_back(refl);
    }
  }

  // Gram matrix of the simple roots, used to express roots in the simple basis.
  RatMat gram(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram[i][j] = rs.form(simple[i], simple[j]);
  const RatMat gram_inv = mat_inverse(gram);

  auto simple_coords = [&](const RatVec& beta) {
    RatVec rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = rs.form(beta, simple[i]);
    return mat_vec(gram_inv, rhs);
  };

  std::vector<std::pair<int, RatVec>> positives;  // (height, root)
  for (const auto& beta : roots) {
    RatVec x = simple_coords(beta);
    Rational h = 0;
    bool nonneg = true;
    for (const auto& xi : x) {
      if (xi < 0) nonneg = false;
      h += xi;
    }
    if (!nonneg) continue;
    if (denominator(h) != 1) throw std::logic_error("non-integral root height");
    positives.emplace_back(static_cast<int>(numerator(h)), beta);
  }
  std::sort(positives.begin(), positives.end());
  for (auto& [h, beta] : positives) {
    rs.positive_roots_.push_back(beta);
    rs.pos_root_heights_.push_back(h);
  }

  // Cartan matrix: cartan[i][j] = <alpha_j, alpha_i^vee>.
  rs.cartan_.assign(rank, std::vector<int64_t>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      const Rational c = 2 * rs.form(simple[i], simple[j]) / rs.form(simple[i], simple[i]);
      if (denominator(c) != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int64_t>(numerator(c));
    }
  }
  RatMat cartan_rat(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_rat[i][j] = rs.cartan_[i][j];
  rs.inv_cartan_ = mat_inverse(cartan_rat);

  // Fundamental weights: omega_i = sum_j invC[j][i] alpha_j.
  for (int i = 0; i < rank; ++i) {
    RatVec w(dim, 0);
    for (int j = 0; j < rank; ++j) w = add(w, scale(rs.inv_cartan_[j][i], simple[j]));
    rs.fundamental_weights_.push_back(w);
  }

  rs.rho_ambient_.assign(dim, 0);
  for (const auto& beta : rs.positive_roots_) rs.rho_ambient_ = add(rs.rho_ambient_, beta);
  rs.rho_ambient_ = scale(Rational(1, 2), rs.rho_ambient_);
  {
    RatVec sum_fund(dim, 0);
    for (const auto& w : rs.fundamental_weights_) sum_fund = add(sum_fund, w);
    if (sum_fund != rs.rho_ambient_) throw std::logic_error("rho mismatch");
  }

  rs.fund_gram_.assign(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.fund_gram_[i][j] = rs.form(rs.fundamental_weights_[i], rs.fundamental_weights_[j]);

  // Fundamental coordinates of the positive roots.
  for (const auto& beta : rs.positive_roots_) {
    std::vector<int64_t> c(rank);
    for (int i = 0; i < rank; ++i) {
      const Rational v = 2 * rs.form(beta, simple[i]) / rs.form(simple[i], simple[i]);
      if (denominator(v) != 1) throw std::logic_error("non-integral root weight");
      c[i] = static_cast<int64_t>(numerator(v));
    }
    rs.pos_root_weights_.push_back(Weight(std::move(c)));
  }

  // Exponents: dual partition of the height distribution.
  {
    const int hmax = rs.pos_root_heights_.back();
    std::vector<int> count(hmax + 1, 0);
    for (int h : rs.pos_root_heights_) ++count[h];
    for (int j = 1; j <= count[1]; ++j) {
      int d = 0;
      for (int h = 1; h <= hmax; ++h)
        if (count[h] >= j) ++d;
      rs.exponents_.push_back(d);
    }
    std::sort(rs.exponents_.begin(), rs.exponents_.end());
    if (static_cast<int>(rs.exponents_.size()) != rank)
      throw std::logic_error("exponent count mismatch");
  }

  // Short/long split of the simple roots; theta and theta_s.
  const Rational long_norm = 2;
  for (const auto& a : simple) {
    if (rs.form(a, a) == long_norm)
      ++rs.r_long_;
    else
      ++rs.r_short_;
  }
  rs.theta_ = rs.pos_root_weights_.back();
  if (!rs.is_dominant(rs.theta_)) throw std::logic_error("highest root not dominant");
  if (rs.r_short_ > 0) {
    std::optional<Weight> best;
    int best_h = -1;
    for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
      if (rs.form(rs.positive_roots_[k], rs.positive_roots_[k]) == long_norm) continue;
      if (rs.pos_root_heights_[k] > best_h) {
        best_h = rs.pos_root_heights_[k];
        best = rs.pos_root_weights_[k];
      }
    }
    if (!best || !rs.is_dominant(*best)) throw std::logic_error("highest short root not dominant");
    rs.theta_s_ = best;
  }

  return rs;
}

std::string RootSystem::name() const {
  std::ostringstream os;
  os << static_cast<char>(type_) << rank_;
  return os.str();
}

RatMat RootSystem::bilinear_form() const {
  RatMat f(ambient_dim_, RatVec(ambient_dim_, 0));
  for (int i = 0; i < ambient_dim_; ++i) f[i][i] = form_scale_;
  return f;
}

Int RootSystem::weyl_order() const {
  Int n = 1;
  for (int m : exponents_) n *= (m + 1);
  return n;
}

Weight RootSystem::simple_root_weight(int i) const {
  std::vector<int64_t> c(rank_);
  for (int k = 0; k < rank_; ++k) c[k] = cartan_[k][i];
  return Weight(std::move(c));
}

Weight RootSystem::weight(std::vector<int64_t> fund_coords) const {
  if (static_cast<int>(fund_coords.size()) != rank_)
    throw std::invalid_argument("weight coordinate count does not match rank");
  return Weight(std::move(fund_coords));
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (int64_t v : w.fund)
    if (v < 0) return false;
  return true;
}

RatVec RootSystem::root_coords(const Weight& w) const {
  RatVec c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = w.fund[i];
  return mat_vec(inv_cartan_, c);
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  for (const auto& x : root_coords(w))
    if (denominator(x) != 1) return false;
  return true;
}

bool RootSystem::dominance_geq(const Weight& lam, const Weight& mu) const {
  for (const auto& x : root_coords(lam - mu)) {
    if (denominator(x) != 1 || x < 0) return false;
  }
  return true;
}

RatVec RootSystem::ambient_of(const Weight& w) const {
  RatVec v(ambient_dim_, 0);
  for (int i = 0; i < rank_; ++i)
    v = add(v, scale(Rational(w.fund[i]), fundamental_weights_[i]));
  return v;
}

Rational RootSystem::weight_form(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.fund[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b.fund[j] == 0) continue;
      s += Rational(a.fund[i]) * Rational(b.fund[j]) * fund_gram_[i][j];
    }
  }
  return s;
}

Weight RootSystem::simple_reflect(int i, const Weight& w) const {
  Weight out = w;
  const int64_t ci = w.fund[i];
  if (ci == 0) return out;
  for (int k = 0; k < rank_; ++k) out.fund[k] -= ci * cartan_[k][i];
  return out;
}

Weight RootSystem::dominant_rep(const Weight& w) const {
  Weight cur = w;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i) {
      if (cur.fund[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return cur;
    cur = simple_reflect(neg, cur);
  }
}

}  // namespace excov
