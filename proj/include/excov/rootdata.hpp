#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "excov/rational.hpp"

namespace excov {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType lie_type_from_char(char c);

// Integer coordinates on the fundamental-weight basis of a fixed root system.
struct Weight {
  std::vector<int64_t> fund;

  Weight() = default;
  explicit Weight(std::vector<int64_t> c) : fund(std::move(c)) {}

  bool is_zero() const {
    for (int64_t v : fund)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const Weight& o) const { return fund == o.fund; }
  bool operator<(const Weight& o) const { return fund < o.fund; }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(int64_t c, const Weight& a);
std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

// A simple root system in a standard rational ambient realization, with the
// bilinear form scaled so long roots have squared length 2.
class RootSystem {
 public:
  static RootSystem build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  std::string name() const;
  bool simply_laced() const { return r_short_ == 0; }

  const std::vector<RatVec>& simple_roots() const { return simple_roots_; }
  const std::vector<RatVec>& positive_roots() const { return positive_roots_; }
  RatMat bilinear_form() const;  // form_scale * identity
  Rational form(const RatVec& a, const RatVec& b) const { return form_scale_ * dot(a, b); }
  const std::vector<std::vector<int64_t>>& cartan() const { return cartan_; }
  const RatMat& inv_cartan() const { return inv_cartan_; }
  const std::vector<RatVec>& fundamental_weights() const { return fundamental_weights_; }
  const RatVec& rho_ambient() const { return rho_ambient_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int r_short() const { return r_short_; }
  int r_long() const { return r_long_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  int dim_g() const { return rank_ + 2 * num_positive_roots(); }
  Int weyl_order() const;

  const Weight& theta() const { return theta_; }
  const std::optional<Weight>& theta_s() const { return theta_s_; }
  Weight rho() const { return Weight(std::vector<int64_t>(rank_, 1)); }
  Weight zero_weight() const { return Weight(std::vector<int64_t>(rank_, 0)); }
  // Fundamental coordinates of each positive root, aligned with positive_roots().
  const std::vector<Weight>& positive_root_weights() const { return pos_root_weights_; }
  const std::vector<int>& positive_root_heights() const { return pos_root_heights_; }
  // Fundamental coordinates of simple root alpha_i (column i of the Cartan matrix).
  Weight simple_root_weight(int i) const;

  Weight weight(std::vector<int64_t> fund_coords) const;
  bool is_dominant(const Weight& w) const;
  RatVec root_coords(const Weight& w) const;  // coordinates on the simple roots
  bool in_root_lattice(const Weight& w) const;
  // True iff lam - mu is a nonnegative integer combination of simple roots.
  bool dominance_geq(const Weight& lam, const Weight& mu) const;
  RatVec ambient_of(const Weight& w) const;
  Rational weight_form(const Weight& a, const Weight& b) const;
  Weight simple_reflect(int i, const Weight& w) const;
  Weight dominant_rep(const Weight& w) const;

 private:
  LieType type_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  Rational form_scale_ = 1;
  std::vector<RatVec> simple_roots_;
  std::vector<RatVec> positive_roots_;
  std::vector<std::vector<int64_t>> cartan_;
  RatMat inv_cartan_;
  std::vector<RatVec> fundamental_weights_;
  RatVec rho_ambient_;
  std::vector<int> exponents_;
  Weight theta_;
  std::optional<Weight> theta_s_;
  int r_short_ = 0;
  int r_long_ = 0;
  std::vector<Weight> pos_root_weights_;
  std::vector<int> pos_root_heights_;
  RatMat fund_gram_;  // (omega_i, omega_j)
};

}  // namespace excov
