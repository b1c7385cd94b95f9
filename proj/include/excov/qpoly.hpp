#pragma once

#include <map>
#include <optional>
#include <string>

#include "excov/rational.hpp"

namespace excov {

// Laurent polynomial in one variable q with exact integer coefficients.
// Zero coefficients are never stored, so equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Int constant);
  explicit QPoly(long long constant) : QPoly(Int(constant)) {}

  static QPoly monomial(Int coeff, int exp);
  static QPoly one() { return QPoly(Int(1)); }
  static QPoly q_pow(int k) { return monomial(1, k); }
  static QPoly one_plus_q_pow(int k);   // 1 + q^k
  static QPoly one_minus_q_pow(int k);  // 1 - q^k

  const std::map<int, Int>& terms() const { return c_; }
  Int coeff(int exp) const;
  void add_term(int exp, const Int& coeff);

  bool is_zero() const { return c_.empty(); }
  // min/max degree of a nonzero polynomial; throws std::logic_error on zero.
  int min_degree() const;
  int max_degree() const;
  bool is_polynomial() const;  // no negative exponents
  bool nonnegative() const;    // all coefficients >= 0

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly shifted(int k) const;  // multiply by q^k
  QPoly scaled(const Int& s) const;

  // Exact division: returns quotient when *this == q * d with integer
  // coefficients, std::nullopt otherwise (never truncates).
  std::optional<QPoly> exact_div(const QPoly& d) const;

  Int eval_one() const;
  QPoly mirrored(int d) const;  // q^d * p(1/q)

  std::string str() const;
  std::string latex() const;

 private:
  std::map<int, Int> c_;
};

}  // namespace excov
