#include "excov/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace excov {

QPoly::QPoly(Int constant) {
  if (constant != 0) c_[0] = std::move(constant);
}

QPoly QPoly::monomial(Int coeff, int exp) {
  QPoly p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

QPoly QPoly::one_plus_q_pow(int k) {
  QPoly p = one();
  p.add_term(k, 1);
  return p;
}

QPoly QPoly::one_minus_q_pow(int k) {
  QPoly p = one();
  p.add_term(k, -1);
  return p;
}

Int QPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

void QPoly::add_term(int exp, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

int QPoly::min_degree() const {
  if (c_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return c_.begin()->first;
}

int QPoly::max_degree() const {
  if (c_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return c_.rbegin()->first;
}

bool QPoly::is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }

bool QPoly::nonnegative() const {
  for (const auto& [e, v] : c_)
    if (v < 0) return false;
  return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p;
  for (const auto& [e, v] : c_) p.c_[e] = -v;
  return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) p.add_term(ea + eb, va * vb);
  return p;
}

QPoly QPoly::shifted(int k) const {
  QPoly p;
  for (const auto& [e, v] : c_) p.c_[e + k] = v;
  return p;
}

QPoly QPoly::scaled(const Int& s) const {
  QPoly p;
  if (s == 0) return p;
  for (const auto& [e, v] : c_) p.c_[e] = v * s;
  return p;
}

std::optional<QPoly> QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return QPoly();
  // q is a unit, so divide the shifted ordinary-polynomial parts and restore
  // the exponent offset afterwards.
  const int shift = min_degree() - d.min_degree();
  QPoly rem = shifted(-min_degree());
  QPoly den = d.shifted(-d.min_degree());
  const int dmax = den.max_degree();
  const Int dlead = den.c_.rbegin()->second;
  QPoly quo;
  while (!rem.is_zero() && rem.max_degree() >= dmax) {
    const int e = rem.max_degree() - dmax;
    const Int rlead = rem.c_.rbegin()->second;
    if (rlead % dlead != 0) return std::nullopt;
    const Int c = rlead / dlead;
    quo.add_term(e, c);
    for (const auto& [ed, vd] : den.c_) rem.add_term(ed + e, -c * vd);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo.shifted(shift);
}

Int QPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, v] : c_) s += v;
  return s;
}

QPoly QPoly::mirrored(int d) const {
  QPoly p;
  for (const auto& [e, v] : c_) p.c_[d - e] = v;
  return p;
}

namespace {

void append_term(std::ostream& os, bool first, const Int& v, int e, bool tex) {
  Int a = v < 0 ? Int(-v) : v;
  if (first) {
    if (v < 0) os << "-";
  } else if (tex) {
    os << (v < 0 ? "-" : "+");
  } else {
    os << (v < 0 ? " - " : " + ");
  }
  const bool unit = (a == 1) && e != 0;
  if (!unit) os << a;
  if (e != 0) {
    if (!unit && !tex) os << "*";
    os << "q";
    if (e != 1) {
      if (tex)
        os << "^{" << e << "}";
      else
        os << "^" << e;
    }
  }
}

}  // namespace

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    append_term(os, first, v, e, false);
    first = false;
  }
  return os.str();
}

std::string QPoly::latex() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    append_term(os, first, v, e, true);
    first = false;
  }
  return os.str();
}

}  // namespace excov
