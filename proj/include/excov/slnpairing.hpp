#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excov/rational.hpp"

namespace excov::sln {

// Dense square matrix over an exact scalar.
template <class T>
struct Mat {
  int n = 0;
  std::vector<T> a;

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, T(0)) {}

  T& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static Mat identity(int n_) {
    Mat m(n_);
    for (int i = 0; i < n_; ++i) m.at(i, i) = T(1);
    return m;
  }
  bool operator==(const Mat&) const = default;
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const T& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class T>
T trace(const Mat<T>& x) {
  T t(0);
  for (int i = 0; i < x.n; ++i) t += x.at(i, i);
  return t;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

// Laplace expansion; fine for the small sizes used here.
template <class T>
T det_columns(const std::vector<std::vector<T>>& cols);

using RationalMatrix = Mat<Rational>;

// St_k(x_1..x_k) = sum over permutations with sign of the ordered products.
RationalMatrix standard_poly(const std::vector<RationalMatrix>& xs);
// T_i = tr(St_{2i+1}(...)); the argument list must have length 2i+1.
Rational trace_T(int i, const std::vector<RationalMatrix>& xs);
// phi_mu: product over the cycles of mu (0-based images) of the trace of the
// cycle-ordered matrix product.
Rational trace_monomial(const std::vector<int>& mu, const std::vector<RationalMatrix>& w);

Rational phi_eval(const std::vector<Rational>& v, const std::vector<RationalMatrix>& a);
Rational psi_eval(const std::vector<Rational>& v, const std::vector<RationalMatrix>& a);
Rational phi_star_eval(const std::vector<Rational>& gamma, const std::vector<RationalMatrix>& a);
Rational psi_star_eval(const std::vector<Rational>& gamma, const std::vector<RationalMatrix>& a);

// (Psi, Phi*) evaluated on 2n-1 traceless matrices. Two independent routes
// are evaluated and must agree exactly: the polarized direct route over the
// canonical element, and the alternated trace-monomial route. Disagreement
// throws std::logic_error.
Rational pairing_psi_phistar(int n, const std::vector<RationalMatrix>& x);

// The trace-monomial route with the triple permutation sum written out
// literally; exponentially slower, retained as a cross-check for small n.
Rational pairing_trace_form_literal(int n, const std::vector<RationalMatrix>& x);

// Basis data for sl(n): E_{ij} (i != j) first, then the Cartan differences
// h_k = E_{kk} - E_{k+1,k+1}. Carries trace-form pairings, dual basis and
// bracket tables.
class SlBasis {
 public:
  explicit SlBasis(int n);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const RationalMatrix& element(int idx) const { return elems_[idx]; }
  int e_index(int i, int j) const;  // i != j
  std::vector<Rational> coords(const RationalMatrix& m) const;  // m must be traceless
  const Rational& pairing(int a, int b) const { return pair_[a * dim_ + b]; }
  const std::vector<std::pair<int, Rational>>& dual(int i) const { return dual_[i]; }
  const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
    return bracket_[a * dim_ + b];
  }

 private:
  int n_;
  int dim_;
  std::vector<RationalMatrix> elems_;
  std::vector<Rational> pair_;
  std::vector<std::vector<std::pair<int, Rational>>> dual_;
  std::vector<std::vector<std::pair<int, Rational>>> bracket_;
};

// Formal combination of basis wedges, keyed by bitmask over SlBasis indices
// with factors in ascending index order.
using Wedge = std::map<uint32_t, Rational>;

Wedge wedge_scale(const Wedge& w, const Rational& c);
Wedge wedge_add(Wedge a, const Wedge& b);
// boundary: x1^...^xk -> sum_{p<q} +/- [xp,xq]^(rest), with the sign fixed so
// that boundary(e^f) = [e,f]
Wedge koszul_boundary(const SlBasis& basis, const Wedge& w);
// adjoint of the boundary under the multiplicative extension of tr(XY)
Wedge koszul_delta(const SlBasis& basis, const Wedge& w);
// Gram pairing det(tr(x_i y_j)) extended bilinearly
Rational gram_pair(const SlBasis& basis, const Wedge& a, const Wedge& b);

// Wedge representatives of Psi / Phi evaluated on the S^n(V) basis monomial
// with exponent vector a (size n, sum n), under the trace-form identification.
Wedge psi_wedge(const SlBasis& basis, const std::vector<int>& monomial);
Wedge phi_wedge(const SlBasis& basis, const std::vector<int>& monomial);

struct Section3Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Section3Report {
  int n = 0;
  int trials = 0;
  uint64_t seed = 0;
  Rational constant_theorem;
  std::optional<Rational> constant_measured;
  bool constant_matches = false;
  std::vector<Section3Check> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Exact verification suite: pairing vs trace identity proportionality on
// random traceless integer tuples (exhaustive over basis tuples for n = 2),
// boundary annihilation of Psi, delta Psi proportional to Phi, and the
// Laplacian eigen-relation, all over the monomial basis.
Section3Report verify_section3(int n, int trials, uint64_t seed);

}  // namespace excov::sln
