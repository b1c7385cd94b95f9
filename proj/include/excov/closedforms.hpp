#pragma once

#include <optional>
#include <string>
#include <vector>

#include "excov/qpoly.hpp"
#include "excov/rootdata.hpp"

namespace excov {

// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;  // sum of parts
  int rows() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;
  // hook length of box (i, j), both 1-based
  int hook(int i, int j) const;
  std::string str() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  static std::vector<Partition> all_of(int n);  // decreasing lex order
};

// Closed form for the graded multiplicity of the little adjoint module.
// Throws std::invalid_argument on a simply-laced system.
QPoly bazlov_gm(const RootSystem& rs);

// Degree of the lowest-degree free generator; the two defining branches are
// checked against each other. Throws on simply-laced input.
int n0(const RootSystem& rs);

// The same polynomial assembled from n0 as a finite geometric sum; must agree
// with bazlov_gm coefficientwise.
QPoly bazlov_product_form(const RootSystem& rs);

// Highest weight in A_{n-1} attached to a partition of n: a_i columns of
// length i contribute a_i omega_i, columns of full length n contribute 0.
Weight partition_to_weight(const Partition& p);

// Hook-length formula for graded multiplicities in the exterior algebra of
// sl(n). Non-polynomial output throws std::logic_error.
QPoly stembridge_gm(const Partition& p);

// Poincare polynomial of the invariant subalgebra.
QPoly invariant_poincare(const RootSystem& rs);

struct FreenessVerdict {
  bool divisible = false;
  std::optional<QPoly> quotient;
  bool quotient_nonneg = false;
  std::optional<Int> generator_count;  // quotient at q=1, when meaningful
  Int expected_count = 0;              // 2 * zero weight dimension

  bool passes() const {
    return divisible && quotient_nonneg && generator_count && *generator_count == expected_count;
  }
};

// Attempts exact division of M by the product of (1+q^{2 m_i + 1}) over all
// exponents but the largest.
FreenessVerdict freeness_divisibility(const QPoly& m, const RootSystem& rs, int64_t zero_dim);

// The product of (1+q^{2 m_i + 1}) over exponents m_1..m_{r-1}.
QPoly lower_invariant_product(const RootSystem& rs);

// Pairing identity for normalized Newton power sums in m variables:
// sum_i d(psi_k)/dx_i * d(psi_g)/dx_i == sum_i x_i^{k+g-2}, verified in exact
// multivariate arithmetic.
bool newton_pairing_identity_check(int k, int g, int m);

}  // namespace excov
