#pragma once

#include <map>
#include <optional>

#include "excov/gradedchar.hpp"
#include "excov/rootdata.hpp"
#include "excov/weyl.hpp"

namespace excov {

struct IrrepInfo {
  Weight highest_weight;
  Int dim = 0;
  std::map<Weight, int64_t> weight_mults;  // every weight, not just the dominant ones
  int64_t zero_weight_dim = 0;

  int64_t mult(const Weight& w) const {
    auto it = weight_mults.find(w);
    return it == weight_mults.end() ? 0 : it->second;
  }
};

// Weyl dimension formula; cheap, no weight system needed.
Int weyl_dimension(const RootSystem& rs, const Weight& lam);

// Freudenthal recursion, cross-checked against the Weyl dimension formula.
// Throws std::invalid_argument if lam is not dominant.
IrrepInfo irrep_info(const RootSystem& rs, const Weight& lam);

struct SmallnessResult {
  bool small = false;
  std::optional<Weight> witness;  // a dominant root eta with lam >= 2*eta
};

// Criterion test: lam is small iff lam >= 2*eta fails for every dominant root
// eta (theta, and theta_s when present). With cross_check set, also verifies
// the definitional test (no weight of L(lam) equals twice a root) and insists
// the two agree.
SmallnessResult is_small(const RootSystem& rs, const Weight& lam, bool cross_check = false);

// Graded multiplicity of L(lam) in the exterior algebra, by the alternating
// Weyl sum over coefficients of chr. Nonnegativity of the result is a
// theorem; its failure throws std::logic_error.
QPoly graded_multiplicity(const RootSystem& rs, const WeylGroup& weyl, const Weight& lam,
                          const GradedCharacter& chr);

}  // namespace excov
