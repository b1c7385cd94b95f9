#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "excov/qpoly.hpp"
#include "excov/rootdata.hpp"

namespace excov {

enum class CharMode { Full, Targeted };

struct CharBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CharOptions {
  int max_full_rank = 4;
};

// Coefficient counts by exterior degree, index 0 = degree 0.
using DegCounts = std::vector<int64_t>;

// The weight-graded character of the exterior algebra of g: every weight's
// coefficient is a polynomial in q recording exterior degrees.
//
// Full mode stores the complete expansion over all of Delta plus the Cartan
// factor. Targeted mode stores only the expansion over Delta+; a coefficient
// query correlates that half against its own negation, so no full expansion
// is ever materialized (the rank-5 systems stay well out of memory trouble).
class GradedCharacter {
 public:
  using Options = CharOptions;

  static GradedCharacter build(const RootSystem& rs, CharMode mode, CharOptions opt = CharOptions());

  CharMode mode() const { return mode_; }
  const RootSystem& root_system() const { return rs_; }

  QPoly coefficient(const Weight& mu) const;
  // W-invariant lookup: canonicalizes to the dominant representative and
  // memoizes. Same values as coefficient(), cheaper under repeated queries.
  QPoly coefficient_cached(const Weight& mu) const;

  // Full-mode only: the stored support, sorted by weight.
  std::vector<std::pair<Weight, QPoly>> support() const;
  Int total_at_one() const;

  struct Payload {
    CharMode mode = CharMode::Full;
    std::vector<std::pair<std::vector<int64_t>, DegCounts>> entries;  // sorted by weight
  };
  Payload payload() const;
  static GradedCharacter restore(const RootSystem& rs, const Payload& p);

 private:
  using Key = uint64_t;
  using Map = std::unordered_map<Key, DegCounts>;

  GradedCharacter(const RootSystem& rs, CharMode mode) : rs_(rs), mode_(mode) {}

  Key key_of(const Weight& w) const;
  Weight weight_of(Key k) const;
  bool in_support_box(const Weight& w) const;
  static Map expand_product(const RootSystem& rs, const std::vector<Weight>& roots);
  void finish_build();
  QPoly raw_coefficient(const Weight& mu) const;  // before the Cartan factor

  RootSystem rs_;
  CharMode mode_;
  Map table_;  // full: all of Lambda g including Cartan factor; targeted: Delta+ half
  std::vector<int64_t> box_min_, box_max_;  // support bounds of the full character
  DegCounts cartan_factor_;                 // binomial row (1+q)^r, used in targeted mode
  mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
  mutable std::unordered_map<Key, QPoly> dom_cache_;
};

}  // namespace excov
