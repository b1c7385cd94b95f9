#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "excov/rootdata.hpp"

namespace excov {

struct WeylBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeylElement {
  std::vector<int64_t> matrix;  // rank x rank row-major, acts on fundamental coordinates
  std::vector<int> word;        // reduced expression, simple-reflection indices
  int sign = 1;
};

// Full enumeration of W, breadth-first over words, identity first.
class WeylGroup {
 public:
  static WeylGroup generate(const RootSystem& rs, int64_t budget = 10000000);

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  int rank() const { return rank_; }

  Weight apply(const WeylElement& w, const Weight& mu) const;
  std::vector<Weight> orbit(const Weight& mu) const;  // sorted lexicographically

 private:
  int rank_ = 0;
  std::vector<WeylElement> elems_;
};

}  // namespace excov
