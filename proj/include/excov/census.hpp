#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "excov/closedforms.hpp"
#include "excov/gradedchar.hpp"
#include "excov/repthy.hpp"
#include "excov/rootdata.hpp"

namespace excov {

struct MarginCertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RowClass { Trivial, Adjoint, LittleAdjoint, SymmetricPower, SymmetricPowerDual, Other };
const char* row_class_name(RowClass c);

struct CensusRow {
  Weight weight;
  Int dim = 0;
  int64_t zero_weight_dim = 0;
  QPoly gm;
  bool reeder_ok = false;
  FreenessVerdict verdict;
  RowClass cls = RowClass::Other;
  bool passes = false;
};

struct CensusReport {
  LieType type{};
  int rank = 0;
  int box_bound = 0;
  bool complete = true;
  std::string note;
  std::vector<CensusRow> rows;  // sorted by (dim, weight)

  std::vector<Weight> passing_weights() const;  // lexicographically sorted
};

// All dominant root-lattice weights in the coordinate box [0, box_bound]^r
// that satisfy the smallness criterion, sorted by dimension then weight.
// A small weight with any coordinate above box_bound - 2 fails the margin
// certificate and raises MarginCertificateError.
std::vector<Weight> enumerate_small_weights(const RootSystem& rs, int box_bound = 10);

struct CensusOptions {
  int box_bound = 10;
  int max_box_bound = 24;  // automatic escalation limit
  std::optional<CharMode> mode;  // default: full for small systems, targeted otherwise
  int max_full_rank = 4;         // rank cap for full-mode expansion
  double budget_seconds = 0;     // 0 = unlimited
  int jobs = 1;
};

CensusReport run_census(const RootSystem& rs, const CensusOptions& opt = {});

struct ScanARow {
  Partition partition;
  Weight weight;
  QPoly gm;
  bool divisible = false;
  bool expected_divisible = false;

  bool ok() const { return divisible == expected_divisible; }
};

struct ScanAReport {
  int n = 0;
  std::vector<ScanARow> rows;
  bool all_ok() const;
};

// Divisibility scan over all partitions of n except the trivial column.
ScanAReport type_a_partition_scan(int n);

// The weights whose covariants are free: trivial, adjoint, little adjoint
// when present, plus the two n-th symmetric powers in type A.
std::vector<Weight> expected_passing_weights(const RootSystem& rs);

}  // namespace excov
