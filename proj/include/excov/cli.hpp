#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "excov/census.hpp"
#include "excov/gradedchar.hpp"
#include "excov/qpoly.hpp"
#include "excov/rootdata.hpp"

namespace excov::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

// One report per invocation. JSON output is deterministic except for the
// runtime_ms field.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::pair<std::string, QPoly>> polys;  // named polynomial results
  std::vector<Check> checks;
  int64_t runtime_ms = 0;
  std::optional<uint64_t> seed;

  bool ok() const;
  Json to_json() const;
  std::string to_text() const;
  std::string to_latex() const;
};

Json poly_json(const QPoly& p);

// On-disk store for character expansions, keyed by (type, rank, mode) and a
// format version. Loads validate a checksum; mismatches force a recompute.
class CharCache {
 public:
  static constexpr int kFormatVersion = 1;

  CharCache() = default;  // disabled
  explicit CharCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  std::string path_for(const RootSystem& rs, CharMode mode) const;
  std::optional<GradedCharacter> load(const RootSystem& rs, CharMode mode) const;
  void store(const GradedCharacter& chr) const;  // write-then-rename

 private:
  std::string dir_;
};

// Cache-aware character construction.
GradedCharacter obtain_character(const RootSystem& rs, CharMode mode, const CharCache& cache,
                                 GradedCharacter::Options opt = {});

// Exit codes: 0 all checks hold, 1 a mathematical discrepancy was found,
// 2 usage or budget error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace excov::cli
