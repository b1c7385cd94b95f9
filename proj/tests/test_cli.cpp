#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "excov/cli.hpp"

using namespace excov;
using excov::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_runtime(std::string s) {
  return std::regex_replace(s, std::regex("\"runtime_ms\": \\d+"), "\"runtime_ms\": 0");
}

}  // namespace

TEST_CASE("gm subcommand and exit codes") {
  const Run r = run({"gm", "--type", "A", "--rank", "1", "--weight", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q + q^2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"roots", "--type", "D", "--rank", "2"}).code == 2);
  CHECK(run({"gm", "--type", "A", "--rank", "2", "--weight", "1,-1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"census", "--type", "A", "--rank", "2", "--full", "--targeted"}).code == 2);
  // Weyl/character budget refusals
  CHECK(run({"roots", "--type", "E", "--rank", "9"}).code == 2);
  CHECK(run({"gm", "--type", "B", "--rank", "5", "--weight", "1,0,0,0,0", "--full"}).code == 2);
  CHECK(run({"gm", "--type", "E", "--rank", "6", "--weight", "1,0,0,0,0,0"}).code == 2);
}

TEST_CASE("bazlov three ways on G2") {
  const Run r = run({"--format", "json", "bazlov", "--type", "G", "--rank", "2"});
  CHECK(r.code == 0);
  const auto j = cli::Json::parse(r.out);
  CHECK(j["results"]["closed_form"] == cli::Json::parse("[[5,1],[6,1],[8,1],[9,1]]"));
  CHECK(j["results"]["oracle"] == j["results"]["closed_form"]);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "ok");
}

TEST_CASE("json reports are deterministic modulo runtime") {
  const std::vector<std::string> args{"--format", "json", "verify-sl", "--n",
                                      "2",        "--trials", "5",       "--seed", "42"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
  const auto j = cli::Json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["results"]["constant_measured"] == "-1/2");
}

TEST_CASE("latex format renders polynomials in paper style") {
  const Run r = run({"--format", "latex", "bazlov", "--type", "B", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q^{3}+q^{4}+q^{6}+q^{7}") != std::string::npos);
}

TEST_CASE("cache round trip is transparent and checksummed") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "excov-cache-test";
  fs::remove_all(dir);

  const std::vector<std::string> args{"--format", "json",  "--cache-dir", dir.string(),
                                      "gm",       "--type", "B",          "--rank",
                                      "2",        "--weight", "0,2"};
  const Run cold = run(args);
  CHECK(cold.code == 0);
  // cache file exists now
  bool found = false;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") found = true;
    CHECK(e.path().string().find(".tmp") == std::string::npos);
  }
  CHECK(found);
  const Run warm = run(args);
  CHECK(strip_runtime(cold.out) == strip_runtime(warm.out));

  SUBCASE("corrupted cache is ignored, not trusted") {
    for (const auto& e : fs::directory_iterator(dir)) {
      std::ofstream f(e.path(), std::ios::trunc);
      f << "{\"version\": 1}";
    }
    const Run again = run(args);
    CHECK(again.code == 0);
    CHECK(strip_runtime(again.out) == strip_runtime(cold.out));
  }
  fs::remove_all(dir);
}

TEST_CASE("charcache rejects tampered payloads via the checksum") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "excov-cache-tamper";
  fs::remove_all(dir);
  const cli::CharCache cache(dir.string());
  const RootSystem rs = RootSystem::build(LieType::B, 2);
  cache.store(GradedCharacter::build(rs, CharMode::Targeted));
  REQUIRE(cache.load(rs, CharMode::Targeted).has_value());
  CHECK(!cache.load(rs, CharMode::Full).has_value());

  const std::string path = cache.path_for(rs, CharMode::Targeted);
  {
    std::ifstream in(path);
    auto j = cli::Json::parse(in);
    j["entries"][0][1][0] = j["entries"][0][1][0].get<int64_t>() + 1;
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  CHECK(!cache.load(rs, CharMode::Targeted).has_value());

  // stale format version is likewise refused
  cache.store(GradedCharacter::build(rs, CharMode::Targeted));
  {
    std::ifstream in(path);
    auto j = cli::Json::parse(in);
    j["version"] = cli::CharCache::kFormatVersion + 1;
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  CHECK(!cache.load(rs, CharMode::Targeted).has_value());
  fs::remove_all(dir);
}

TEST_CASE("census command reports the expected pass set") {
  const Run r = run({"--format", "json", "census", "--type", "C", "--rank", "2"});
  CHECK(r.code == 0);
  const auto j = cli::Json::parse(r.out);
  bool saw = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "passes_match_expected") {
      saw = true;
      CHECK(c["status"] == "ok");
    }
  CHECK(saw);
}

TEST_CASE("scan-a and verify-sl smoke") {
  CHECK(run({"scan-a", "--n", "4"}).code == 0);
  CHECK(run({"verify-sl", "--n", "2", "--trials", "3", "--seed", "1"}).code == 0);
  // seed is mandatory
  CHECK(run({"verify-sl", "--n", "2", "--trials", "3"}).code == 2);
}

TEST_CASE("forced targeted mode agrees with the full default") {
  const Run full = run({"--format", "json", "gm", "--type", "B", "--rank", "3", "--weight",
                        "1,0,0", "--full"});
  const Run targeted = run({"--format", "json", "gm", "--type", "B", "--rank", "3", "--weight",
                            "1,0,0", "--targeted"});
  REQUIRE(full.code == 0);
  REQUIRE(targeted.code == 0);
  const auto jf = cli::Json::parse(full.out);
  const auto jt = cli::Json::parse(targeted.out);
  CHECK(jf["results"]["graded_multiplicity"] == jt["results"]["graded_multiplicity"]);
  CHECK(jf["results"]["mode"] == "full");
  CHECK(jt["results"]["mode"] == "targeted");
}

TEST_CASE("selftest passes") { CHECK(run({"selftest"}).code == 0); }
