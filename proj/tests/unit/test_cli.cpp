#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "feitlab/chartab.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "feitlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = feitlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "feitlab_test_cli";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

const std::string kData = FEITLAB_DATA_DIR;

}  // namespace

TEST_CASE("table") {
  const Result r = run({"table", "cyclic:5", "--json"});
  REQUIRE(r.code == 0);
  const feitlab::CharacterTable t = feitlab::load_table(r.out);
  CHECK(t.num_characters() == 5);
  CHECK(feitlab::save_table(t) == r.out);

  const Result s5 = run({"table", "perm:[(1,2,3,4,5),(1,2)]", "--json"});
  REQUIRE(s5.code == 0);
  const feitlab::CharacterTable t5 = feitlab::load_table(s5.out);
  std::vector<feitlab::Int> degrees;
  for (std::size_t i = 0; i < t5.num_characters(); ++i) degrees.push_back(t5.degree(i));
  CHECK(degrees == std::vector<feitlab::Int>{1, 1, 4, 4, 5, 5, 6});

  CHECK(run({"table", "sym:3"}).code == 0);
  CHECK(run({"table", "nonsense:3"}).code == 2);
  CHECK(run({"table", kData + "/tables/alt5.json", "--json"}).out ==
        feitlab::save_table(feitlab::compute_table(feitlab::alternating(5))));
}

TEST_CASE("s") {
  Result r = run({"s", "cyclic:5", "--chi", "1", "--n", "5", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["S"] == 1);
  r = run({"s", "sym:3", "--chi", "0", "--n", "1", "--json"});
  CHECK(json::parse(r.out)["S"] == 1);
  r = run({"s", "sym:3", "--chi", "2", "--n", "6", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["S"] == 0);
  CHECK(json::parse(r.out)["witness"].is_null());

  r = run({"s", "sym:3", "--chi", "2", "--n", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("does not divide exp(G) = 6") != std::string::npos);
  CHECK(run({"s", "sym:3", "--chi", "3", "--n", "1"}).code == 2);
  CHECK(run({"s", "sym:3", "--n", "1"}).code == 2);
}

TEST_CASE("feit") {
  Result r = run({"feit", "cyclic:12", "--all", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["reports"].size() == 12);
  for (const auto& rec : j["reports"]) CHECK(rec["F"] == 1);
  r = run({"feit", "sym:4", "--all", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("group,chi_index,degree,conductor,F,witness_class,witness_order\n", 0) == 0);
  CHECK(run({"feit", "alt:5", "--all"}).code == 0);
}

TEST_CASE("verify") {
  for (const char* spec : {"sym:3", "cyclic:8"}) {
    const Result r = run({"verify", spec, "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    for (const auto& c : j["checks"]) CHECK((c["passed"] == true || c["skipped"] == true));
  }
  const Result big = run({"verify", "sym:5", "--json"});
  CHECK(big.code == 0);
  bool skipped = false;
  const json big_json = json::parse(big.out);
  for (const auto& c : big_json["checks"])
    if (c["name"].get<std::string>().rfind("oracle-", 0) == 0) skipped = c["skipped"] == true;
  CHECK(skipped);
  CHECK(run({"verify", "sym:3", "--oracle-bound", "61"}).code == 2);
}

TEST_CASE("verify is deterministic") {
  CHECK(run({"verify", "dihedral:8", "--json"}).out == run({"verify", "dihedral:8", "--json"}).out);
}

TEST_CASE("corpus") {
  const fs::path dir = scratch_dir();
  SUBCASE("empty") {
    write(dir / "empty.json", R"({"entries": []})");
    const Result r = run({"corpus", (dir / "empty.json").string(), "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["entries"].empty());
    CHECK(j["summary"]["failed"] == 0);
  }
  SUBCASE("corrupted table entry") {
    json bad = json::parse(feitlab::save_table(feitlab::compute_table(feitlab::symmetric(3))));
    bad["irreducibles"][2][2] = 1;
    write(dir / "bad.json", bad.dump());
    write(dir / "corpus.json", R"({"entries": ["bad.json", "sym:3", "cyclic:4"], "oracle_bound": 24})");
    const Result r = run({"corpus", (dir / "corpus.json").string(), "--json", "--jobs", "2"});
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0].contains("error"));
    CHECK(j["entries"][0]["error"].get<std::string>().find("row-orthogonality") != std::string::npos);
    CHECK(j["entries"][1]["all_checks_passed"] == true);
    CHECK(j["entries"][2]["all_checks_passed"] == true);
    CHECK(j["summary"]["failed"] == 1);
  }
  SUBCASE("output file and csv") {
    write(dir / "two.json", R"({"entries": ["sym:3", "cyclic:3"], "format": "csv"})");
    const fs::path out = dir / "two.csv";
    const Result r = run({"corpus", (dir / "two.json").string(), "-o", out.string()});
    CHECK(r.code == 0);
    std::ifstream f(out);
    std::string line;
    std::getline(f, line);
    CHECK(line ==
          "group,order,chi_index,degree,conductor,S_at_conductor,witness_class,witness_order,oracle_checked,"
          "all_checks_passed");
    int lines = 1;
    while (std::getline(f, line)) ++lines;
    CHECK(lines == 1 + 3 + 3);
  }
  CHECK(run({"corpus", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("oracle bound from the environment") {
  ::setenv("FEITLAB_ORACLE_BOUND", "4", 1);
  const json j = json::parse(run({"verify", "sym:3", "--json"}).out);
  ::unsetenv("FEITLAB_ORACLE_BOUND");
  bool skipped = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "oracle-chains") skipped = c["skipped"] == true;
  CHECK(skipped);
}
