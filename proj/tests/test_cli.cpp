#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sumset/cli.hpp"
#include "sumset/integer_set.hpp"
#include "sumset/sumset_engine.hpp"

using namespace sumset;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sumset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
  const Run human = run({"compute", "--set", "1,2", "--h", "2"});
  CHECK(human.code == kExitOk);
  CHECK(human.out.find("sumset:      {-3,-1,1,3}") != std::string::npos);

  const Run js = run({"compute", "--set", "0,1,2,4,6", "--h", "4", "--kind", "restricted-signed", "--format", "json"});
  REQUIRE(js.code == kExitOk);
  const json doc = json::parse(js.out);
  CHECK(doc["cardinality"] == 21);
  // The emitted literal reproduces the reported size.
  const auto again = restricted_signed_sumset(parse_set(doc["set"].get<std::string>()), doc["h"].get<int>());
  CHECK(again.sums.size() == doc["cardinality"].get<std::size_t>());
  CHECK(parse_set(doc["sumset"].get<std::string>()) == again.sums);

  CHECK(run({"compute", "--set", "1,2", "--h", "2", "--oracle"}).out.find("{-3,-1,1,3}") != std::string::npos);
  CHECK(run({"compute", "--set", "0,1,3", "--h", "2", "--kind", "ordinary", "--format", "csv"}).out ==
        "set,kind,h,k,cardinality,sumset\n\"0,1,3\",ordinary,2,3,6,\"0,1,2,3,4,6\"\n");

  CHECK(run({"compute", "--set", "0,1", "--h", "5"}).code == kExitInfeasible);
  CHECK(run({"compute", "--set", "0,x", "--h", "2"}).code == kExitUsage);
  CHECK(run({"compute", "--set", "1,1", "--h", "1"}).code == kExitUsage);
  CHECK(run({"compute", "--set", "1,2", "--h", "1", "--kind", "weird"}).code == kExitUsage);
  CHECK(run({"compute", "--set", "1,2"}).code == kExitUsage);
  CHECK(run({"compute", "--set", "1,2", "--h", "2", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("oracle budget from the environment") {
  ::setenv("SUMSET_ORACLE_BUDGET", "4", 1);
  CHECK(run({"compute", "--set", "0,1,2,3", "--h", "2", "--oracle"}).code == kExitInfeasible);
  ::unsetenv("SUMSET_ORACLE_BUDGET");
  CHECK(run({"compute", "--set", "0,1,2,3", "--h", "2", "--oracle"}).code == kExitOk);
}

TEST_CASE("bound") {
  const Run r = run({"bound", "--kind", "NonnegMidRange", "--h", "4", "--k", "6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "29\n");
  CHECK(run({"bound", "--kind", "HPlusOneCase", "--h", "5", "--k", "6"}).out == "31\n");
  CHECK(json::parse(run({"bound", "--kind", "restricted-direct", "--h", "2", "--k", "5", "--format", "json"}).out)["value"] ==
        7);
  CHECK(run({"bound", "--kind", "NonnegMidRange", "--h", "4", "--k", "4"}).code == kExitInfeasible);
  CHECK(run({"bound", "--kind", "Mystery", "--h", "4", "--k", "6"}).code == kExitUsage);
}

TEST_CASE("check and classify") {
  const Run check = run({"check", "--set", "0,1,2,3,4", "--h", "4"});
  CHECK(check.code == kExitOk);
  CHECK(check.out.find("NonnegMidRange: bound 21, actual 21 (equality)") != std::string::npos);
  CHECK(json::parse(run({"check", "--set", "-4,-1,0,2,3", "--h", "4", "--format", "json"}).out)["abs_reduced"] ==
        true);

  const Run cls = run({"classify", "--set", "0,2,4,8,12"});
  CHECK(cls.code == kExitOk);
  CHECK(cls.out == "ExceptionalH4K5(2)\n");
  CHECK(run({"classify", "--set", "0,1,2,3,5"}).out == "Other\n");
  CHECK(run({"classify", "--set", ""}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run direct = run({"verify", "--h", "4", "--k", "5", "--max", "12", "--constraint", "zero", "--mode", "direct",
                          "--jobs", "4", "--format", "json"});
  REQUIRE(direct.code == kExitOk);
  const json doc = json::parse(direct.out);
  REQUIRE(doc["equality_cases"].size() == 2);
  CHECK(doc["equality_cases"][0]["set"] == "0,1,2,3,4");
  CHECK(doc["equality_cases"][1]["set"] == "0,1,2,4,6");

  const Run csv = run({"verify", "--h", "3", "--k", "5", "--max", "10", "--mode", "inverse", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("set,h,bound,actual,classes,prediction_matched\n", 0) == 0);

  CHECK(run({"verify", "--h", "6", "--k", "5", "--max", "10"}).code == kExitUsage);
  CHECK(run({"verify", "--h", "3", "--k", "5", "--max", "10", "--constraint", "odd"}).code == kExitUsage);
  CHECK(run({"verify", "--h", "3", "--k", "5", "--max", "10", "--mode", "sideways"}).code == kExitUsage);
  CHECK(run({"verify", "--h", "3", "--k", "4", "--max", "10", "--constraint", "positive"}).code == kExitOk);
}

TEST_CASE("verify with a checkpoint resumes where it stopped") {
  const auto path = std::filesystem::temp_directory_path() / "sumset_cli_checkpoint.json";
  std::filesystem::remove(path);
  const std::vector<std::string> base = {"verify", "--h", "4", "--k", "5", "--max", "9",
                                         "--limit", "40", "--checkpoint", path.string(), "--format", "json"};
  std::uint64_t total = 0;
  std::vector<std::string> equality;
  for (int round = 0; round < 100; ++round) {
    const Run r = run(base);
    REQUIRE(r.code == kExitOk);
    const json doc = json::parse(r.out);
    total += doc["sets_checked"].get<std::uint64_t>();
    for (const auto& e : doc["equality_cases"]) equality.push_back(e["set"]);
    if (!doc["partial"].get<bool>()) break;
  }
  const json full = json::parse(run({"verify", "--h", "4", "--k", "5", "--max", "9", "--format", "json"}).out);
  CHECK(total == full["sets_checked"].get<std::uint64_t>());
  CHECK(equality == std::vector<std::string>{"0,1,2,3,4", "0,1,2,4,6"});

  // A cursor from another search is refused.
  CHECK(run({"verify", "--h", "3", "--k", "5", "--max", "9", "--checkpoint", path.string()}).code == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("fixtures and usage") {
  const Run fx = run({"fixtures", "--format", "json"});
  CHECK(fx.code == kExitOk);
  CHECK(json::parse(fx.out)["all_passed"] == true);
  CHECK(run({"fixtures"}).out.find("FAIL") == std::string::npos);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"compute", "--help"}).code == kExitOk);
}
