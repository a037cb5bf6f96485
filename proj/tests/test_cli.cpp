#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finloc/cli.hpp"

using namespace finloc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "finloc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool keys_sorted(const std::string& line) {
  // the parsed object re-serialises to the same text only when keys are ordered
  return nlohmann::json::parse(line).dump() == line;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"validate", "--frame", "/nonexistent.json"}).code == kExitInput);
  CHECK(run({"verify", "--catalog", "chain:3", "--suite", "deg-*"}).code == kExitOk);
  CHECK(run({"verify", "--catalog", "chain:3", "--suite", "zzz"}).code == kExitInput);
  CHECK(run({"extend", "--catalog", "chain:2", "--id", "chain:3", "--class", "cl"}).code == kExitOk);
  CHECK(run({"extend", "--catalog", "chain:2", "--class", "cl"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("json output is key-ordered and deterministic") {
  const auto a = run({"report", "--catalog", "powerset:2,chain:3"});
  REQUIRE(a.code == kExitOk);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(keys_sorted(line));
    ++count;
  }
  CHECK(count == 4);
  CHECK(run({"report", "--catalog", "powerset:2,chain:3"}).out == a.out);

  const auto g = run({"gc", "--random", "5", "4", "0.5", "--seed", "11"});
  REQUIRE(g.code == kExitOk);
  CHECK(keys_sorted(g.out.substr(0, g.out.size() - 1)));
  CHECK(run({"gc", "--random", "5", "4", "0.5", "--seed", "11"}).out == g.out);
}

TEST_CASE("catalog listing") {
  const auto r = run({"catalog", "--catalog", "powerset:2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("\"id\":\"powerset:2\"") != std::string::npos);
  const auto raw = run({"catalog", "--catalog", "chain:2,powerset:2", "--raw"});
  const auto deduped = run({"catalog", "--catalog", "chain:2,powerset:2"});
  CHECK(raw.out.size() > deduped.out.size());
}
