#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = regmeasure::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Root {
  Root() { fs::current_path(REGMEASURE_SOURCE_DIR); }
} root;

}  // namespace

TEST_CASE("documented command lines") {
  auto a = run({"density", "--regex", "(a|b)*ab(a|b)*", "--alphabet", "ab"});
  CHECK(a.code == 0);
  CHECK(a.out == "{\"density\":\"1/1\"}\n");
  auto b = run({"measure", "--dfa", "fixtures/counterexample_e.dfa"});
  CHECK(b.code == 0);
  CHECK(b.out == "{\"measurable\":false,\"certificate\":{\"h_class\":[\"e\",\"efe\"]}}\n");
  auto c = run({"density", "--regex", "#", "--alphabet", "ab"});
  CHECK(c.out == "{\"density\":\"0/1\"}\n");
}

TEST_CASE("golden outputs") {
  const bool update = std::getenv("REGMEASURE_UPDATE_GOLDEN") != nullptr;
  std::ifstream cases("tests/golden/cases.txt");
  REQUIRE(cases);
  int count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::string name = split(line.substr(0, bar)).at(0);
    Outcome o = run(split(line.substr(bar + 1)));
    std::string actual = "exit: " + std::to_string(o.code) + "\n" + o.out;
    if (!o.err.empty()) actual += "--- stderr\n" + o.err;
    fs::path golden = fs::path("tests/golden") / (name + ".out");
    if (update) {
      std::ofstream(golden, std::ios::binary) << actual;
    }
    INFO(name);
    CHECK(actual == slurp(golden));
    ++count;
  }
  CHECK(count > 40);
}

TEST_CASE("reports follow the schemas") {
  using nlohmann::json;
  for (const auto& entry : fs::directory_iterator("fixtures")) {
    const std::string path = entry.path().string();
    auto d = run({"density", "--dfa", path});
    REQUIRE(d.code == 0);
    auto dj = json::parse(d.out);
    CHECK(dj["density"].is_string());
    auto c = json::parse(run({"classify", "--dfa", path}).out);
    for (const char* key : {"states", "monoid_size", "star_free", "group", "commutative", "nilpotency_class",
                            "derived_length", "density", "forbidden_word", "sf_measurable"}) {
      CHECK(c.contains(key));
    }
    auto m = json::parse(run({"measure", "--dfa", path}).out);
    CHECK(m["measurable"].is_boolean());
    CHECK(m["certificate"].is_object());
    if (m["measurable"]) {
      auto csv = run({"approximate", "--dfa", path, "--csv"});
      CHECK(csv.code == 0);
      CHECK(csv.out.rfind("ell,inner_density,outer_density,gap,inclusion_verified\n", 0) == 0);
      CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 7);
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"density", "--regex", "a"}).code == 1);
  CHECK(run({"oracle", "--dfa", "fixtures/parity.dfa", "--max-len", "99"}).code == 2);
  CHECK(run({"approximate", "--dfa", "fixtures/counterexample_e.dfa"}).code == 1);
  CHECK(run({"demo-counterexample"}).code == 0);
  CHECK(run({"density", "--dfa", "fixtures/parity.dfa", "--csv"}).code == 1);
}

TEST_CASE("fixture emission is deterministic and matches the corpus") {
  fs::path tmp = fs::temp_directory_path() / "regmeasure_fixture_test";
  fs::remove_all(tmp);
  REQUIRE(run({"emit-fixtures", (tmp / "one").string()}).code == 0);
  REQUIRE(run({"emit-fixtures", (tmp / "two").string()}).code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(tmp / "one")) {
    auto name = entry.path().filename();
    CHECK(slurp(entry.path()) == slurp(tmp / "two" / name));
    CHECK(slurp(entry.path()) == slurp(fs::path("fixtures") / name));
    ++files;
  }
  CHECK(files == 12);
  fs::remove_all(tmp);
}
