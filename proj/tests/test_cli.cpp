#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "axkatz/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = axkatz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("axkatz_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("cli conjugate") {
  const Result r = run({"conjugate", "--parts", "3,2,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[4,3,1]\n");
}

TEST_CASE("cli bound") {
  const Result r = run({"bound", "--p", "2", "--alpha", "1,1,1", "--targets", "1:2"});
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["bound"] == 1);
  const Result s = run({"bound", "--p", "2", "--alpha", "2,1", "--targets", "1:1"});
  CHECK(json_of(s)["bound"] == 2);
  CHECK(json_of(s)["case"] == "first");
  const Result shape = run({"bound", "--p", "2", "--alpha", "2,2", "--target-shape", "4,2:3"});
  REQUIRE(shape.code == 0);
  CHECK(json_of(shape)["targets"].size() == 2);
  const Result multi = run({"bound", "--domain", "2,2,2,3", "--target-shape", "2:2"});
  REQUIRE(multi.code == 0);
  CHECK(json_of(multi)["primes"]["2"]["bound"] == 1);
  CHECK(json_of(multi)["primes"]["3"]["empty_system"] == true);
}

TEST_CASE("cli numeric queries") {
  CHECK(json_of(run({"vp", "--p", "2", "--alpha", "2,1", "--D", "0"}))["value"] == 3);
  CHECK(json_of(run({"vp", "--p", "2", "--alpha", "6,5,3,1", "--D", "18"}))["value"] == 6);
  CHECK(json_of(run({"vp", "--p", "2", "--alpha", "6,5,3,1", "--D", "inf"}))["value"] == 0);
  CHECK(json_of(run({"delta", "--p", "2", "--alpha", "2,1", "--beta", "2"}))["delta"] == 6);
  CHECK(json_of(run({"nu", "--p", "2", "--alpha", "2,1", "--n", "1,0"}))["nu"] == 2);
  CHECK(json_of(run({"nu", "--p", "2", "--alpha", "2,1", "--n", "4,0"}))["nu"] == "inf");
}

TEST_CASE("cli map files") {
  const std::string f = write_temp("parity.json", R"({"domain":[4],"codomain":[2],"values":[[0],[1],[0],[1]]})");
  const std::string g = write_temp("mixed.json", R"({"domain":[2],"codomain":[3],"values":[[0],[1]]})");
  const std::string z = write_temp("zero.json", R"({"domain":[4],"codomain":[2],"values":[[0],[0],[0],[0]]})");
  CHECK(json_of(run({"fdeg", "--map", f}))["fdeg"] == 1);
  CHECK(json_of(run({"fdeg", "--map", g}))["fdeg"] == "inf");
  CHECK(json_of(run({"fdeg", "--map", z}))["fdeg"] == "-inf");
  const Result zc = run({"zeros", "--maps", f + "," + f});
  CHECK(json_of(zc)["count"] == 2);
  CHECK(json_of(zc)["ord"]["2"] == 1);
  const Result tr = run({"trace", "--maps", f, "--beta", "2"});
  CHECK(tr.code == 0);
  CHECK(json_of(tr)["ord_integral"] == 1);
  const Result vm = run({"verify", "--maps", f});
  CHECK(vm.code == 0);
  CHECK(json_of(vm)["pass"] == true);
  CHECK(run({"verify", "--maps", z}).code == 2);
}

TEST_CASE("cli verify") {
  const Result r = run({"verify", "--p", "2", "--alpha", "2,1", "--targets", "1:1", "--mode", "exhaustive"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["pass"] == true);
  const Result s1 = run({"verify", "--p", "2", "--alpha", "2,1", "--targets", "1:2", "--mode", "sampled",
                         "--seed", "7", "--samples", "200"});
  const Result s2 = run({"verify", "--p", "2", "--alpha", "2,1", "--targets", "1:2", "--mode", "sampled",
                         "--seed", "7", "--samples", "200", "--serial"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(run({"verify", "--p", "2", "--alpha", "3,3", "--targets", "2:1", "--cap", "100"}).code == 2);
}

TEST_CASE("cli scan") {
  const Result csv = run({"scan", "--primes", "2,3", "--alphas", "2,1;1,1,1", "--targets-family", "1:1;1:2,2:1"});
  REQUIRE(csv.code == 0);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "p,alpha,targets,A,B,Abreve,case,bound");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
  CHECK(csv.out.find("2,\"2,1\",1:1,4,1,2,first,2\n") != std::string::npos);
  const Result js = run({"scan", "--max-alpha", "3", "--format", "json"});
  REQUIRE(js.code == 0);
  CHECK(json_of(js).size() == 6);
  CHECK(run({"scan", "--max-alpha", "6", "--limit", "3"}).code == 2);
}

TEST_CASE("cli polybound") {
  const Result r = run({"polybound", "--m", "4", "--n", "10", "--degrees", "2"});
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["primes"]["2"]["bound"] == 6);
  const std::string s = write_temp("poly.json",
                                   R"({"modulus":2,"vars":3,"polys":[{"degree":2,"terms":[[1,[1,1,0]],[1,[0,0,1]]]}]})");
  const Result c = run({"polybound", "--system", s});
  CHECK(c.code == 0);
  CHECK(json_of(c)["count"] == 4);
}

TEST_CASE("cli errors exit 2 with a message") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"nonsense"},
      {"bound", "--p", "4", "--alpha", "2", "--targets", "1:1"},
      {"bound", "--p", "2", "--alpha", "2,x", "--targets", "1:1"},
      {"bound", "--p", "2", "--alpha", "2", "--targets", "1-1"},
      {"bound", "--p", "2", "--alpha", "2"},
      {"vp", "--p", "2", "--alpha", "2", "--D", "-1"},
      {"conjugate", "--parts", "0,1"},
      {"fdeg", "--map", "/nonexistent/file.json"},
      {"fdeg", "--map", write_temp("broken.json", "{not json")},
      {"fdeg", "--map", write_temp("short.json", R"({"domain":[4],"codomain":[2],"values":[[0]]})")},
      {"fdeg", "--map", write_temp("range.json", R"({"domain":[2],"codomain":[2],"values":[[0],[5]]})")},
      {"delta", "--p", "2", "--alpha", "1", "--beta", "0"},
      {"scan", "--format", "xml", "--max-alpha", "2"},
      {"polybound", "--m", "4"},
      {"verify", "--p", "2", "--alpha", "1", "--targets", "1:1", "--mode", "fast"},
  };
  for (const auto& args : bad) {
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
}
