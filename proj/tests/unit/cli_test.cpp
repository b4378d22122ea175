#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symmp/cli.hpp"
#include "symmp/path_json.hpp"

using namespace symmp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cuplength") {
  Run r = run({"cuplength", "--map", "one-pi-star", "--max", "4"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["length"] == 3);
  CHECK(j["product"] == "alpha⊗mu + beta⊗mu");
  CHECK(j["witness"].size() == 3);
  CHECK(j["kernel_dims"] == Json::array({0, 2, 5, 4, 1}));

  Run p = run({"cuplength", "--map", "torus-to-point"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["length"] == 2);

  CHECK(run({"cuplength", "--map", "nothing"}).code == 2);
  CHECK(run({"cuplength", "--map", "one-pi-star", "--max", "9"}).code == 2);
}

TEST_CASE("plan sphere and plan torus") {
  Run r = run({"plan", "sphere", "--n", "2", "--p", "1,0,0", "--l", "0,0,1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["domain_index"] == 3);
  CHECK(j["domain_count"] == 4);
  CHECK(j["omega"].get<double>() == doctest::Approx(1.5707963267948966));

  Run t = run({"plan", "torus", "--x", "0.2,1.0", "--z", "1.7707963267948966,2.141592653589793"});
  REQUIRE(t.code == 0);
  Json k = Json::parse(t.out);
  CHECK(k["domain"] == "D3");
  CHECK(k["internal_domain"] == "D31");

  CHECK(run({"plan", "sphere", "--n", "3", "--p", "1,0,0", "--l", "0,0,1"}).code == 2);
  CHECK(run({"plan", "sphere", "--n", "0", "--p", "1", "--l", "1"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"plan", "torus", "--x", "0,0", "--z", "0.4,1", "--bogus"}).code == 2);
  CHECK(run({"plan", "torus", "--x", "0,0", "--z", "0.4,1", "--tol", "1e-3"}).code == 2);
  CHECK(run({"plan", "torus", "--x", "0,0", "--z", "0.4,1", "--tol", "1e-20"}).code == 2);
  CHECK(run({"plan", "torus", "--x", "0,0", "--z", "0.4,1", "--arith-tol", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("csv output") {
  Run r = run({"plan", "torus", "--x", "0,0", "--z", "0.4,1.0", "--format", "csv", "--samples", "5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,c0,c1");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "symmp_cli_test_out.json";
  std::filesystem::remove(path);
  Run r = run({"verify", "--suite", "sections", "--samples", "50", "--seed", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  Json j = Json::parse(slurp(path));
  CHECK(j["suite"] == "sections");
  CHECK(j["passed"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("seed falls back to the environment variable") {
  Run with_flag = run({"verify", "--suite", "partition", "--samples", "50", "--seed", "77"});
  ::setenv("SYMM_MP_SEED", "77", 1);
  Run from_env = run({"verify", "--suite", "partition", "--samples", "50"});
  Run flag_wins = run({"verify", "--suite", "partition", "--samples", "50", "--seed", "78"});
  ::setenv("SYMM_MP_SEED", "seventy", 1);
  Run bad_env = run({"verify", "--suite", "partition", "--samples", "50"});
  ::unsetenv("SYMM_MP_SEED");
  CHECK(from_env.code == 0);
  CHECK(from_env.out == with_flag.out);
  CHECK(Json::parse(flag_wins.out)["seed"] == 78);
  CHECK(bad_env.code == 2);
}

TEST_CASE("injected faults exit 1") {
  for (std::string space : {"torus", "sphere"}) {
    for (std::string suite : {"partition", "sections", "continuity"}) {
      CAPTURE(suite);
      Run r = run({"verify", "--suite", suite, "--space", space, "--n", "3", "--samples", "20", "--inject-fault"});
      CHECK(r.code == 1);
      CHECK(Json::parse(r.out)["passed"] == false);
    }
    Run i = run({"identities", "--space", space, "--n", "3", "--count", "20", "--inject-fault"});
    CHECK(i.code == 1);
  }
}

TEST_CASE("reruns are byte-identical") {
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "--suite", "partition", "--samples", "300", "--seed", "5"},
      {"verify", "--suite", "continuity", "--space", "sphere", "--n", "7", "--samples", "5", "--seed", "5"},
      {"identities", "--count", "50", "--seed", "5"},
      {"plan", "sphere", "--n", "3", "--p", "0.5,0.5,0.5,0.5", "--l", "0,1,0,0"},
  };
  for (const auto& c : cmds) {
    Run a = run(c);
    Run b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
