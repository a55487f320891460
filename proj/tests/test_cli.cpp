#include "liegiambelli/cli.hpp"
#include "liegiambelli/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using liegiambelli::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = liegiambelli::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("locus in latex") {
  const auto r = run({"locus", "--n", "2", "--m", "4", "--growth", "2,2,4", "--format", "latex"});
  CHECK(r.status == 0);
  CHECK(r.out == "w_2(M)+w_2(V)+w_1(V)^2\n");
}

TEST_CASE("locus in json") {
  const auto r = run({"locus", "--m", "4", "--growth", "2,2,3,4", "--format", "json", "--form", "mu"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["growth"] == Json::array({2, 2, 3, 4}));
  CHECK(j["reduced"] == Json::array({2, 3}));
  CHECK(j["lambda"] == Json::array({2, 1}));
  CHECK(j["mu"] == Json::array({2, 1}));
  CHECK(j["cd"] == 3);
  CHECK(j["latex"] == "w_3(M)+w_1(M)w_2(M)+w_2(M)w_1(V)+w_1(V)^3");
}

TEST_CASE("locus errors") {
  CHECK(run({"locus", "--m", "4", "--growth", "2,5"}).status == 1);
  CHECK(run({"locus", "--n", "3", "--m", "4", "--growth", "2,2,4"}).status == 1);
  CHECK(run({"locus", "--m", "4", "--growth", "2,x"}).status == 2);
  CHECK(run({"locus", "--m", "4", "--growth", "2,2,4", "--form", "nu"}).status == 2);
}

TEST_CASE("dims") {
  const auto r = run({"dims", "--n", "2", "--kmax", "5", "--format", "json"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  std::vector<int> d;
  for (const auto& row : j["rows"]) d.push_back(row["d"].get<int>());
  CHECK(d == std::vector<int>{2, 1, 2, 3, 6});
  CHECK(j["rows"][4]["cumulative"] == 14);

  const auto text = run({"dims", "--n", "2", "--kmax", "5", "--m", "4"});
  CHECK(text.status == 0);
  CHECK(text.out.find("dim_jets") != std::string::npos);
  CHECK(run({"dims", "--n", "2", "--kmax", "5", "--format", "latex"}).out.find("\\begin{tabular}") == 0);
}

TEST_CASE("hall") {
  const auto r = run({"hall", "--n", "2", "--kmax", "5", "--format", "json"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["words"].size() == 14);
  CHECK(j["words"][2]["word"] == "(u,v)");
  const auto deep = Json::parse(run({"hall", "--n", "2", "--kmax", "5", "--max-depth-only", "--format", "json"}).out);
  for (const auto& w : deep["words"]) CHECK(w["depth"] == w["length"]);
}

TEST_CASE("chern") {
  CHECK(run({"chern", "--n", "2", "--k", "2", "--order", "4"}).out == "1 + c_1\n");
  CHECK(run({"chern", "--n", "2", "--k", "2", "--order", "4", "--mod2"}).out == "1 + w_1\n");
  const auto j = Json::parse(run({"chern", "--n", "3", "--k", "3", "--order", "2", "--format", "json"}).out);
  CHECK(j["rank"] == 8);
  CHECK(j["class"]["order"] == 2);
}

TEST_CASE("strata") {
  const auto r = run({"strata", "--n", "3", "--m", "6", "--oracle", "--format", "json"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["p"] == 2);
  CHECK(j["oracle"]["admissible_comparison"]["equal"] == true);
  CHECK(j["oracle"]["bounding_comparison"]["equal"] == true);
  CHECK(run({"strata", "--n", "2", "--m", "4"}).status == 1);
  CHECK(run({"strata", "--n", "2", "--m", "4", "--oracle"}).status == 0);
  CHECK(run({"strata", "--n", "3", "--m", "6", "--with-class"}).out.find("t_1 + v_1") != std::string::npos);
}

TEST_CASE("check") {
  const auto r = run({"check", "--suite", "examples"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("[PASS] 1 examples", 0) == 0);
  CHECK(run({"check", "--suite", "nope"}).status == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"chern", "--n", "2"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "liegiambelli_cli_test.txt";
  CHECK(run({"chern", "--n", "2", "--k", "2", "--order", "4", "--out", path.string()}).out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 + c_1");
  std::filesystem::remove(path);
}

TEST_CASE("cell limit") {
  setenv("LIEGIAMBELLI_MAX_CELLS", "50", 1);
  CHECK(run({"hall", "--n", "3", "--kmax", "8"}).status == 1);
  setenv("LIEGIAMBELLI_MAX_CELLS", "abc", 1);
  CHECK(run({"hall", "--n", "2", "--kmax", "3"}).status == 2);
  unsetenv("LIEGIAMBELLI_MAX_CELLS");
}
