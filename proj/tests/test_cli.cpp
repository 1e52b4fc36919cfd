#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "plactic/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = plactic::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tableau command") {
  auto const r = run({"tableau", "3266134"});
  CHECK(r.code == 0);
  CHECK(r.out == "3/266/134\nshape [1,3,3]\n");
}

TEST_CASE("insert and product commands") {
  CHECK(run({"insert", "3", "3/266/134"}).out == "36/246/133\n");
  CHECK(run({"insert", "--side", "right", "3", "3/266/134"}).out == "36/246/133\n");
  CHECK(run({"insert", "--side", "left", "3", "3/266/134"}).out == "3/266/1334\n");
  CHECK(run({"product", "225778", "145589"}).out == "2577/12455889\n");
}

TEST_CASE("braiding commands") {
  CHECK(run({"sigma", "--kind", "col", "2", "1"}).out == "(\"21\", \"e\")\n");
  CHECK(run({"sigma", "--kind", "row", "225778", "145589"}).out == "(\"2577\", \"12455889\")\n");
  CHECK(run({"normal-form", "--kind", "col", "3266134"}).out == "(\"321\", \"63\", \"64\")\n");
  CHECK(run({"normal-form", "--kind", "row", "3266134"}).out == "(\"3\", \"266\", \"134\")\n");
}

TEST_CASE("crystal and center commands") {
  CHECK(run({"s-op", "1", "312321232223311"}).out == "311321132223311\n");
  CHECK(run({"center", "--n", "3", "321"}).out == "true\n");
  CHECK(run({"center", "--n", "3", "32"}).out == "false\n");
}

TEST_CASE("betti command") {
  auto const r = run({"betti", "--n", "2", "--kmax", "4", "--character", "eps0", "--field", "Q"});
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["betti"] == nlohmann::json{1, 2, 2, 1, 0});
  CHECK(j["n"] == 2);
  auto const p = nlohmann::json::parse(
      run({"betti", "--n", "2", "--kmax", "3", "--character", "eps1", "--field", "GFp:7"}).out);
  CHECK(p["betti"] == nlohmann::json{1, 2, 1, 0});
  CHECK(p["field"] == "GF(7)");
}

TEST_CASE("cup command") {
  auto const r = run({"cup", "--n", "2", "f:2", "f:1,21"});
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["degree"] == 3);
  CHECK(j["support"] == nlohmann::json{{"(\"2\", \"1\", \"21\")", "1"}});
}

TEST_CASE("verify command exit codes") {
  auto const ok = run({"verify", "--suite", "ybe", "--n", "2"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "idempotent", "--n", "2", "--kind", "row", "--max-length", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "pseudo-unit", "--n", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "monoid", "--n", "2", "--max-length", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "commute", "--n", "2", "--max-length", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "commute", "--n", "2", "--max-length", "1", "--diagonal"}).code == 1);
}

TEST_CASE("errors exit with code 2 and one diagnostic line") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {}, {"tableau", "1x"}, {"product", "21", "1"}, {"betti", "--n", "9"},
           {"sigma", "--kind", "diag", "1", "2"}, {"s-op", "0", "12"}, {"nonsense"}}) {
    auto const r = run(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("output is stable across runs") {
  std::vector<std::string> const args{"betti", "--n", "3", "--kmax", "4", "--character", "eps1"};
  CHECK(run(args).out == run(args).out);
}
