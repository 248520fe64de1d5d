#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support.hpp"

using testing::run_cli;
using testing::without_timing;

TEST_CASE("cli ball report") {
  auto r = run_cli("ball --group free:2 --radius 2");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["outputs"]["vertex_count"] == 17);
  CHECK(j["command"] == "ball");
  CHECK(j["exit_code"] == 0);
  CHECK(j.contains("timing"));
  CHECK(j.contains("version"));
}

TEST_CASE("cli compare and agreement") {
  auto r = run_cli("compare --a free:2 --b abelian:2 --radius 2");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["outputs"]["isomorphic"] == false);
  auto k = run_cli("kernel-agree -a free:2 -b abelian:2 --radius 4");
  REQUIRE(k.exit_code == 0);
  CHECK(nlohmann::json::parse(k.out)["outputs"]["witness"] == "x1 x2 X1 X2");
  auto a = run_cli("agree-radius -a free:2 -b abelian:2 --radius 5");
  REQUIRE(a.exit_code == 0);
  CHECK(nlohmann::json::parse(a.out)["outputs"]["agreement_radius"] == 1);
}

TEST_CASE("cli exit codes") {
  auto none = run_cli("qi-search --a abelian:1 --b abelian:2 --C 1 --M 14");
  CHECK(none.exit_code == 3);
  CHECK(nlohmann::json::parse(none.out)["outputs"]["certificate"]["kind"] == "counting");
  CHECK(run_cli("qi-search --a abelian:1 --b abelian:1 --C 1 --M 3").exit_code == 0);
  CHECK(run_cli("qi-search --a abelian:2 --b free:2 --C 1 --M 3 --budget 0").exit_code == 4);
  CHECK(run_cli("ball --radius 2").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  auto bad = run_cli("ball --group nonsense:2 --radius 1");
  CHECK(bad.exit_code == 5);
  CHECK(nlohmann::json::parse(bad.out).contains("error"));
  CHECK(run_cli("--word-budget 1000 ball --group free:2 --radius 20").exit_code == 5);
}

TEST_CASE("cli small cancellation and family info") {
  auto sc = run_cli("check-sc --group bowditch:finite:{1,2}:3");
  REQUIRE(sc.exit_code == 0);
  auto j = nlohmann::json::parse(sc.out);
  CHECK(j["outputs"]["satisfied"] == true);

  const char* path = "mgw_cli_test_presentation.txt";
  {
    std::ofstream f(path);
    f << "rank 2\nx1 x2 x1 x2\n";
  }
  auto bad = run_cli(std::string("check-sc --presentation ") + path);
  std::remove(path);
  REQUIRE(bad.exit_code == 0);
  CHECK(nlohmann::json::parse(bad.out)["outputs"]["satisfied"] == false);

  CHECK(run_cli("family-info --group hall:arith:2,0").exit_code == 0);
}

TEST_CASE("cli reports are deterministic") {
  const char* commands[] = {
      "ball --group hall:finite:{} --radius 4",
      "compare -a lamplighter -b hall:finite:{} --radius 3",
      "agree-radius -a hall:finite:{} -b hall:finite:{2} --radius 6",
      "kernel-agree -a free:2 -b abelian:2 --radius 4",
      "converge --chain abelian:2 --chain abelian:2 --limit abelian:2 --radius 2",
      "qi-check -a abelian:1 -b abelian:1 --construct word-map --C 1 --M 3",
      "qi-search -a abelian:1 -b zlinear:2,3 --C 3 --M 4",
      "qi-scan -a abelian:1 -b abelian:2 --Cmax 1 --M-list 3,14",
      "check-sc --group bowditch:finite:{1}:2",
      "family-info --group bowditch:arith:2,1:4",
      "--threads 4 ball --group free:2 --radius 5",
  };
  for (const char* c : commands) {
    CAPTURE(c);
    auto first = run_cli(c), second = run_cli(c);
    REQUIRE(first.exit_code == second.exit_code);
    CHECK(without_timing(first.out) == without_timing(second.out));
  }
}
