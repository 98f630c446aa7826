#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

// Runs the CLI with stderr folded into stdout.
Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SOCIETY_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("seq bfile") {
  const Run r = run_cli("seq H 0 9 bfile");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "0 1\n1 1\n2 4\n3 23\n4 173\n5 1602\n6 17575\n7 222497\n8 3188806\n9 50988405\n");
}

TEST_CASE("seq csv and json") {
  const Run csv = run_cli("seq U 1 3 csv");
  CHECK(csv.status == 0);
  CHECK(csv.out == "n,exact\n1,1\n2,3\n3,7\n");

  const Run json = run_cli("seq HH 2 3 --format json");
  CHECK(json.status == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["n"] == 2);
  CHECK(parsed[0]["exact"] == "6");
  CHECK(parsed[1]["exact"] == "52");
}

TEST_CASE("table") {
  const Run r = run_cli("table B 0 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n,exact,log_asymptotic,ratio\n0,1,,\n1,1,", 0) == 0);

  const Run big = run_cli("table H 300 300 --max-digits 10");
  CHECK(big.status == 0);
  CHECK(big.out.find("log10") != std::string::npos);

  const Run json = run_cli("table U 5 6 --format json");
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed[0]["exact"] == "42");
  CHECK(parsed[1].contains("ratio"));

  CHECK(run_cli("table HH 1 2").status == 1);
}

TEST_CASE("rank") {
  const Run r = run_cli("rank 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("1: 6/13, 2: 5/13, 3: 2/13, mean 22/13\n", 0) == 0);
  const Run u = run_cli("rank 3 unlabeled");
  CHECK(u.out == "1: 7/12, 2: 1/3, 3: 1/12, mean 3/2\n");
}

TEST_CASE("enum") {
  const Run r = run_cli("enum 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("count: 23\n") != std::string::npos);
  const Run u = run_cli("enum 3 unlabeled");
  CHECK(u.out.find("count: 7\n") != std::string::npos);
  CHECK(run_cli("enum 20").status == 1);
}

TEST_CASE("sample is reproducible") {
  const Run a = run_cli("sample 7 --seed 5");
  const Run b = run_cli("sample 7 --seed 5");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify") {
  const Run ok = run_cli("verify quick");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("18/18 checks passed") != std::string::npos);
  const Run bad = run_cli("verify --inject-fault");
  CHECK(bad.status != 0);
  CHECK(bad.out.find("FAIL H_0..H_9 listed values") != std::string::npos);
}

TEST_CASE("errors") {
  const Run r = run_cli("seq Q 0 3");
  CHECK(r.status == 1);
  CHECK(r.out.rfind("error: ", 0) == 0);
  CHECK(run_cli("seq H 5 2").status == 1);
  CHECK(run_cli("rank 0").status == 1);
  CHECK(run_cli("").status != 0);
}
