#include <cstdlib>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "lbo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  Run r;
  r.code = lbo::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "{{0,0},{0,1}}"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "associative: yes"));
  CHECK(has(r.out, "units: 1"));
  CHECK(has(r.out, "zeros: 0"));

  r = run({"check", "{{0,1},{1,0}}"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "abbc: no"));
  CHECK(has(r.out, "homology-eligible: no"));

  r = run({"--format", "json", "check", "[[0,0],[1,1]]"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rack"] == true);
  CHECK(j["order"] == 2);
}

TEST_CASE("homology") {
  auto r = run({"homology", "{{0,0},{0,0}}"});
  CHECK(r.code == 0);
  CHECK(r.out == "H_0 = Z^2\nH_1 = Z^3\nH_2 = Z^4\nH_3 = Z^7\n");

  r = run({"homology", "{{0}}", "--theory", "rack", "--max-dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "H_0 = Z\nH_1 = Z\nH_2 = Z\n");

  r = run({"--format", "json", "homology", "{{0,0},{1,1}}", "--max-dim", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["theory"] == "lbo");
  CHECK(j["groups"].size() == 2);
  CHECK(j["groups"][0]["text"] == "Z");

  r = run({"homology", "{{0,1},{1,0}}"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "error:"));

  r = run({"homology", "{{0,1},{1,0}}", "--force"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "error:"));

  r = run({"homology", "{{0,2},{1,0}}"});
  CHECK(r.code == 2);
}

TEST_CASE("homology reads the table from stdin") {
  const auto r = run({"homology", "-", "--max-dim", "1"}, "{{0,0},\n {0,1}}\n");
  CHECK(r.code == 0);
  CHECK(r.out == "H_0 = Z^2\nH_1 = Z\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "{{0,0},{0,1}}", "--max-dim", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "all checks passed"));
  CHECK_FALSE(has(r.out, "FAIL"));

  r = run({"verify", "{{0,2,1},{2,1,0},{1,0,2}}", "--max-dim", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "SKIP lbo"));
  CHECK(has(r.out, "PASS boundary squared (rack)"));

  r = run({"verify", "{{0,1},{1,0}}", "--max-dim", "3", "--force"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "FAIL"));
  CHECK(has(r.out, "verification FAILED"));
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--order", "2", "--family", "idem-sg", "--up-to-iso"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);

  r = run({"--format", "json", "enumerate", "--order", "1", "--with-homology"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["groups"].size() == 4);

  r = run({"enumerate", "--order", "5"});
  CHECK(r.code == 2);
  r = run({"enumerate", "--order", "2", "--family", "quandle"});
  CHECK(r.code == 2);
}

TEST_CASE("jones") {
  CHECK(run({"jones", "count", "4"}).out == "14\n");
  CHECK(run({"jones", "census", "5"}).out == "36\n");

  auto r = run({"jones", "jsmp", "3", "3", "--homology"});
  CHECK(r.code == 0);
  CHECK(has(r.out, ": 5 elements"));
  CHECK(has(r.out, "H_3 = "));

  r = run({"jones", "jsmp", "4", "4"});
  CHECK(r.code == 2);
  r = run({"jones", "jsmp", "4", "2+1"});
  CHECK(r.code == 2);

  r = run({"jones", "compose", "2; t1-t2, b2-b1", "2; t1-t2, b2-b1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2; t1-t2, b2-b1\nloops: 1\n");

  r = run({"--format", "json", "jones", "compose", "2; t1-b1, t2-b2", "2; t1-t2, b2-b1"});
  CHECK(nlohmann::json::parse(r.out)["loops"] == 0);

  r = run({"jones", "compose", "2; t1-b1, t2-b2", "3; t1-b1, t2-b2, t3-b3"});
  CHECK(r.code == 2);

  r = run({"--max-strands", "5", "jones", "count", "6"});
  CHECK(r.code == 2);
}

TEST_CASE("tables") {
  auto r = run({"tables", "--which", "4", "--diff"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "9 | 3000"));
  CHECK(has(r.out, "table 4: match"));

  r = run({"tables", "--which", "6", "--diff"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "no invariant factor > 1"));
  CHECK(has(r.out, "H_2 = 0 on 9 of 10"));

  r = run({"tables", "--which", "7", "--diff"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "MISMATCH"));

  r = run({"tables", "--which", "6", "--diff", "--golden-dir", "/nonexistent"});
  CHECK(r.code == 2);
  r = run({"tables", "--which", "8"});
  CHECK(r.code == 2);
}

TEST_CASE("skeleton and matrix") {
  auto r = run({"skeleton", "{{0,0},{1,1}}"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "digraph"));
  r = run({"skeleton", "{{0,0},{1,1}}", "--export", "cells"});
  CHECK(nlohmann::json::parse(r.out)["faces"].size() == 8);
  r = run({"skeleton", "{{0,0},{1,1}}", "--export", "svg"});
  CHECK(r.code == 2);

  r = run({"matrix", "{{0,0},{0,1}}", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("% dims 2 4\n", 0) == 0);
}

TEST_CASE("caps and usage errors") {
  auto r = run({"--max-columns", "8", "homology", "{{0,0},{0,0}}"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "error:"));

  setenv("LBO_MAX_COLUMNS", "8", 1);
  r = run({"homology", "{{0,0},{0,0}}"});
  CHECK(r.code == 2);
  setenv("LBO_MAX_COLUMNS", "bogus", 1);
  r = run({"homology", "{{0,0},{0,0}}"});
  CHECK(r.code == 2);
  unsetenv("LBO_MAX_COLUMNS");

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"homology"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--format", "json", "enumerate", "--order", "3",
                                      "--family", "abbc-sg", "--with-homology"};
  CHECK(run(args).out == run(args).out);
}
