#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* path = std::getenv("MODFO_BIN");
  REQUIRE_MESSAGE(path != nullptr, "MODFO_BIN must point at the modfo binary");
  return path;
}

RunResult run_sh(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run(const std::string& args) { return run_sh(binary() + " " + args); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("check lemma passes and prints the summary line") {
  RunResult r = run("check lemma --bound 1000");
  CHECK(r.code == 0);
  CHECK(r.out == "pass: 3 lemma items, 1002001 pairs\n");
}

TEST_CASE("translate prints the relativized sentence") {
  RunResult r = run("translate \"forall a. exists b. a < b\"");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "forall a. not (a mod a = a) -> exists b. not (b mod b = b) & a mod b = a\n");
}

TEST_CASE("defcheck adjudicates the successor candidates") {
  RunResult broken = run("defcheck --definition succ_paper --oracle succ --bound 100");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("\"assignment\":{\"x\":3,\"y\":1}") != std::string::npos);

  RunResult fixed = run("defcheck --definition succ_fixed --oracle succ --bound 100");
  CHECK(fixed.code == 0);
  CHECK(fixed.out.find("pass") == 0);

  // an ad-hoc formula; its parameters are the free variables in name order
  RunResult ad_hoc = run(
      "defcheck --formula \"y < x & forall z. y < z -> z = x or x < z\" --oracle succ --bound 40");
  CHECK(ad_hoc.code == 0);
  RunResult trivial = run("defcheck --formula \"x < y\" --oracle \"<\" --bound 30");
  CHECK(trivial.code == 0);
}

TEST_CASE("eval exit codes reflect the verdict") {
  CHECK(run("eval --structure mod --bound 50 --assign x=0 \"exists y. y mod y = x\"").code == 0);
  CHECK(run("eval --structure mod --bound 50 --assign x=7 \"exists y. y mod y = x\"").code == 1);
  CHECK(run("eval --structure posdiv --bound 30 \"forall a. exists b. a < b\"").code == 1);
  CHECK(run("eval --structure posdiv --bound 30 \"exists a. forall b. a < b or b < a or a = b\"")
            .code == 0);
}

TEST_CASE("usage and parse failures exit 2") {
  CHECK(run("parse \"x < y & y\"").code == 2);
  CHECK(run("parse \"x < y\" --sig mod").code == 2);
  CHECK(run("eval \"x = x\"").code == 2);               // missing --structure
  CHECK(run("eval --structure venus \"x = x\"").code == 2);
  CHECK(run("check lemma --bound 1 --frobnicate").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check lemma --bound 5000000000").code == 2);  // above the 2^32 cap
  CHECK(run("defcheck --oracle succ").code == 2);
  CHECK(run("defcheck --definition lemma2_full --oracle \"<\" --bound 10").code == 2);
  CHECK(run("translate --interp missing-file.txt \"x < y\"").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("formulas arrive via argument, stdin, or file") {
  CHECK(run("parse \"x < y\"").out == "x < y\n");
  CHECK(run_sh("echo 'x < y & y < z' | " + binary() + " parse -").out == "x < y & y < z\n");
  REQUIRE(std::system("echo 'x divides y' > /tmp/modfo_cli_test_formula.txt") == 0);
  RunResult file = run("parse --file /tmp/modfo_cli_test_formula.txt");
  CHECK(file.code == 0);
  CHECK(file.out == "x divides y\n");
}

TEST_CASE("json output is line-delimited json") {
  RunResult r = run("fuzz --seed 42 --count 300 --depth 3 --max-nodes 25 --bound 20 --mutate --json");
  CHECK(r.code == 1);  // counterexamples found, as intended for mutants
  auto ls = lines(r.out);
  CHECK(ls.size() >= 6);  // one counterexample + one summary per mutant
  for (const auto& line : ls) {
    CAPTURE(line);
    nlohmann::json parsed = nlohmann::json::parse(line);
    CHECK(parsed.is_object());
  }

  RunResult ev = run("eval --structure mod --bound 50 --assign x=0 \"exists y. y mod y = x\" --json");
  nlohmann::json j = nlohmann::json::parse(ev.out);
  CHECK(j["value"] == true);
  CHECK(j["visited"] == 1);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmds[] = {
      "fuzz --seed 3 --count 300 --depth 3 --bound 20 --json",
      "fuzz --seed 42 --count 200 --bound 20 --mutate --json",
      "check lemma --bound 300 --json",
      "corpus list --json",
  };
  for (const auto& cmd : cmds) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("jobs do not change the output") {
  RunResult serial = run("check lemma --bound 400 --json");
  RunResult parallel = run("check lemma --bound 400 --jobs 4 --json");
  CHECK(serial.out == parallel.out);
  RunResult env = run_sh("MODFO_JOBS=4 " + binary() + " check lemma --bound 400 --json");
  CHECK(env.out == serial.out);

  RunResult fuzz_serial = run("fuzz --seed 5 --count 400 --bound 20 --json");
  RunResult fuzz_parallel = run("fuzz --seed 5 --count 400 --bound 20 --jobs 3 --json");
  CHECK(fuzz_serial.out == fuzz_parallel.out);
}

TEST_CASE("corpus list names the built-in formulas") {
  RunResult r = run("corpus list");
  CHECK(r.code == 0);
  for (const char* name :
       {"succ_paper", "succ_fixed", "lemma1_exists", "lemma2_full", "lemma3_full"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("translate accepts a manifest file") {
  std::string manifest = "/tmp/modfo_cli_test_manifest.txt";
  std::string write = "printf 'universe(u) := not (u mod u = u)\\n"
                      "<(a, b) := a mod b = a\\n"
                      "divides(b, a) := a mod b mod (a mod b) = a mod b\\n' > " + manifest;
  REQUIRE(std::system(write.c_str()) == 0);
  RunResult r = run("translate --interp " + manifest + " \"forall a. exists b. a < b\"");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "forall a. not (a mod a = a) -> exists b. not (b mod b = b) & a mod b = a\n");
}
