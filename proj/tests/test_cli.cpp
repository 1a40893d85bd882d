#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

// End-to-end checks against the installed command line binary. Each case
// shells out, captures stdout+stderr, and freezes the exit code contract:
// 0 = verified, 1 = honest mathematical failure, 2 = unusable input.

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LOOMALG_CLI_PATH) + " " + args + " >cli_out.txt 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  std::ifstream f("cli_out.txt");
  std::stringstream ss;
  ss << f.rdbuf();
  r.output = ss.str();
  return r;
}

std::string fx(const std::string& name) {
  return std::string(LOOMALG_FIXTURE_DIR) + "/" + name;
}

std::string data(const std::string& name) {
  return std::string(LOOMALG_TEST_DATA_DIR) + "/" + name;
}

std::string flagship() {
  return "--algebra " + fx("sl2.alg") + " --sigma " + fx("chevalley.aut") + " --m 2";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli: help and usage errors") {
  RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.output, "check-algebra"));
  CHECK(contains(help.output, "verify-derivations"));

  CHECK(run("no-such-command").code == 2);
  CHECK(run("verify-derivations " + flagship()).code == 2); // missing --window
  CHECK(run("").code == 2);                                 // a subcommand is required
}

TEST_CASE("cli: algebra files are checked and rejected with locations") {
  RunResult good = run("check-algebra --algebra " + fx("sl2.alg"));
  CHECK(good.code == 0);
  CHECK(contains(good.output, "perfect: yes"));
  CHECK(contains(good.output, "centroid dim 1 (central)"));

  RunResult jac = run("check-algebra --algebra " + data("bad_jacobi.alg"));
  CHECK(jac.code == 2);
  CHECK(contains(jac.output, "jacobi"));

  RunResult tok = run("check-algebra --algebra " + data("bad_token.alg"));
  CHECK(tok.code == 2);
  CHECK(contains(tok.output, ":4:"));

  CHECK(run("check-algebra --algebra no_such_file.alg").code == 2);

  // Sigma block count must match the number of orders.
  RunResult mism = run("eigenspaces --algebra " + fx("sl2.alg") + " --sigma " +
                       fx("twovar_21.aut") + " --m 2");
  CHECK(mism.code == 2);

  CHECK(run("eigenspaces --algebra " + fx("sl2.alg") + " --sigma " + data("ragged.aut") +
            " --m 2")
            .code == 2);
}

TEST_CASE("cli: derivation certificate drives the exit code") {
  RunResult pass = run("verify-derivations " + flagship() + " --window 4 --core 2");
  CHECK(pass.code == 0);
  CHECK(contains(pass.output, "membership PASS"));
  CHECK(contains(pass.output, "directness PASS"));
  CHECK(contains(pass.output, "overall: PASS"));

  RunResult refused = run("verify-derivations --algebra " + fx("kxk.alg") + " --sigma " +
                          fx("identity2.aut") + " --m 1 --window 2");
  CHECK(refused.code == 1);
  CHECK(contains(refused.output, "REFUSED: base algebra is not central"));
}

TEST_CASE("cli: descent comparison and centroid check") {
  RunResult d = run("descent-compare " + flagship() + " --window 6");
  CHECK(d.code == 0);
  CHECK(contains(d.output, "agree on 13 degrees (total dim 19)"));

  RunResult c = run("verify-centroid " + flagship() + " --window 3 --core 1");
  CHECK(c.code == 0);
  CHECK(contains(c.output, "overall: PASS"));
}

TEST_CASE("cli: table and eigenspace listings") {
  RunResult e = run("eigenspaces " + flagship());
  CHECK(e.code == 0);
  CHECK(contains(e.output, "class (0): dim 1"));
  CHECK(contains(e.output, "[-1, 0, 1]"));

  RunResult t = run("multiloop-table " + flagship() + " --window 2");
  CHECK(t.code == 0);
  CHECK(contains(t.output, "[-2] class 0 dim 1"));
  CHECK(contains(t.output, "[-1] class 1 dim 2"));
}

TEST_CASE("cli: decompose round trips seeded samples") {
  RunResult r = run("decompose " + flagship() + " --window 4 --core 2 --samples 3");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "decompositions: PASS (3 comparisons)"));
}

TEST_CASE("cli: json report round trips byte for byte") {
  RunResult r = run("verify-derivations " + flagship() +
                    " --window 4 --core 2 --format json --out cli_report.json");
  CHECK(r.code == 0);

  std::ifstream f("cli_report.json");
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("passed") == true);
  CHECK(j.at("verdicts").at("membership") == true);
  CHECK(j.at("verdicts").at("directness") == true);
  CHECK(j.at("window") == nlohmann::json::array({4}));
  CHECK(j.at("runtime_ms").is_number_integer());

  // Serializing, parsing, and serializing again is the identity.
  CHECK(text == j.dump(2) + "\n");
  CHECK(nlohmann::json::parse(j.dump(2)) == j);

  // The schema stays float free so diffs are stable.
  std::function<void(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
    CHECK_FALSE(v.is_number_float());
    if (v.is_object() || v.is_array())
      for (const auto& item : v) no_floats(item);
  };
  no_floats(j);

  // Skipped sections are null in the structure-only report.
  RunResult s = run("verify-derivations " + flagship() +
                    " --window 4 --core 2 --structure-only --format json --out cli_skip.json");
  CHECK(s.code == 0);
  std::ifstream sf("cli_skip.json");
  nlohmann::json sj = nlohmann::json::parse(sf);
  CHECK(sj.at("verdicts").at("section").is_null());
  CHECK(sj.at("sections").at("bracket").is_null());
  CHECK(sj.at("passed") == true);
}
