#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  Json out;
};

// Run the CLI binary with the given arguments and parse its JSON response.
CliResult run(const std::string& args) {
  const std::string cmd = std::string(DPZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  Json parsed = Json::parse(text, nullptr, false);
  REQUIRE_FALSE(parsed.is_discarded());
  return {code, parsed};
}

std::string fx(const std::string& name) {
  return std::string(DPZ_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("enum subcommand") {
  auto r = run("enum --r 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out["ok"] == true);
  CHECK(r.out["result"]["count"] == 27);

  auto roots = run("enum --r 7 --kind roots");
  CHECK(roots.out["result"]["count"] == 126);

  // determinism: byte-identical repeated output
  CHECK(run("enum --r 8").out == run("enum --r 8").out);

  auto bad = run("enum --r 9");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out["ok"] == false);
  CHECK(bad.out["error"]["code"] == "InvalidR");
}

TEST_CASE("cone tests") {
  auto nef = run("nef --model " + fx("f1.json") + " --class \"[2,1]\"");
  CHECK(nef.exit_code == 0);
  CHECK(nef.out["result"]["nef"] == true);
  CHECK(run("nef --model " + fx("f1.json") + " --class \"[0,-1]\"").out["result"]["nef"] ==
        false);

  CHECK(run("pseff --model " + fx("f1.json") + " --class \"[1,-2]\"")
            .out["result"]["pseudo_effective"] == true);
  CHECK(run("pseff --model " + fx("f1.json") + " --class \"[1,2]\"")
            .out["result"]["pseudo_effective"] == false);

  auto bad = run("nef --model " + fx("f1.json") + " --class \"oops\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out["error"]["code"] == "InvalidInput");
}

TEST_CASE("zariski subcommand") {
  auto z = run("zariski --model " + fx("f1.json") + " --class \"[1,-2]\"");
  CHECK(z.exit_code == 0);
  CHECK(z.out["result"]["positive"] == Json::array({"1/1", "0/1"}));
  REQUIRE(z.out["result"]["negative"].size() == 1);
  CHECK(z.out["result"]["negative"][0]["curve"] == Json::array({0, -1}));
  CHECK(z.out["result"]["negative"][0]["coeff"] == "2/1");

  auto fail3 = run("zariski --model " + fx("f1.json") + " --class \"[1,2]\"");
  CHECK(fail3.exit_code == 3);
  CHECK(fail3.out["error"]["code"] == "NotPseudoEffective");
}

TEST_CASE("nefdec subcommand") {
  auto d = run("nefdec --model " + fx("dp1.json") + " --class \"[3,1,1,1,1,1,1,1,1]\"");
  CHECK(d.exit_code == 0);
  CHECK(d.out["result"]["coefficients"] == Json::array({1, 0, 0, 0, 0, 0, 0}));
  CHECK(d.out["result"]["residual"] == Json::array({0, 0}));
  CHECK(d.out["result"]["ends_on_quadric"] == false);
  CHECK(d.out["result"]["chain"].size() == 7);
}

TEST_CASE("fujita subcommand") {
  auto a = run("fujita --model " + fx("p2.json") + " --class \"[1]\"");
  CHECK(a.out["result"]["a"] == "3/1");
  CHECK(a.out["result"]["case"] == "P2_O1");
  CHECK(a.out["result"]["rigid"] == true);

  auto f = run("fujita --model " + fx("f1.json") + " --class \"[2,1]\"");
  CHECK(f.out["result"]["a"] == "2/1");
  CHECK(f.out["result"]["case"] == "RULED_FIBRATION");
  CHECK(f.out["result"]["fiber"] == Json::array({1, 1}));

  // non-big nef class: infinite invariant
  auto inf = run("fujita --model " + fx("f1.json") + " --class \"[1,1]\"");
  CHECK(inf.exit_code == 0);
  CHECK(inf.out["result"]["a"] == "inf");

  auto notnef = run("fujita --model " + fx("f1.json") + " --class \"[0,-1]\"");
  CHECK(notnef.exit_code == 3);
  CHECK(notnef.out["error"]["code"] == "NotNef");
}

TEST_CASE("pathology and breaking subcommands") {
  auto p = run("pathology --model " + fx("kn20_4a2.json") + " --char 3");
  CHECK(p.out["result"]["type1"] == "yes");
  CHECK(p.out["result"]["type2"] == "no");
  CHECK(p.out["result"]["type3"] == "no");
  CHECK(p.out["result"]["source"] == "sporadic_list");

  auto b = run("breaking --model " + fx("ct18.json") + " --char 2");
  CHECK(b.out["result"]["flags"]["type2"] == "yes");
  REQUIRE(b.out["result"]["cases"].size() == 1);
  CHECK(b.out["result"]["cases"][0]["case"] == 2);
  CHECK(b.out["result"]["cases"][0]["a"] == "3/2");

  // manual flag overrides win over the sporadic lists
  auto b2 = run("breaking --model " + fx("ct18.json") + " --char 2 --type2 no");
  CHECK(b2.out["result"]["cases"].empty());

  auto b3 = run("breaking --model " + fx("dp1.json") + " --char 2");
  CHECK(b3.out["result"]["cases"].empty());

  CHECK(run("breaking --model " + fx("ct18.json") + " --char 6").exit_code == 2);
}

TEST_CASE("census subcommand") {
  auto c = run("census --model " + fx("dp1.json") + " --char 11 --class "
               "\"[12,4,4,4,4,4,4,4,4]\"");
  CHECK(c.exit_code == 0);
  CHECK(c.out["result"]["applicable"] == true);
  REQUIRE(c.out["result"]["entries"].size() == 2);
  CHECK(c.out["result"]["entries"][0]["kind"] == "BirationalFree");
  CHECK(c.out["result"]["entries"][0]["expected_dim"] == 3);
  CHECK(c.out["result"]["entries"][1]["kind"] == "ConicCoversAtLeast");
  CHECK(c.out["result"]["entries"][1]["conic"] == Json::array({6, 2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(c.out["result"]["entries"][1]["multiplicity"] == 2);
  CHECK(c.out["result"]["lower_bound_only"] == true);

  // inapplicable: result still printed, exit code 3
  auto small = run("census --model " + fx("dp1.json") + " --char 7 --class "
                   "\"[12,4,4,4,4,4,4,4,4]\"");
  CHECK(small.exit_code == 3);
  CHECK(small.out["ok"] == true);
  CHECK(small.out["result"]["applicable"] == false);
  CHECK(small.out["result"]["reason"] == "p < delta(1) = 11");

  auto exc = run("census --model " + fx("ct18.json") + " --char 5 --class "
                 "\"[6,2,2,2,2,2,2,2]\"");
  CHECK(exc.exit_code == 3);  // not a del Pezzo model
  CHECK(exc.out["error"]["code"] == "NotDelPezzo");

  CHECK(run("census --model " + fx("dp1.json") + " --char 11 --class "
            "\"[6,2,2,2,2,2,2,2,2]\"")
            .out["error"]["code"] == "DegreeTooSmall");
}

TEST_CASE("ffcover subcommands") {
  CHECK(run("ffcover case2a --g4 \"x^4 + y^4 + z^4\"").out["result"]["conditions_hold"] ==
        true);
  CHECK(run("ffcover case2b --g4 \"x^3*y + z^4\"").out["result"]["conditions_hold"] == false);

  auto slope = run("ffcover case2c --g4 \"x^3*z + x^3*y\" --b 1");
  CHECK(slope.exit_code == 0);
  CHECK(slope.out["result"]["c"] == 1);
  CHECK(run("ffcover case2c --g4 \"x^3*y\" --b 1").out["error"]["code"] == "Undefined");

  auto c4 = run("ffcover c4 --cubic \"x0^3 + x1^3 + x2^3 + x3^3\" --z 0,0,1,0");
  CHECK(c4.out["result"]["all_cuspidal"] == true);
  CHECK(c4.out["result"]["c4"] == 0);

  auto flex = run("ffcover flex --q4 \"z*x^3 + x*y^3 + y*z^3\" --pt 1,0,0");
  CHECK(flex.out["result"]["multiplicity"] == 3);
  CHECK(flex.out["result"]["flex"] == true);

  auto nr = run("ffcover nonreflexive --q4 \"z*x^3 + x*y^3 + y*z^3\" --ext 1");
  CHECK(nr.out["result"]["verdict"] == "all_flex");

  auto sing = run("ffcover singsearch --g2 \"y*z + x^2\" --g4 \"x^4\" --max-ext 3");
  CHECK(sing.out["result"]["found"] == true);
  CHECK(sing.out["result"]["ext"] == 1);

  CHECK(run("ffcover flex --q4 \"x^4\" --pt 1,2").exit_code == 2);  // wrong point arity
}
