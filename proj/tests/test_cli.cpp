#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(SHOM_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// stdout only, for byte comparisons.
Run run_quiet(const std::string& args) {
  std::string cmd = std::string(SHOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("shom_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

// Value printed in the table row starting with `key`.
std::string table_value(const std::string& out, const std::string& key) {
  std::size_t at = out.find("\n" + key + " ");
  if (at == std::string::npos && out.rfind(key + " ", 0) == 0) at = 0;
  else if (at != std::string::npos) ++at;
  REQUIRE(at != std::string::npos);
  std::size_t start = out.find_first_not_of(' ', at + key.size());
  return out.substr(start, out.find('\n', start) - start);
}

}  // namespace

TEST_CASE("worked example through the command line") {
  Run r = run("spd --ring example36.json --multset S1s.json --module m2.json --bound 8 --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["value"] == 0);
  CHECK(j["witness"] == "e1");
  CHECK(r.out.rfind(R"({"value":0,"witness":"e1",)", 0) == 0);

  r = run("spd --ring example36.json --multset trivial.json --module m2.json --bound 8");
  CHECK(r.code == 0);
  CHECK(table_value(r.out, "S-pd") == ">8");

  r = run("ssemisimple --ring example36.json --multset S1s.json --json");
  CHECK(json::parse(r.out)["witness"] == "e1");
  r = run("sgldim --ring example36.json --multset S1s.json --bound 8 --trials 100 --seed 0 --json");
  j = json::parse(r.out);
  CHECK(j["value"] == 0);
  CHECK(j["exceedances"] == 0);
  CHECK(j["trials"] == 100);
}

TEST_CASE("factorcheck message") {
  Run r = run("factorcheck --a 3 --multset gen2.json --module z3.json");
  CHECK(r.code == 0);
  CHECK(has(r.out, "+1 identity holds: 1 = 0 + 1"));
  r = run("factorcheck --a 3 --multset gen2.json --module z3.json --json");
  CHECK(json::parse(r.out)["message"] == "+1 identity holds: 1 = 0 + 1");
}

TEST_CASE("table and JSON modes agree") {
  struct Case {
    std::string args;
    std::vector<std::pair<std::string, std::string>> rows;  // table key, JSON key
  };
  const std::vector<Case> cases = {
      {"spd --ring F2_t2.json --multset trivial.json --module residue_t2.json --bound 5",
       {{"S-pd", "value"}, {"witness", "witness"}, {"bound", "bound"}}},
      {"sid --ring example36.json --multset S1s.json --module m1.json --bound 5",
       {{"S-id", "value"}, {"dual route", "dual_route"}}},
      {"sgldim --ring F2_t2.json --multset trivial.json --bound 3 --trials 20 --seed 4",
       {{"S-gl.dim", "value"}, {"exceedances", "exceedances"}, {"trials", "trials"}, {"seed", "seed"}}},
      {"localprofile --ring F2xF2_t2.json --module F2xF2_t2_module.json --kind id --bound 4",
       {{"sup primes", "sup_primes"}, {"sup maximal", "sup_maximal"}}},
      {"storsion --ring example36.json --multset S1s.json --module m2.json", {{"witness", "witness"}}},
      {"ext --ring Z.json --module z2_over_z.json --against z2_over_z.json --degree 1", {{"group", "group"}}},
      {"factorcheck --a 3 --multset gen2.json --module z3.json",
       {{"S-pd over Z", "over_z"}, {"over Z/a", "over_quotient"}}},
  };
  write(scratch("F2xF2_t2_module.json"),
        R"J({"kind":"presentation","free_rank":1,"relations":[["(0,t)"]]})J");
  const std::string env = "SHOM_FIXTURES=" + scratch("").string();
  for (const Case& c : cases) {
    Run table = run(c.args, env), js = run(c.args + " --json", env);
    REQUIRE_MESSAGE(table.code == 0, c.args << "\n" << table.out);
    REQUIRE(js.code == 0);
    json j = json::parse(js.out);
    for (const auto& [row, key] : c.rows) {
      std::string expect = j[key].is_string() ? j[key].get<std::string>() : j[key].is_null() ? "-" : j[key].dump();
      CHECK_MESSAGE(table_value(table.out, row) == expect, c.args << " row " << row);
    }
  }
}

TEST_CASE("malformed input exits 2 naming the file and field") {
  fs::path ring = scratch("nonassoc.json");
  write(ring, R"({"kind":"fp_algebra","p":2,"basis":["1","a","b"],
    "mul":{"1*1":[1,0,0],"1*a":[0,1,0],"1*b":[0,0,1],"a*a":[0,0,1],"a*b":[0,1,0],"b*b":[0,1,0]},"unit":[1,0,0]})");
  Run r = run("spd --ring " + ring.string() + " --multset trivial.json --module m2.json");
  CHECK(r.code == 2);
  CHECK(has(r.out, ring.string()));
  CHECK(has(r.out, "basis triple"));

  fs::path mod = scratch("badmod.json");
  write(mod, R"({"kind":"action","dim":1,"action":{"e1":[[1]],"e2":[[0]],"f":[[1]]}})");
  r = run("spd --ring example36.json --multset S1s.json --module " + mod.string());
  CHECK(r.code == 2);
  CHECK(has(r.out, mod.string()));
  CHECK(has(r.out, "/action"));
  CHECK(has(r.out, "*f"));

  fs::path broken = scratch("broken.json");
  write(broken, "{\"kind\": ");
  r = run("spd --ring " + broken.string() + " --multset S1s.json --module m2.json");
  CHECK(r.code == 2);
  CHECK(has(r.out, "malformed JSON at byte"));

  r = run("spd --ring example36.json --multset S1s.json --module no_such_file.json");
  CHECK(r.code == 2);
  CHECK(has(r.out, "no_such_file.json"));
  CHECK(run("verify prop-9.9 --trials 1").code == 2);
  CHECK(run("spd --ring example36.json").code == 2);
  CHECK(run("spd --ring F2.json --multset S1s.json --module m2.json").code == 2);
}

TEST_CASE("randomized JSON runs require a seed") {
  Run r = run("verify cor-2.7 --trials 5 --json");
  CHECK(r.code == 2);
  CHECK(has(r.out, "--seed"));
  CHECK(run("sgldim --ring F2.json --multset trivial.json --json").code == 2);
  CHECK(run("resolve --ring F2_t2.json --module residue_t2.json --style random --json").code == 2);
  CHECK(run("resolve --ring F2_t2.json --module residue_t2.json --style minimal --json").code == 0);
}

TEST_CASE("fixture directory override") {
  fs::path alias = scratch("alias_ring.json");
  fs::copy_file(fs::path(SHOM_FIXTURES) / "F2_t3.json", alias, fs::copy_options::overwrite_existing);
  const std::string args = "localprofile --ring alias_ring.json --module alias_module.json --bound 3 --json";
  write(scratch("alias_module.json"), R"({"kind":"presentation","free_rank":1,"relations":[["t"]]})");
  CHECK(run(args).code == 2);
  Run r = run(args, "SHOM_FIXTURES=" + scratch("").string());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["classical"] == ">3");
}

TEST_CASE("exported resolutions reproduce Ext") {
  for (const std::string style : {"minimal", "random"}) {
    fs::path res = scratch("res_" + style + ".json");
    Run r = run_quiet("resolve --ring example36.json --module m2.json --bound 5 --style " + style + " --seed 3 --json");
    REQUIRE(r.code == 0);
    write(res, r.out);
    for (int k = 0; k <= 4; ++k) {
      std::string tail = " --against m1.json --degree " + std::to_string(k) + " --json";
      Run a = run_quiet("ext --ring example36.json --module m2.json" + tail);
      Run b = run_quiet("ext --ring example36.json --resolution " + res.string() + tail);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
  // Z/2 over Z/4 has periodic resolution and Ext^n = Z/2 in every degree.
  fs::path z2 = scratch("z2_over_z4.json"), zres = scratch("zres.json");
  write(z2, R"({"kind":"z_presentation","ring":"Z_mod","m":4,"matrix":[[2]]})");
  Run r = run_quiet("resolve --module " + z2.string() + " --bound 4 --json");
  REQUIRE(r.code == 0);
  write(zres, r.out);
  Run a = run_quiet("ext --module " + z2.string() + " --against " + z2.string() + " --degree 3 --json");
  Run b = run_quiet("ext --resolution " + zres.string() + " --against " + z2.string() + " --degree 3 --json");
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["group"] == "Z/2");
}

TEST_CASE("verify exit codes, determinism and replay") {
  Run a = run_quiet("verify all --seed 0 --trials 10 --json");
  Run b = run_quiet("verify all --seed 0 --trials 10 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json suite = json::parse(a.out);
  CHECK(suite["reports"].size() == 17);
  CHECK(suite["failures"] == 0);

  Run bad = run_quiet("verify theorem-1.3 --seed 0 --json --sabotage-connecting");
  CHECK(bad.code == 1);
  json report = json::parse(bad.out);
  REQUIRE(report["failures"].get<int>() > 0);
  fs::path dump = scratch("dump.json");
  write(dump, report["counterexamples"][0].dump());
  Run again = run_quiet("replay " + dump.string() + " --json --sabotage-connecting");
  CHECK(again.code == 1);
  json rr = json::parse(again.out);
  CHECK(rr["verdict"] == "fail");
  CHECK(rr["identical"] == true);
  CHECK(run_quiet("replay " + dump.string()).code == 0);
}
