// One line per acceptance criterion; exits nonzero if any line fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "common.hpp"
#include "json_io.hpp"
#include "veritas.hpp"
#include "zbackend.hpp"

using namespace shom;
using namespace testkit;
using io::json;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::string fixture(const std::string& name) { return std::string(SHOM_FIXTURES) + "/" + name; }

std::pair<int, std::string> cli(const std::string& args) {
  std::string cmd = std::string(SHOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json cli_json(Outcome& o, const std::string& args) {
  auto [code, out] = cli(args);
  o.expect(code == 0, "exit code of: " + args);
  try {
    return json::parse(out);
  } catch (const std::exception&) {
    o.expect(false, "JSON output of: " + args);
    return json::object();
  }
}

// Classical pd over an Artinian ring: the least n with Ext^{n+1}(M, R/m) = 0
// for every maximal ideal m.
std::optional<std::size_t> classical_pd(const Mod& m, std::size_t bound) {
  std::vector<Mod> simples;
  for (const Ideal& i : enumerate_ideals(m.ring()))
    if (i.maximal) simples.push_back(cyclic_module(m.ring(), i.basis));
  for (std::size_t n = 0; n <= bound; ++n) {
    bool vanish = true;
    for (const Mod& k : simples) vanish = vanish && ext(m, k, n + 1).module.dim() == 0;
    if (vanish) return n;
  }
  return std::nullopt;
}

Outcome example() {
  Outcome o;
  const std::string r = "--ring " + fixture("example36.json");
  json ss = cli_json(o, "ssemisimple " + r + " --multset " + fixture("S1s.json") + " --json");
  o.expect(ss.value("verdict", false) && ss.value("witness", json()) == "e1", "ssemisimple witness e1");
  json gl = cli_json(o, "sgldim " + r + " --multset " + fixture("S1s.json") + " --bound 8 --trials 100 --seed 0 --json");
  o.expect(gl.value("value", json()) == 0, "sgldim value 0");
  o.expect(gl.value("exceedances", json()) == 0 && gl.value("trials", json()) == 100, "zero exceedances over 100 trials");
  json pd = cli_json(o, "spd " + r + " --multset " + fixture("trivial.json") + " --module " + fixture("m2.json") +
                            " --bound 8 --json");
  o.expect(pd.value("value", json()) == ">8", "spd with S={1} is >8");
  o.note << "witness " << ss.value("witness", json()).dump() << ", S-gl.dim " << gl.value("value", json()).dump()
         << " (" << gl.value("exceedances", json()).dump() << " exceedances / " << gl.value("trials", json()).dump()
         << " trials), S={1} spd " << pd.value("value", json()).dump();
  return o;
}

Outcome factor_ring() {
  Outcome o;
  json cfg = io::load_file(fixture("z_sweep.json"));
  const std::size_t bound = cfg["bound"], per_a = cfg["modules_per_a"], gens = cfg["max_generators"];
  Rng rng(cfg["seed"].get<std::uint64_t>());
  std::size_t checked = 0;
  std::set<long> as;
  for (const json& c : cfg["cases"]) {
    const long a = c.at("a");
    as.insert(a);
    ZMultSet s{ZRing{}, {}};
    for (const json& g : c.at("generators")) s.generators.push_back(g.get<long>());
    o.expect(std::gcd(a, s.generators.front().convert_to<long>()) == 1, "generator coprime to a");
    for (std::size_t t = 0; t < per_a; ++t) {
      ZMod m = random_z_module(a, rng, gens);
      FactorRingReport rep = factor_ring_check(a, m, s, bound);
      const bool exact = rep.over_z.finite() && rep.over_quotient.finite() &&
                         *rep.over_z.value == *rep.over_quotient.value + 1;
      o.expect(rep.verdict == Verdict::Pass && exact,
               "a=" + std::to_string(a) + " S=" + s.str() + " M=" + m.str() + ": " + rep.message);
      ++checked;
    }
  }
  o.expect(as == std::set<long>{3, 5, 7}, "sweep covers a in {3,5,7}");
  o.expect(per_a >= 50, "at least 50 modules per case");
  o.note << checked << " exact identities over " << cfg["cases"].size() << " (a, S) cases, " << per_a << " modules each";
  return o;
}

Outcome ext_oracles() {
  Outcome o;
  std::size_t closed = 0;
  for (long d = 2; d <= 12; ++d)
    for (long e = 2; e <= 12; ++e)
      for (std::size_t deg : {0, 1}) {
        ZMod g = z_ext(ZMod::cyclic(ZRing{}, d), ZMod::cyclic(ZRing{}, e), deg);
        const long c = std::gcd(d, e);
        std::vector<BigInt> expect;
        if (c > 1) expect.push_back(c);
        o.expect(g.invariant_factors() == expect, "Ext^" + std::to_string(deg) + "(Z/" + std::to_string(d) + ", Z/" +
                                                       std::to_string(e) + ")");
        ++closed;
      }
  Rng rng(2024);
  std::size_t triples = 0, nonzero = 0;
  const auto rings = bundled_rings();
  for (std::size_t i = 0; triples < 210; ++i) {
    const Ring& r = rings[i % rings.size()];
    Mod m = random_module(r, rng, 4), n = random_module(r, rng, 4);
    const std::size_t deg = rng.below(4);
    ExtResult a = ext(m, n, deg, CoverStyle::Minimal);
    ExtResult b = ext(m, n, deg, CoverStyle::SeededRandom, rng.next());
    o.expect(a.module.dim() == b.module.dim() && find_isomorphism(a.module, b.module).has_value(),
             "minimal vs seeded-random Ext on triple " + std::to_string(triples));
    nonzero += a.module.dim() > 0;
    ++triples;
  }
  o.note << closed << " closed-form cases, " << triples << " finite triples isomorphic (" << nonzero << " nonzero)";
  return o;
}

Outcome suites() {
  Outcome o;
  veritas::VerifyConfig cfg;
  cfg.seed = 0;
  cfg.trials = 100;
  std::size_t failures = 0, trials = 0;
  std::set<std::string> ids;
  for (const auto& r : veritas::full_suite(cfg)) {
    failures += r.failures;
    trials += r.trials;
    ids.insert(r.theorem);
    o.expect(r.failures == 0, r.theorem + " has failures");
  }
  for (const char* id : {"lemma-1.1", "lemma-1.2", "theorem-1.3", "cor-1.4", "lemma-2.3", "cor-2.7", "prop-2.9",
                         "prop-2.10", "prop-2.12", "cor-3.3", "cor-3.5", "prop-4.1"})
    o.expect(ids.count(id) == 1, std::string("suite covers ") + id);
  o.note << ids.size() << " entries, " << trials << " trials, " << failures << " failures";
  return o;
}

Outcome duality() {
  Outcome o;
  Rng rng(77);
  std::size_t modules = 0, positive = 0, beyond = 0;
  const auto rings = bundled_rings();
  for (std::size_t i = 0; modules < 210; ++i) {
    const Ring& r = rings[i % rings.size()];
    MultSet s = veritas::gen::random_multset(r, rng);
    Mod m = random_module(r, rng, 5);
    Dim direct = s_id_direct(m, s, 6).value;
    Dim dual = s_pd(character_dual(m), s, 6).value;
    o.expect(direct == dual, "s_id vs s_pd of the dual, module " + std::to_string(modules) + ": " + direct.str() +
                                 " vs " + dual.str());
    positive += direct.finite() && *direct.value > 0;
    beyond += !direct.finite();
    ++modules;
  }
  o.note << modules << " modules across " << rings.size() << " rings (" << positive << " with value > 0, " << beyond
         << " beyond bound)";
  return o;
}

Outcome degenerate() {
  Outcome o;
  const std::size_t bound = 6;
  std::vector<Mod> mods;
  Ring e = io::parse_ring(io::load_file(fixture("example36.json"))).algebra();
  Ring t2 = io::parse_ring(io::load_file(fixture("F2_t2.json"))).algebra();
  mods.push_back(io::parse_module(io::load_file(fixture("m1.json")), e));
  mods.push_back(io::parse_module(io::load_file(fixture("m2.json")), e));
  mods.push_back(io::parse_module(io::load_file(fixture("residue_t2.json")), t2));
  Rng rng(31);
  const auto rings = bundled_rings();
  for (std::size_t i = 0; i < 140; ++i) mods.push_back(random_module(rings[i % rings.size()], rng, 5));

  std::size_t zero_checks = 0, classical_checks = 0;
  for (const Mod& m : mods) {
    const Ring& r = m.ring();
    MultSet with_zero = MultSet::closure(r, {r->zero()});
    o.expect(s_pd(m, with_zero, bound).value == Dim::exact(0, bound), "S-pd with 0 in S");
    o.expect(s_id(m, with_zero, bound).value == Dim::exact(0, bound), "S-id with 0 in S");
    zero_checks += 2;
    auto c = classical_pd(m, bound);
    if (c) {
      o.expect(s_pd(m, MultSet::closure(r, {}), bound).value == Dim::exact(*c, bound), "S={1} pd equals classical pd");
      ++classical_checks;
    }
  }
  for (const Ring& r : rings) {
    o.expect(s_gldim(r, MultSet::closure(r, {r->zero()}), bound, 10, 0).candidate == Dim::exact(0, bound),
             "S-gl.dim with 0 in S");
    ++zero_checks;
  }
  o.note << zero_checks << " zero-collapse queries, " << classical_checks << " modules with classical pd <= " << bound;
  return o;
}

Outcome determinism() {
  Outcome o;
  auto a = cli("verify all --seed 0 --json");
  auto b = cli("verify all --seed 0 --json");
  o.expect(a.first == 0 && b.first == 0, "verify all exits 0");
  o.expect(!a.second.empty() && a.second == b.second, "byte-identical reports");
  o.note << a.second.size() << " bytes, identical: " << (a.second == b.second ? "yes" : "no");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 worked example reproduction", example},
      {"2 factor ring +1 identity", factor_ring},
      {"3 Ext oracle equivalence", ext_oracles},
      {"4 theorem property suites", suites},
      {"5 duality consistency", duality},
      {"6 degenerate collapse", degenerate},
      {"7 determinism", determinism},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-32s %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.note.str().c_str(), secs);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
