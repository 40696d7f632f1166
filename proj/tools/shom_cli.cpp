// Command-line front end over the C interface.
//
// Exit codes: 0 success or pass, 1 theorem failure, 2 input error,
// 3 internal error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shom/shom.h"

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2, kInternal = 3;

struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "shom: error: " << msg << "\n";
  throw Exit{code};
}

int exit_for(shom_status st) {
  return st == SHOM_INTERNAL_ERROR || st == SHOM_INTERNAL_INVARIANT_VIOLATION ? kInternal : kInput;
}

void check(shom_status st, const std::string& context) {
  if (st == SHOM_OK) return;
  die(exit_for(st), context.empty() ? shom_last_error() : context + ": " + shom_last_error());
}

// Relative names that do not exist here are looked up in $SHOM_FIXTURES, then
// in the fixture directory of the build.
std::string resolve_path(const std::string& name) {
  if (fs::exists(name)) return name;
  fs::path p(name);
  if (p.is_relative()) {
    if (const char* env = std::getenv("SHOM_FIXTURES")) {
      fs::path q = fs::path(env) / p;
      if (fs::exists(q)) return q.string();
    }
#ifdef SHOM_DEFAULT_FIXTURES
    fs::path q = fs::path(SHOM_DEFAULT_FIXTURES) / p;
    if (fs::exists(q)) return q.string();
#endif
  }
  die(kInput, name + ": no such file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kInput, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using RingH = Handle<shom_ring, shom_ring_free>;
using SetH = Handle<shom_multset, shom_multset_free>;
using ModH = Handle<shom_module, shom_module_free>;

void load_ring(RingH& h, const std::string& name) {
  std::string path = resolve_path(name);
  check(shom_ring_from_json(read_file(path).c_str(), &h.p), path);
}

void load_set(SetH& h, const RingH& r, const std::string& name) {
  std::string path = resolve_path(name);
  check(shom_multset_from_json(r.p, read_file(path).c_str(), &h.p), path);
}

void load_module(ModH& h, const RingH& r, const std::string& name) {
  std::string path = resolve_path(name);
  check(shom_module_from_json(r.p, read_file(path).c_str(), &h.p), path);
}

ojson take(char* s) {
  ojson j = ojson::parse(s);
  shom_string_free(s);
  return j;
}

std::string cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

void row(const std::string& key, const ojson& v) { std::printf("%-16s %s\n", key.c_str(), cell(v).c_str()); }

void list(const std::string& key, const ojson& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : ", ") + cell(x);
  row(key, s.empty() ? ojson("-") : ojson(s));
}

struct Options {
  std::string ring, multset, module, against, resolution, kind = "pd", style = "minimal", id, a, dump;
  std::size_t bound = 12, degree = 1, trials = 100;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool sabotage = false;
};

std::uint64_t seed_for(const Options& o, const std::string& cmd) {
  if (o.json && !o.seed) die(kInput, cmd + ": --seed is required with --json");
  return o.seed.value_or(0);
}

int print(const Options& o, const ojson& j, const std::function<void()>& table) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    table();
  return kPass;
}

void print_dim(const ojson& j, const std::string& label) {
  row(label, j["value"]);
  row("witness", j["witness"]);
  row("bound", j["bound"]);
  if (j.contains("dual_route")) row("dual route", j["dual_route"]);
  std::size_t level = 0;
  for (const auto& f : j["levels"]) row("level " + std::to_string(level++), f);
}

int cmd_ext(const Options& o) {
  RingH r;
  ModH m, n;
  if (!o.ring.empty()) load_ring(r, o.ring);
  if (o.module.empty() == o.resolution.empty()) die(kInput, "ext: give exactly one of --module and --resolution");
  load_module(n, r, o.against);
  char* out = nullptr;
  if (!o.resolution.empty()) {
    std::string path = resolve_path(o.resolution);
    check(shom_ext_from_resolution(read_file(path).c_str(), r.p, n.p, o.degree, &out), path);
  } else {
    load_module(m, r, o.module);
    check(shom_ext(m.p, n.p, o.degree, &out), "ext");
  }
  ojson j = take(out);
  return print(o, j, [&] {
    row("degree", j["degree"]);
    if (j.contains("dim")) {
      row("dim over F_p", j["dim"]);
    } else {
      row("group", j["group"]);
      list("invariant factors", j["invariant_factors"]);
    }
  });
}

int cmd_dim(const Options& o, bool injective) {
  RingH r;
  SetH s;
  ModH m;
  load_ring(r, o.ring);
  load_set(s, r, o.multset);
  load_module(m, r, o.module);
  char* out = nullptr;
  check(injective ? shom_sid(m.p, s.p, o.bound, &out) : shom_spd(m.p, s.p, o.bound, &out), o.module);
  ojson j = take(out);
  return print(o, j, [&] { print_dim(j, injective ? "S-id" : "S-pd"); });
}

int cmd_sgldim(const Options& o) {
  RingH r;
  SetH s;
  load_ring(r, o.ring);
  load_set(s, r, o.multset);
  char* out = nullptr;
  check(shom_sgldim(r.p, s.p, o.bound, o.trials, seed_for(o, "sgldim"), &out), o.ring);
  ojson j = take(out);
  return print(o, j, [&] {
    row("S-gl.dim", j["value"]);
    row("cyclic sweep", j["sweep"]);
    row("bound", j["bound"]);
    row("trials", j["trials"]);
    row("exceedances", j["exceedances"]);
    row("seed", j["seed"]);
    row("caveat", j["caveat"]);
    for (const auto& i : j["ideals"]) {
      std::string gens;
      for (const auto& g : i["ideal"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
      row("R/(" + gens + ")", "pd " + cell(i["pd"]) + ", id " + cell(i["id"]));
    }
  });
}

int cmd_ssemisimple(const Options& o) {
  RingH r;
  SetH s;
  load_ring(r, o.ring);
  load_set(s, r, o.multset);
  char* out = nullptr;
  check(shom_ssemisimple(r.p, s.p, &out), o.ring);
  ojson j = take(out);
  return print(o, j, [&] {
    row("S-semisimple", j["verdict"]);
    row("witness", j["witness"]);
    for (const auto& i : j["images"]) {
      std::string gens;
      for (const auto& g : i["ideal"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
      row("f(1) on (" + gens + ")", i["image_of_1"]);
    }
  });
}

int cmd_storsion(const Options& o) {
  RingH r;
  SetH s;
  ModH m;
  load_ring(r, o.ring);
  load_set(s, r, o.multset);
  load_module(m, r, o.module);
  char* out = nullptr;
  check(shom_storsion(m.p, s.p, &out), o.module);
  ojson j = take(out);
  return print(o, j, [&] {
    row("S-torsion", j["verdict"]);
    row("witness", j["witness"]);
    row("detail", j["detail"]);
  });
}

int cmd_localprofile(const Options& o) {
  RingH r;
  ModH m;
  load_ring(r, o.ring);
  load_module(m, r, o.module);
  char* out = nullptr;
  check(shom_localprofile(m.p, o.kind == "id" ? SHOM_INJECTIVE : SHOM_PROJECTIVE, o.bound, &out), o.module);
  ojson j = take(out);
  return print(o, j, [&] {
    const std::string k = j["kind"].get<std::string>();
    for (const auto& e : j["entries"]) {
      std::string gens;
      for (const auto& g : e["prime"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
      row("p = (" + gens + ")" + (e["maximal"].get<bool>() ? "*" : ""), k + " " + cell(e["value"]));
    }
    row("classical " + k, j["classical"]);
    row("sup primes", j["sup_primes"]);
    row("sup maximal", j["sup_maximal"]);
    row("agrees", j["agrees"]);
  });
}

int cmd_factorcheck(const Options& o) {
  RingH r;
  SetH s;
  ModH m;
  load_ring(r, o.ring.empty() ? std::string("Z.json") : o.ring);
  if (shom_ring_is_finite(r.p)) die(kInput, "factorcheck: --ring must be the integers");
  load_set(s, r, o.multset);
  load_module(m, RingH{}, o.module);
  char* out = nullptr;
  check(shom_factorcheck(o.a.c_str(), m.p, s.p, o.bound, &out), o.module);
  ojson j = take(out);
  print(o, j, [&] {
    std::cout << j["message"].get<std::string>() << "\n";
    row("a", j["a"]);
    row("module", j["module"]);
    row("S-pd over Z", j["over_z"]);
    row("over Z/a", j["over_quotient"]);
    row("verdict", j["verdict"]);
  });
  return j["verdict"] == "fail" ? kFail : kPass;
}

int cmd_resolve(const Options& o) {
  RingH r;
  ModH m;
  if (!o.ring.empty()) load_ring(r, o.ring);
  load_module(m, r, o.module);
  shom_cover_style style = SHOM_MINIMAL;
  if (o.style == "plain") style = SHOM_PLAIN;
  if (o.style == "random") style = SHOM_SEEDED_RANDOM;
  std::uint64_t seed = style == SHOM_SEEDED_RANDOM ? seed_for(o, "resolve") : o.seed.value_or(0);
  char* out = nullptr;
  check(shom_resolve(m.p, o.bound, style, seed, &out), o.module);
  ojson j = take(out);
  return print(o, j, [&] {
    list("ranks", j["ranks"]);
    std::cout << j.dump(2) << "\n";
  });
}

int cmd_verify(const Options& o) {
  char* out = nullptr;
  std::size_t failures = 0;
  const std::uint64_t seed = seed_for(o, "verify");
  auto t0 = std::chrono::steady_clock::now();
  check(shom_verify(o.id.c_str(), seed, o.trials, o.bound, &out, &failures), "verify " + o.id);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ojson j = take(out);
  print(o, j, [&] {
    char* reg = nullptr;
    check(shom_registry(&reg), "");
    ojson registry = take(reg);
    auto regime = [&](const std::string& id) -> std::string {
      for (const auto& e : registry)
        if (e["id"] == id) return e["regime"];
      return "";
    };
    ojson reports = j.contains("reports") ? j["reports"] : ojson::array({j});
    std::printf("%-12s %7s %7s %8s %7s  %s\n", "theorem", "trials", "passes", "failures", "vacuous", "regime");
    for (const auto& r : reports)
      std::printf("%-12s %7zu %7zu %8zu %7zu  %s\n", r["theorem"].get<std::string>().c_str(), r["trials"].get<std::size_t>(),
                  r["passes"].get<std::size_t>(), r["failures"].get<std::size_t>(), r["vacuous"].get<std::size_t>(),
                  regime(r["theorem"]).c_str());
    std::printf("seed %llu, bound %zu, failures %zu\n", static_cast<unsigned long long>(seed), o.bound, failures);
    for (const auto& r : reports)
      for (const auto& c : r["counterexamples"]) std::cout << "counterexample: " << c.dump() << "\n";
  });
  std::fprintf(stderr, "wall time %.2fs\n", secs);
  return failures ? kFail : kPass;
}

int cmd_replay(const Options& o) {
  std::string path = resolve_path(o.dump);
  std::string text = read_file(path);
  char* out = nullptr;
  check(shom_replay(text.c_str(), &out), path);
  ojson j = take(out);
  print(o, j, [&] {
    row("verdict", j["verdict"]);
    row("identical", j["identical"]);
    if (j["dump"].contains("detail")) row("detail", j["dump"]["detail"]);
  });
  return j["verdict"] == "fail" ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-relative homological algebra over finite commutative algebras and the integers"};
  app.require_subcommand(1);
  Options o;

  auto ring = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--ring", o.ring, "ring document");
    if (required) opt->required();
  };
  auto multset = [&](CLI::App* c) { c->add_option("--multset", o.multset, "multiplicative set document")->required(); };
  auto module = [&](CLI::App* c) { c->add_option("--module", o.module, "module document")->required(); };
  // Subcommands share o.bound but not its default.
  std::vector<std::tuple<CLI::App*, CLI::Option*, std::size_t>> bounds;
  auto bound = [&](CLI::App* c, std::size_t def) {
    bounds.emplace_back(c, c->add_option("--bound", o.bound, "depth bound (default " + std::to_string(def) + ")"), def);
  };
  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "master seed (required with --json)"); };
  auto json = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };

  CLI::App* ext = app.add_subcommand("ext", "Ext^n(M, N)");
  ring(ext, false);
  auto* ext_m = ext->add_option("--module", o.module, "first argument M");
  auto* ext_r = ext->add_option("--resolution", o.resolution, "exported resolution of M");
  ext_m->excludes(ext_r);
  ext->add_option("--against", o.against, "second argument N")->required();
  ext->add_option("--degree", o.degree, "n")->default_val(1);
  json(ext);

  CLI::App* spd = app.add_subcommand("spd", "S-projective dimension");
  CLI::App* sid = app.add_subcommand("sid", "S-injective dimension");
  CLI::App* storsion = app.add_subcommand("storsion", "uniform S-torsion test");
  for (CLI::App* c : {spd, sid, storsion}) {
    ring(c, true);
    multset(c);
    module(c);
    if (c != storsion) bound(c, 12);
    json(c);
  }

  CLI::App* sgldim = app.add_subcommand("sgldim", "S-global dimension");
  ring(sgldim, true);
  multset(sgldim);
  bound(sgldim, 12);
  sgldim->add_option("--trials", o.trials, "random modules sampled")->default_val(100);
  seed(sgldim);
  json(sgldim);

  CLI::App* ss = app.add_subcommand("ssemisimple", "S-semisimplicity witness search");
  ring(ss, true);
  multset(ss);
  json(ss);

  CLI::App* lp = app.add_subcommand("localprofile", "dimensions at every prime");
  ring(lp, true);
  module(lp);
  lp->add_option("--kind", o.kind, "pd or id")->check(CLI::IsMember({"pd", "id"}))->default_val("pd");
  bound(lp, 12);
  json(lp);

  CLI::App* fc = app.add_subcommand("factorcheck", "S-pd over Z against S-pd over Z/a");
  fc->add_option("--a", o.a, "the modulus a")->required();
  ring(fc, false);
  multset(fc);
  module(fc);
  bound(fc, 12);
  json(fc);

  CLI::App* verify = app.add_subcommand("verify", "run registry sweeps");
  verify->add_option("id", o.id, "registry id or 'all'")->required();
  verify->add_option("--trials", o.trials, "trials per entry")->default_val(100);
  bounds.emplace_back(verify, verify->add_option("--bound", o.bound, "dimension cutoff inside each trial (default 3)"), 3);
  seed(verify);
  json(verify);
  verify->add_flag("--sabotage-connecting", o.sabotage)->group("");

  CLI::App* resolve = app.add_subcommand("resolve", "export a free resolution");
  ring(resolve, false);
  module(resolve);
  bound(resolve, 12);
  resolve->add_option("--style", o.style, "minimal, plain or random")
      ->check(CLI::IsMember({"minimal", "plain", "random"}))
      ->default_val("minimal");
  seed(resolve);
  json(resolve);

  CLI::App* replay = app.add_subcommand("replay", "re-run a counterexample dump");
  replay->add_option("dump", o.dump, "dump file")->required();
  json(replay);
  replay->add_flag("--sabotage-connecting", o.sabotage)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }
  for (const auto& [sub, opt, def] : bounds)
    if (sub->parsed() && opt->count() == 0) o.bound = def;

  if (o.sabotage) shom_set_connecting_sabotage(1);
  try {
    if (ext->parsed()) return cmd_ext(o);
    if (spd->parsed()) return cmd_dim(o, false);
    if (sid->parsed()) return cmd_dim(o, true);
    if (storsion->parsed()) return cmd_storsion(o);
    if (sgldim->parsed()) return cmd_sgldim(o);
    if (ss->parsed()) return cmd_ssemisimple(o);
    if (lp->parsed()) return cmd_localprofile(o);
    if (fc->parsed()) return cmd_factorcheck(o);
    if (verify->parsed()) return cmd_verify(o);
    if (resolve->parsed()) return cmd_resolve(o);
    if (replay->parsed()) return cmd_replay(o);
  } catch (const Exit& e) {
    return e.code;
  }
  return kInput;
}
