#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "common.hpp"
#include "error.hpp"
#include "veritas.hpp"

using namespace shom;
using namespace testkit;
namespace v = shom::veritas;

TEST_CASE("registry covers exactly the in-scope statements") {
  const std::set<std::string> expected = {"lemma-1.1", "lemma-1.2", "theorem-1.3", "cor-1.4",   "lemma-2.3", "prop-2.5",
                                          "prop-2.6",  "cor-2.7",   "prop-2.9",    "prop-2.10", "prop-2.12", "prop-3.2",
                                          "cor-3.3",   "cor-3.5",   "example-3.6", "prop-4.1",  "prop-4.3"};
  std::set<std::string> got;
  for (const auto& e : v::registry()) {
    CHECK(got.insert(e.id).second);
    CHECK(!e.statement.empty());
    CHECK(!e.regime.empty());
  }
  CHECK(got == expected);
  CHECK(v::known_theorem("prop-2.9"));
  CHECK_FALSE(v::known_theorem("prop-9.9"));
  try {
    v::verify("prop-9.9");
    FAIL("expected UnknownTheorem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownTheorem);
  }
}

TEST_CASE("every entry passes at the default configuration") {
  v::VerifyConfig cfg;
  for (const auto& e : v::registry()) {
    v::VerifyReport r = v::verify(e.id, cfg);
    CHECK_MESSAGE(r.failures == 0, e.id);
    CHECK(r.passes + r.vacuous + r.failures == cfg.trials);
    CHECK(r.counterexamples.empty());
    // Infinite dimensions beyond the bound are vacuous, but every entry decides somewhere.
    CHECK_MESSAGE(r.passes > 0, e.id);
  }
}

TEST_CASE("reports are deterministic and follow the fixed schema") {
  v::VerifyConfig cfg;
  cfg.trials = 20;
  cfg.seed = 42;
  auto a = v::verify("cor-2.7", cfg).to_json().dump();
  auto b = v::verify("cor-2.7", cfg).to_json().dump();
  CHECK(a == b);
  v::ojson j = v::ojson::parse(a);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"theorem", "trials", "passes", "failures", "vacuous", "counterexamples", "seed"});
}

TEST_CASE("different seeds draw different instances") {
  v::VerifyConfig cfg;
  cfg.trials = 30;
  std::set<std::string> seen;
  for (std::uint64_t seed : {0, 1, 2}) {
    cfg.seed = seed;
    seen.insert(v::suite_json(v::full_suite(cfg), cfg).dump());
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("sabotaged connecting maps fail theorem-1.3 with replayable dumps") {
  v::VerifyConfig cfg;
  cfg.trials = 40;
  set_connecting_sabotage(true);
  v::VerifyReport r = v::verify("theorem-1.3", cfg);
  CHECK(r.failures > 0);
  REQUIRE(!r.counterexamples.empty());
  for (const auto& dump : r.counterexamples) {
    CHECK(dump.contains("instance"));
    CHECK(dump["instance"].contains("ring"));
    CHECK(dump["instance"]["maps"].contains("f"));
    v::ReplayResult rr = v::replay(v::json::parse(dump.dump()));
    CHECK(rr.verdict == Verdict::Fail);
    CHECK(rr.identical);
  }
  set_connecting_sabotage(false);
  // Without sabotage the same trial passes on replay.
  CHECK(v::replay(r.counterexamples.front()).verdict != Verdict::Fail);
  CHECK(v::verify("theorem-1.3", cfg).failures == 0);
}

TEST_CASE("bound 0 reports vacuous outcomes without false failures") {
  v::VerifyConfig cfg;
  cfg.trials = 30;
  cfg.bound = 0;
  std::size_t vacuous = 0;
  for (const auto& e : v::registry()) {
    v::VerifyReport r = v::verify(e.id, cfg);
    CHECK_MESSAGE(r.failures == 0, e.id);
    vacuous += r.vacuous;
  }
  CHECK(vacuous > 0);
}

TEST_CASE("instance generators") {
  Rng rng(9);
  for (const Ring& r : v::gen::suite_rings()) {
    for (int t = 0; t < 6; ++t) {
      MultSet s = v::gen::random_multset(r, rng);
      CHECK(s.is_multiplicatively_closed());
      auto [small, big] = v::gen::nested_multsets(r, rng);
      CHECK(small.is_subset_of(big));
      v::gen::Triple tr = v::gen::s_exact_triple(r, s, rng, 4);
      CHECK(s_exactness_check(short_chain(tr.f, tr.g), s).passed());
      ModMap f = v::gen::s_iso_pair(r, s, rng, 4);
      CHECK(is_s_isomorphism(f, s).verdict());
      const Vec& x = s.elements().back();
      Mod noise = v::gen::torsion_noise(r, x, rng, 3);
      CHECK(noise.act(x).is_zero());
    }
  }
  // Over F_2 a module of dimension d has scalar action by 1.
  Ring f2 = rings::prime_field(2);
  for (int t = 0; t < 5; ++t) {
    Mod m = random_module(f2, rng, 3);
    CHECK(m.dim() <= 3);
    CHECK(m.action(0) == Mat::identity(2, m.dim()));
  }
  // The minimal nesting on the example ring.
  Ring e = rings::example36();
  CHECK(MultSet::closure(e, {}).is_subset_of(mult(e, {"e1"})));
}

TEST_CASE("generated modules are not degenerate") {
  Rng rng(1);
  std::size_t total = 0, zero = 0;
  for (const Ring& r : v::gen::suite_rings())
    for (int t = 0; t < 20; ++t) {
      Mod m = random_module(r, rng, 5);
      total += m.dim();
      zero += m.dim() == 0;
    }
  CHECK(zero < 20);
  CHECK(total > 140);
}

TEST_CASE("containment sweep at seed 42") {
  v::VerifyConfig cfg;
  cfg.trials = 200;
  cfg.seed = 42;
  v::VerifyReport r = v::verify("cor-2.7", cfg);
  CHECK(r.failures == 0);
  CHECK(r.passes + r.vacuous == 200);
  CHECK(r.to_json()["seed"] == 42);
}
