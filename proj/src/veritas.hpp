#pragma once

// Seeded property sweeps over generated finite instances, one per registry
// entry, with replayable counterexample dumps.

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "sdim.hpp"

namespace shom::veritas {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct VerifyConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t bound = 3;
  std::size_t cap = 5;  // module dimension cap for generated instances
};

struct VerifyReport {
  std::string theorem;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t vacuous = 0;
  std::vector<json> counterexamples;
  std::uint64_t seed = 0;
  double seconds = 0;  // not part of the JSON form

  bool passed() const { return failures == 0; }
  ojson to_json() const;
};

struct RegistryEntry {
  std::string id;
  std::string statement;
  /// "sampled", "finite-complete" or a mix; printed alongside each report.
  std::string regime;
};

const std::vector<RegistryEntry>& registry();
bool known_theorem(const std::string& id);

/// UnknownTheorem for ids outside the registry.
VerifyReport verify(const std::string& id, const VerifyConfig& config = {});
std::vector<VerifyReport> full_suite(const VerifyConfig& config = {});
ojson suite_json(const std::vector<VerifyReport>& reports, const VerifyConfig& config);

struct ReplayResult {
  Verdict verdict = Verdict::Pass;
  bool identical = false;  // the regenerated dump equals the stored one
  json dump;
};

/// Re-runs the trial recorded in a counterexample dump in isolation.
ReplayResult replay(const json& dump);

/// Instance generators, deterministic in (ring, cap, rng state).
namespace gen {

const std::vector<Ring>& suite_rings();
MultSet random_multset(const Ring& ring, Rng& rng);
/// S' generated by a subset of the seeds of S, so S' is contained in S.
std::pair<MultSet, MultSet> nested_multsets(const Ring& ring, Rng& rng);
/// A module killed by s.
Mod torsion_noise(const Ring& ring, const Vec& s, Rng& rng, std::size_t cap);

struct Triple {
  ModMap f, g;
  std::string shape;
};
/// Exact core 0 -> Ker -> M -> Im -> 0 with S-torsion noise at one node;
/// `cover` forces the core 0 -> K -> F -> M -> 0 from a free cover.
Triple s_exact_triple(const Ring& ring, const MultSet& s, Rng& rng, std::size_t cap, bool cover = false);

/// M + T -> N: multiplication by s on M, then a random isomorphism, with T
/// S-torsion in the kernel.
ModMap s_iso_pair(const Ring& ring, const MultSet& s, Rng& rng, std::size_t cap);

}  // namespace gen

}  // namespace shom::veritas
