#include "shom/shom.h"

#include <cstring>
#include <variant>

#include "error.hpp"
#include "json_io.hpp"
#include "veritas.hpp"
#include "zbackend.hpp"

using namespace shom;
using io::json;
using ojson = nlohmann::ordered_json;

struct shom_ring {
  io::AnyRing ring;
};

struct shom_multset {
  std::variant<MultSet, ZMultSet> set;
};

struct shom_module {
  std::variant<Mod, ZMod> mod;
};

namespace {

static_assert(static_cast<int>(ErrorCode::InternalInvariantViolation) + 1 == SHOM_INTERNAL_INVARIANT_VIOLATION,
              "status codes mirror ErrorCode");

thread_local std::string g_last_error;

shom_status set_error(shom_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class F>
shom_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    fn();
    return SHOM_OK;
  } catch (const Error& e) {
    return set_error(static_cast<shom_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const json::parse_error& e) {
    return set_error(SHOM_INVALID_INPUT, "InvalidInput: malformed JSON at byte " + std::to_string(e.byte));
  } catch (const json::exception& e) {
    return set_error(SHOM_INVALID_INPUT, std::string("InvalidInput: ") + e.what());
  } catch (const std::exception& e) {
    return set_error(SHOM_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class J>
void emit(const J& doc, char** out) {
  *out = dup(doc.dump());
}

json parse_text(const char* text) { return json::parse(text); }

ojson dim_json(const Dim& d) {
  if (d.finite()) return *d.value;
  return d.str();
}

std::string big_str(const BigInt& x) { return x.str(); }

json ideal_generators(const FiniteAlgebra& ring, const Ideal& ideal) {
  json gens = json::array();
  for (std::size_t c = 0; c < ideal.basis.cols(); ++c) gens.push_back(ring.format(ideal.basis.col(c)));
  return gens;
}

const MultSet& finite_set(const shom_multset* s) {
  if (!std::holds_alternative<MultSet>(s->set))
    fail(ErrorCode::RingMismatch, "multiplicative set is over the integers, module is over a finite algebra");
  return std::get<MultSet>(s->set);
}

const ZMultSet& integer_set(const shom_multset* s) {
  if (!std::holds_alternative<ZMultSet>(s->set))
    fail(ErrorCode::RingMismatch, "multiplicative set is over a finite algebra, module is over the integers");
  return std::get<ZMultSet>(s->set);
}

void same_ring(const Mod& m, const MultSet& s) {
  require(m.ring()->same_as(*s.ring()), ErrorCode::RingMismatch, "module and multiplicative set live over different rings");
}

void same_ring(const ZMod& m, const ZMultSet& s) {
  require(m.ring.m == s.ring.m, ErrorCode::RingMismatch,
          "module over " + m.ring.name() + " but multiplicative set over " + s.ring.name());
}

ojson witness_json(const std::optional<SplitWitness>& w, const FiniteAlgebra& ring) {
  if (!w) return nullptr;
  return ring.format(w->s);
}

ojson failures_json(const std::vector<std::string>& failures) {
  ojson out = ojson::array();
  for (const auto& f : failures) out.push_back(f);
  return out;
}

}  // namespace

extern "C" {

const char* shom_version(void) { return "0.1.0"; }

const char* shom_status_name(shom_status status) {
  switch (status) {
    case SHOM_OK:
      return "Ok";
    case SHOM_NULL_ARGUMENT:
      return "NullArgument";
    case SHOM_INTERNAL_ERROR:
      return "InternalError";
    default:
      if (status > SHOM_OK && status <= SHOM_INTERNAL_INVARIANT_VIOLATION)
        return error_code_name(static_cast<ErrorCode>(status - 1));
      return "Unknown";
  }
}

const char* shom_last_error(void) { return g_last_error.c_str(); }

void shom_string_free(char* s) { std::free(s); }

#define SHOM_NEED(p)                                                  \
  do {                                                                \
    if (!(p)) return set_error(SHOM_NULL_ARGUMENT, "null argument: " #p); \
  } while (0)

shom_status shom_ring_from_json(const char* text, shom_ring** out) {
  SHOM_NEED(text);
  SHOM_NEED(out);
  return guarded([&] { *out = new shom_ring{io::parse_ring(parse_text(text))}; });
}

void shom_ring_free(shom_ring* ring) { delete ring; }

int shom_ring_is_finite(const shom_ring* ring) { return ring && ring->ring.finite() ? 1 : 0; }

shom_status shom_ring_to_json(const shom_ring* ring, char** out) {
  SHOM_NEED(ring);
  SHOM_NEED(out);
  return guarded([&] {
    emit(ring->ring.finite() ? io::ring_to_json(ring->ring.algebra()) : io::ring_to_json(ring->ring.integers()), out);
  });
}

shom_status shom_multset_from_json(const shom_ring* ring, const char* text, shom_multset** out) {
  SHOM_NEED(ring);
  SHOM_NEED(text);
  SHOM_NEED(out);
  return guarded([&] {
    json doc = parse_text(text);
    if (ring->ring.finite())
      *out = new shom_multset{io::parse_multset(doc, ring->ring.algebra())};
    else
      *out = new shom_multset{io::parse_zmultset(doc, ring->ring.integers())};
  });
}

void shom_multset_free(shom_multset* s) { delete s; }

shom_status shom_multset_to_json(const shom_multset* s, char** out) {
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    if (std::holds_alternative<MultSet>(s->set))
      emit(io::multset_to_json(std::get<MultSet>(s->set)), out);
    else
      emit(io::zmultset_to_json(std::get<ZMultSet>(s->set)), out);
  });
}

shom_status shom_module_from_json(const shom_ring* ring, const char* text, shom_module** out) {
  SHOM_NEED(text);
  SHOM_NEED(out);
  return guarded([&] {
    json doc = parse_text(text);
    if (ring && ring->ring.finite()) {
      *out = new shom_module{io::parse_module(doc, ring->ring.algebra())};
      return;
    }
    std::optional<ZRing> zr;
    if (ring) zr = ring->ring.integers();
    if (!doc.is_object() || doc.value("kind", "") != "z_presentation")
      fail(ErrorCode::InvalidInput, "/kind: a module without a finite ring must be a z_presentation");
    *out = new shom_module{io::parse_zmod(doc, zr)};
  });
}

void shom_module_free(shom_module* m) { delete m; }

shom_status shom_module_to_json(const shom_module* m, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(out);
  return guarded([&] {
    if (std::holds_alternative<Mod>(m->mod))
      emit(io::module_to_json(std::get<Mod>(m->mod)), out);
    else
      emit(io::zmod_to_json(std::get<ZMod>(m->mod)), out);
  });
}

namespace {

ojson zmod_summary(const ZMod& g) {
  ojson factors = ojson::array();
  for (const BigInt& d : g.invariant_factors()) factors.push_back(big_str(d));
  return ojson{{"group", g.str()}, {"invariant_factors", factors}};
}

ojson ext_json(const ExtResult& e) {
  ojson j;
  j["degree"] = e.n;
  j["dim"] = e.module.dim();
  j["module"] = io::module_to_json(e.module);
  return j;
}

ojson zext_json(const ZMod& g, std::size_t degree) {
  ojson j;
  j["degree"] = degree;
  ojson s = zmod_summary(g);
  j["group"] = s["group"];
  j["invariant_factors"] = s["invariant_factors"];
  return j;
}

}  // namespace

shom_status shom_ext(const shom_module* m, const shom_module* n, size_t degree, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(n);
  SHOM_NEED(out);
  return guarded([&] {
    if (m->mod.index() != n->mod.index()) fail(ErrorCode::RingMismatch, "modules over different backends");
    if (std::holds_alternative<Mod>(m->mod)) {
      const Mod& a = std::get<Mod>(m->mod);
      const Mod& b = std::get<Mod>(n->mod);
      require(a.ring()->same_as(*b.ring()), ErrorCode::RingMismatch, "modules over different rings");
      emit(ext_json(ext(a, b, degree)), out);
    } else {
      const ZMod& a = std::get<ZMod>(m->mod);
      const ZMod& b = std::get<ZMod>(n->mod);
      require(a.ring.m == b.ring.m, ErrorCode::RingMismatch, "modules over different rings");
      emit(zext_json(z_ext(a, b, degree), degree), out);
    }
  });
}

shom_status shom_spd(const shom_module* m, const shom_multset* s, size_t bound, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    ojson j;
    if (std::holds_alternative<Mod>(m->mod)) {
      const Mod& mod = std::get<Mod>(m->mod);
      const MultSet& set = finite_set(s);
      same_ring(mod, set);
      DimResult r = s_pd(mod, set, bound);
      j["value"] = dim_json(r.value);
      j["witness"] = witness_json(r.witness, *mod.ring());
      j["bound"] = bound;
      j["levels"] = failures_json(r.failures);
    } else {
      const ZMod& mod = std::get<ZMod>(m->mod);
      const ZMultSet& set = integer_set(s);
      same_ring(mod, set);
      ZDimResult r = z_s_pd(mod, set, bound);
      j["value"] = dim_json(r.value);
      j["witness"] = r.witness ? ojson(r.witness->expression) : ojson(nullptr);
      j["bound"] = bound;
      j["levels"] = failures_json(r.failures);
    }
    emit(j, out);
  });
}

shom_status shom_sid(const shom_module* m, const shom_multset* s, size_t bound, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    if (!std::holds_alternative<Mod>(m->mod))
      fail(ErrorCode::BackendUnsupported, "S-injective dimension is not available over the integers");
    const Mod& mod = std::get<Mod>(m->mod);
    const MultSet& set = finite_set(s);
    same_ring(mod, set);
    DimResult r = s_id(mod, set, bound);
    ojson j;
    j["value"] = dim_json(r.value);
    j["witness"] = witness_json(r.witness, *mod.ring());
    j["bound"] = bound;
    j["dual_route"] = r.dual_route ? dim_json(*r.dual_route) : ojson(nullptr);
    j["levels"] = failures_json(r.failures);
    j["note"] = "each witness certifies the injective cocover sequence directly; no claim that it is uniform over test modules";
    emit(j, out);
  });
}

namespace {

const Ring& finite_ring(const shom_ring* ring, const char* what) {
  if (!ring->ring.finite()) fail(ErrorCode::BackendUnsupported, std::string(what) + " needs a finite algebra");
  return ring->ring.algebra();
}

}  // namespace

shom_status shom_sgldim(const shom_ring* ring, const shom_multset* s, size_t bound, size_t trials, uint64_t seed,
                        char** out) {
  SHOM_NEED(ring);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    const Ring& r = finite_ring(ring, "sgldim");
    const MultSet& set = finite_set(s);
    require(r->same_as(*set.ring()), ErrorCode::RingMismatch, "multiplicative set over a different ring");
    GlobalDimReport g = s_gldim(r, set, bound, trials, seed);
    ojson j;
    j["value"] = dim_json(g.candidate);
    j["sweep"] = dim_json(g.sweep);
    j["bound"] = bound;
    j["trials"] = g.trials;
    j["exceedances"] = g.exceedances;
    j["seed"] = g.seed;
    j["caveat"] = g.caveat;
    ojson ideals = ojson::array();
    for (const IdealDims& d : g.ideals)
      ideals.push_back(ojson{{"ideal", ideal_generators(*r, d.ideal)}, {"pd", dim_json(d.pd)}, {"id", dim_json(d.id)}});
    j["ideals"] = ideals;
    emit(j, out);
  });
}

shom_status shom_ssemisimple(const shom_ring* ring, const shom_multset* s, char** out) {
  SHOM_NEED(ring);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    const Ring& r = finite_ring(ring, "ssemisimple");
    const MultSet& set = finite_set(s);
    require(r->same_as(*set.ring()), ErrorCode::RingMismatch, "multiplicative set over a different ring");
    SemisimpleReport rep = is_s_semisimple(r, set);
    ojson j;
    j["verdict"] = rep.verdict;
    j["witness"] = rep.s ? ojson(r->format(*rep.s)) : ojson(nullptr);
    ojson images = ojson::array();
    for (std::size_t i = 0; i < rep.images.size() && i < rep.ideals.size(); ++i)
      images.push_back(ojson{{"ideal", ideal_generators(*r, rep.ideals[i])}, {"image_of_1", r->format(rep.images[i])}});
    j["images"] = images;
    ojson failures = ojson::array();
    for (const auto& [x, idx] : rep.failures) failures.push_back(ojson{{"s", r->format(x)}, {"first_failing_ideal", idx}});
    j["rejected"] = failures;
    emit(j, out);
  });
}

shom_status shom_storsion(const shom_module* m, const shom_multset* s, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    ojson j;
    if (std::holds_alternative<Mod>(m->mod)) {
      const Mod& mod = std::get<Mod>(m->mod);
      const MultSet& set = finite_set(s);
      same_ring(mod, set);
      STorsionWitness w = is_uniformly_s_torsion(mod, set);
      j["verdict"] = w.verdict;
      j["witness"] = w.s ? ojson(mod.ring()->format(*w.s)) : ojson(nullptr);
      j["detail"] = w.detail;
    } else {
      const ZMod& mod = std::get<ZMod>(m->mod);
      const ZMultSet& set = integer_set(s);
      same_ring(mod, set);
      ZTorsion w = z_uniform_torsion(mod, set);
      j["verdict"] = w.verdict;
      j["witness"] = w.verdict ? ojson(w.expression) : ojson(nullptr);
      j["detail"] = w.detail;
    }
    emit(j, out);
  });
}

shom_status shom_localprofile(const shom_module* m, shom_dim_kind kind, size_t bound, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(out);
  return guarded([&] {
    if (!std::holds_alternative<Mod>(m->mod))
      fail(ErrorCode::BackendUnsupported, "local profiles need a finite algebra");
    const Mod& mod = std::get<Mod>(m->mod);
    LocalProfile p = local_profile(mod, kind == SHOM_INJECTIVE ? DimKind::Injective : DimKind::Projective, bound);
    ojson j;
    j["kind"] = kind == SHOM_INJECTIVE ? "id" : "pd";
    j["bound"] = bound;
    ojson entries = ojson::array();
    for (const LocalEntry& e : p.entries)
      entries.push_back(ojson{{"prime", ideal_generators(*mod.ring(), e.prime)},
                              {"maximal", e.prime.maximal},
                              {"value", dim_json(e.value)}});
    j["entries"] = entries;
    j["classical"] = dim_json(p.classical);
    j["sup_primes"] = dim_json(p.sup_primes);
    j["sup_maximal"] = dim_json(p.sup_maximal);
    j["agrees"] = p.agrees;
    emit(j, out);
  });
}

shom_status shom_factorcheck(const char* a, const shom_module* m, const shom_multset* s, size_t bound, char** out) {
  SHOM_NEED(a);
  SHOM_NEED(m);
  SHOM_NEED(s);
  SHOM_NEED(out);
  return guarded([&] {
    BigInt av;
    try {
      av = BigInt(a);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidInput, std::string("a: not an integer: ") + a);
    }
    if (!std::holds_alternative<ZMod>(m->mod)) fail(ErrorCode::UnsupportedPair, "factorcheck needs a Z/a-module");
    const ZMod& mod = std::get<ZMod>(m->mod);
    FactorRingReport rep = factor_ring_check(av, mod, integer_set(s), bound);
    ojson j;
    j["a"] = big_str(rep.a);
    j["module"] = mod.str();
    j["over_z"] = dim_json(rep.over_z);
    j["over_quotient"] = dim_json(rep.over_quotient);
    j["verdict"] = verdict_name(rep.verdict);
    j["message"] = rep.message;
    emit(j, out);
  });
}

shom_status shom_resolve(const shom_module* m, size_t depth, shom_cover_style style, uint64_t seed, char** out) {
  SHOM_NEED(m);
  SHOM_NEED(out);
  return guarded([&] {
    if (std::holds_alternative<Mod>(m->mod)) {
      CoverStyle cs = style == SHOM_PLAIN           ? CoverStyle::Plain
                      : style == SHOM_SEEDED_RANDOM ? CoverStyle::SeededRandom
                                                    : CoverStyle::Minimal;
      emit(io::resolution_to_json(free_resolution(std::get<Mod>(m->mod), depth, cs, seed)), out);
    } else {
      const ZMod& mod = std::get<ZMod>(m->mod);
      emit(io::zresolution_to_json(mod, z_resolution(mod, depth)), out);
    }
  });
}

shom_status shom_ext_from_resolution(const char* resolution_json, const shom_ring* ring, const shom_module* n,
                                     size_t degree, char** out) {
  SHOM_NEED(resolution_json);
  SHOM_NEED(n);
  SHOM_NEED(out);
  return guarded([&] {
    json doc = parse_text(resolution_json);
    if (std::holds_alternative<Mod>(n->mod)) {
      if (!ring || !ring->ring.finite()) fail(ErrorCode::RingMismatch, "a finite resolution needs a finite ring");
      Resolution res = io::parse_resolution(doc, ring->ring.algebra());
      emit(ext_json(ext_from_resolution(res, std::get<Mod>(n->mod), degree)), out);
    } else {
      auto [m, ds] = io::parse_zresolution(doc);
      const ZMod& nn = std::get<ZMod>(n->mod);
      require(m.ring.m == nn.ring.m, ErrorCode::RingMismatch, "resolution and module over different rings");
      require(ds.size() > degree, ErrorCode::InvalidInput, "resolution too short for the requested degree");
      emit(zext_json(z_ext_from_resolution(m, ds, nn, degree), degree), out);
    }
  });
}

shom_status shom_verify(const char* id, uint64_t seed, size_t trials, size_t bound, char** out, size_t* failures) {
  SHOM_NEED(id);
  SHOM_NEED(out);
  return guarded([&] {
    veritas::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.bound = bound;
    std::size_t total = 0;
    if (std::strcmp(id, "all") == 0) {
      auto reports = veritas::full_suite(cfg);
      for (const auto& r : reports) total += r.failures;
      emit(veritas::suite_json(reports, cfg), out);
    } else {
      veritas::VerifyReport r = veritas::verify(id, cfg);
      total = r.failures;
      emit(r.to_json(), out);
    }
    if (failures) *failures = total;
  });
}

shom_status shom_registry(char** out) {
  SHOM_NEED(out);
  return guarded([&] {
    ojson arr = ojson::array();
    for (const auto& e : veritas::registry())
      arr.push_back(ojson{{"id", e.id}, {"statement", e.statement}, {"regime", e.regime}});
    emit(arr, out);
  });
}

void shom_set_connecting_sabotage(int on) { set_connecting_sabotage(on != 0); }

shom_status shom_replay(const char* dump_json, char** out) {
  SHOM_NEED(dump_json);
  SHOM_NEED(out);
  return guarded([&] {
    veritas::ReplayResult r = veritas::replay(parse_text(dump_json));
    ojson j;
    j["verdict"] = verdict_name(r.verdict);
    j["identical"] = r.identical;
    j["dump"] = r.dump;
    emit(j, out);
  });
}

}  // extern "C"
