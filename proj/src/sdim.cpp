#include "sdim.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "error.hpp"

namespace shom {

namespace {

// pi': P -> F with pi o pi' = s Id_P, where pi is the cover in a presentation
// F1 -rel-> F -pi-> P -> 0. Unknowns are the images Y in F^g of the generators;
// Y must kill the relations and map onto s times each generator.
SplitSearch split_projective(const Cover& cover, const ModMap& relations, const Mod& p, const MultSet& s) {
  const Mod& f = cover.free;
  const std::size_t g = cover.rank();
  const Fp q = p.prime();
  if (p.is_zero())
    return {SplitWitness{DimKind::Projective, p.ring()->unit(), zero_map(p, f), cover.map}, ""};
  Mat rel = pullback(relations, f);
  Mat onto = Mat::repeat_diag(cover.map.matrix, g);
  Mat sys = rel.rows() ? Mat::vcat(rel, onto) : onto;
  Solver solver(sys);
  Mat gens = generator_images(cover.map);
  for (const Vec& x : s.elements()) {
    Mat sg = p.act(x) * gens;
    Vec rhs(rel.rows(), 0);
    for (std::size_t b = 0; b < g; ++b) {
      Vec c = sg.col(b);
      rhs.insert(rhs.end(), c.begin(), c.end());
    }
    auto y = solver.solve(rhs);
    if (!y) continue;
    Mat images(q, f.dim(), g);
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t k = 0; k < f.dim(); ++k) images(k, b) = (*y)[b * f.dim() + k];
    Mat m = free_map(f, f, images).matrix * cover.section;
    return {SplitWitness{DimKind::Projective, x, ModMap{p, f, std::move(m)}, cover.map}, ""};
  }
  return {std::nullopt, "no s among " + std::to_string(s.size()) + " elements splits the rank " + std::to_string(g) +
                            " cover of a module of dimension " + std::to_string(p.dim())};
}

// q: I -> E with q o iota = s Id_E, through a presentation of I. Unknowns are
// the images Y in E^h of the generators of I.
SplitSearch split_injective(const ModMap& iota, const MultSet& s) {
  const Mod& e = iota.source;
  const Mod& inj = iota.target;
  const Fp q = e.prime();
  const std::size_t d = e.ring()->dim();
  if (e.is_zero())
    return {SplitWitness{DimKind::Injective, e.ring()->unit(), zero_map(inj, e), iota}, ""};
  Presentation pres = presentation(inj);
  const std::size_t h = pres.cover.rank();
  const std::size_t n = e.dim();
  Mat rel = pullback(pres.relations, e);
  Mat u = pres.cover.section * iota.matrix;  // column k: a preimage of iota(e_k)
  Mat comp(q, n * n, h * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < h; ++b) {
      Vec coef(d);
      for (std::size_t j = 0; j < d; ++j) coef[j] = u(b * d + j, k);
      comp.set_block(k * n, b * n, e.act(coef));
    }
  Mat sys = rel.rows() ? Mat::vcat(rel, comp) : comp;
  Solver solver(sys);
  for (const Vec& x : s.elements()) {
    Mat sx = e.act(x);
    Vec rhs(rel.rows(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      Vec c = sx.col(k);
      rhs.insert(rhs.end(), c.begin(), c.end());
    }
    auto y = solver.solve(rhs);
    if (!y) continue;
    Mat images(q, n, h);
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t k = 0; k < n; ++k) images(k, b) = (*y)[b * n + k];
    Mat m = free_map(pres.cover.free, e, images).matrix * pres.cover.section;
    return {SplitWitness{DimKind::Injective, x, ModMap{inj, e, std::move(m)}, iota}, ""};
  }
  return {std::nullopt, "no s among " + std::to_string(s.size()) + " elements retracts the cocover of a module of dimension " +
                            std::to_string(n)};
}

Dim value_of(const DimResult& r) { return r.value; }

void check_ring(const Mod& m, const MultSet& s) {
  require(m.ring() == s.ring() || m.ring()->same_as(*s.ring()), ErrorCode::RingMismatch,
          "module and multiplicative set over different rings");
}

}  // namespace

bool SplitWitness::verify() const {
  if (kind == DimKind::Projective) {
    const Mod& p = against.target;
    return is_r_linear(map.source, map.target, map.matrix) && against.matrix * map.matrix == p.act(s);
  }
  const Mod& e = against.source;
  return is_r_linear(map.source, map.target, map.matrix) && map.matrix * against.matrix == e.act(s);
}

SplitSearch is_s_projective(const Mod& p, const MultSet& s) {
  check_ring(p, s);
  Presentation pres = presentation(p);
  return split_projective(pres.cover, pres.relations, p, s);
}

SplitSearch is_s_injective(const Mod& e, const MultSet& s) {
  check_ring(e, s);
  return split_injective(injective_cocover(e).map, s);
}

std::string Dim::str() const { return value ? std::to_string(*value) : ">" + std::to_string(bound); }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

Interval Interval::of(const Dim& d) {
  if (d.value) return {*d.value, *d.value};
  return {d.bound + 1, std::nullopt};
}

Interval operator+(const Interval& a, std::size_t k) {
  return {a.lo + k, a.hi ? std::optional<std::size_t>(*a.hi + k) : std::nullopt};
}

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi && b.hi ? std::optional<std::size_t>(*a.hi + *b.hi) : std::nullopt};
}

Interval max_of(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), a.hi && b.hi ? std::optional<std::size_t>(std::max(*a.hi, *b.hi)) : std::nullopt};
}

Verdict leq(const Interval& a, const Interval& b) {
  if (a.hi && *a.hi <= b.lo) return Verdict::Pass;
  if (b.hi && a.lo > *b.hi) return Verdict::Fail;
  return Verdict::Vacuous;
}

Verdict less(const Interval& a, const Interval& b) {
  if (a.hi && *a.hi < b.lo) return Verdict::Pass;
  if (b.hi && a.lo >= *b.hi) return Verdict::Fail;
  return Verdict::Vacuous;
}

Verdict equal(const Interval& a, const Interval& b) {
  if ((a.hi && *a.hi < b.lo) || (b.hi && *b.hi < a.lo)) return Verdict::Fail;
  if (a.point() && b.point()) return Verdict::Pass;
  return Verdict::Vacuous;
}

Verdict implies(Verdict hypothesis, Verdict conclusion) {
  if (hypothesis == Verdict::Fail) return Verdict::Pass;
  if (hypothesis == Verdict::Vacuous) return Verdict::Vacuous;
  return conclusion;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Vacuous || b == Verdict::Vacuous) return Verdict::Vacuous;
  return Verdict::Pass;
}

Dim max_dim(const Dim& a, const Dim& b) {
  if (!a.value) return a;
  if (!b.value) return b;
  return Dim::exact(std::max(*a.value, *b.value), std::max(a.bound, b.bound));
}

DimResult s_pd(const Mod& m, const MultSet& s, std::size_t bound) {
  check_ring(m, s);
  DimResult out;
  out.kind = DimKind::Projective;
  Mod k = m;
  Cover c = free_cover(k, CoverStyle::Minimal);
  for (std::size_t i = 0; i <= bound; ++i) {
    SubResult ker = subquotient(c.map, Part::Kernel);
    Cover kc = free_cover(ker.module, CoverStyle::Minimal);
    SplitSearch r = split_projective(c, compose(ker.map, kc.map), k, s);
    if (r.found()) {
      out.value = Dim::exact(i, bound);
      out.witness = std::move(r.witness);
      return out;
    }
    out.failures.push_back("K_" + std::to_string(i) + ": " + r.failure);
    k = ker.module;
    c = std::move(kc);
  }
  out.value = Dim::beyond(bound);
  return out;
}

DimResult s_id_direct(const Mod& m, const MultSet& s, std::size_t bound) {
  check_ring(m, s);
  DimResult out;
  out.kind = DimKind::Injective;
  Mod e = m;
  for (std::size_t i = 0; i <= bound; ++i) {
    Cocover cc = injective_cocover(e);
    SplitSearch r = split_injective(cc.map, s);
    if (r.found()) {
      out.value = Dim::exact(i, bound);
      out.witness = std::move(r.witness);
      return out;
    }
    out.failures.push_back("E_" + std::to_string(i) + ": " + r.failure);
    e = subquotient(cc.map, Part::Cokernel).module;
  }
  out.value = Dim::beyond(bound);
  return out;
}

DimResult s_id(const Mod& m, const MultSet& s, std::size_t bound) {
  DimResult out = s_id_direct(m, s, bound);
  Dim dual = value_of(s_pd(character_dual(m), s, bound));
  if (!(dual == out.value))
    fail(ErrorCode::InternalInvariantViolation,
         "S-id by cosyzygies is " + out.value.str() + " but S-pd of the dual is " + dual.str());
  out.dual_route = dual;
  return out;
}

GlobalDimReport s_gldim(const Ring& ring, const MultSet& s, std::size_t bound, std::size_t trials,
                        std::uint64_t seed) {
  GlobalDimReport rep;
  rep.seed = seed;
  rep.trials = trials;
  IdealList ideals = enumerate_ideals(ring);
  rep.ideals.resize(ideals.size());
  parallel_for(ideals.size(), [&](std::size_t i) {
    Mod cyc = cyclic_module(ring, ideals[i].basis);
    rep.ideals[i] = {ideals[i], s_pd(cyc, s, bound).value, s_id(cyc, s, bound).value};
  });
  Dim sweep = Dim::exact(0, bound);
  for (const auto& e : rep.ideals) sweep = max_dim(sweep, max_dim(e.pd, e.id));
  rep.sweep = sweep;

  std::vector<Dim> found(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    Mod m = random_module(ring, rng);
    found[t] = max_dim(s_pd(m, s, bound).value, s_id(m, s, bound).value);
  });
  Dim cand = sweep;
  for (const Dim& d : found) {
    if (less(Interval::of(cand), Interval::of(d)) == Verdict::Pass) ++rep.exceedances;
    cand = max_dim(cand, d);
  }
  rep.candidate = cand;
  return rep;
}

SemisimpleReport is_s_semisimple(const Ring& ring, const MultSet& s) {
  SemisimpleReport rep;
  rep.ideals = enumerate_ideals(ring);
  const Fp p = ring->prime();
  const std::size_t d = ring->dim();
  // f_I(r) = r y with y in I; f_I(i_k) = s i_k on a basis of I.
  std::vector<std::optional<Solver>> solvers;
  for (const Ideal& ideal : rep.ideals) {
    const std::size_t k = ideal.dim();
    if (k == 0) {
      solvers.emplace_back();
      continue;
    }
    Mat sys(p, k * d, k);
    for (std::size_t j = 0; j < k; ++j) sys.set_block(j * d, 0, ring->regular_matrix(ideal.basis.col(j)) * ideal.basis);
    solvers.emplace_back(Solver(sys));
  }
  for (const Vec& x : s.elements()) {
    std::vector<Vec> images;
    std::optional<std::size_t> failed;
    for (std::size_t i = 0; i < rep.ideals.size() && !failed; ++i) {
      const Ideal& ideal = rep.ideals[i];
      if (ideal.dim() == 0) {
        images.push_back(ring->zero());
        continue;
      }
      Vec rhs;
      for (std::size_t j = 0; j < ideal.dim(); ++j) {
        Vec v = ring->mul(x, ideal.basis.col(j));
        rhs.insert(rhs.end(), v.begin(), v.end());
      }
      auto c = solvers[i]->solve(rhs);
      if (!c) {
        failed = i;
        break;
      }
      images.push_back(ideal.basis.apply(*c));
    }
    if (!failed) {
      rep.verdict = true;
      rep.s = x;
      rep.images = std::move(images);
      return rep;
    }
    rep.failures.emplace_back(x, *failed);
  }
  return rep;
}

LocalProfile local_profile(const Mod& m, DimKind kind, std::size_t bound) {
  const Ring& ring = m.ring();
  LocalProfile out;
  out.kind = kind;
  auto run = [&](const MultSet& s) {
    return kind == DimKind::Projective ? s_pd(m, s, bound).value : s_id(m, s, bound).value;
  };
  out.classical = run(MultSet::closure(ring, {}));
  Dim sup_p = Dim::exact(0, bound), sup_m = Dim::exact(0, bound);
  for (const Ideal& ideal : enumerate_ideals(ring)) {
    if (!ideal.prime) continue;
    Dim v = run(complement_multset(ring, ideal));
    sup_p = max_dim(sup_p, v);
    if (ideal.maximal) sup_m = max_dim(sup_m, v);
    out.entries.push_back({ideal, v});
  }
  out.sup_primes = sup_p;
  out.sup_maximal = sup_m;
  out.agrees = sup_p == out.classical && sup_m == out.classical;
  return out;
}

bool InequalityReport::passed() const {
  return std::none_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.verdict == Verdict::Fail; });
}

InequalityReport check_inequalities(const ModMap& f, const ModMap& g, const MultSet& s, std::size_t bound,
                                    const std::optional<ModMap>& retraction) {
  SExactReport ex = s_exactness_check(short_chain(f, g), s);
  require(ex.passed(), ErrorCode::NotSExact, "sequence is not S-exact " + ex.summary(*s.ring()));
  const Mod& a = f.source;
  const Mod& b = f.target;
  const Mod& c = g.target;
  InequalityReport rep;
  rep.pd_a = s_pd(a, s, bound).value;
  rep.pd_b = s_pd(b, s, bound).value;
  rep.pd_c = s_pd(c, s, bound).value;
  rep.id_a = s_id(a, s, bound).value;
  rep.id_b = s_id(b, s, bound).value;
  rep.id_c = s_id(c, s, bound).value;
  const Interval pa = Interval::of(rep.pd_a), pb = Interval::of(rep.pd_b), pc = Interval::of(rep.pd_c);
  const Interval ia = Interval::of(rep.id_a), ib = Interval::of(rep.id_b), ic = Interval::of(rep.id_c);
  auto add = [&](std::string name, Verdict v, std::string detail) {
    rep.assertions.push_back({std::move(name), v, std::move(detail)});
  };
  add("pd(C) <= 1 + max(pd(A), pd(B))", leq(pc, max_of(pa, pb) + 1),
      rep.pd_c.str() + " vs 1 + max(" + rep.pd_a.str() + ", " + rep.pd_b.str() + ")");
  add("pd(B) < pd(C) implies pd(A) = pd(C) - 1 > pd(B)", implies(less(pb, pc), both(equal(pa + 1, pc), less(pb, pa))),
      "pd A, B, C = " + rep.pd_a.str() + ", " + rep.pd_b.str() + ", " + rep.pd_c.str());
  add("id(A) <= 1 + max(id(B), id(C))", leq(ia, max_of(ib, ic) + 1),
      rep.id_a.str() + " vs 1 + max(" + rep.id_b.str() + ", " + rep.id_c.str() + ")");
  add("id(B) < id(A) implies id(C) = id(A) - 1 > id(B)", implies(less(ib, ia), both(equal(ic + 1, ia), less(ib, ic))),
      "id A, B, C = " + rep.id_a.str() + ", " + rep.id_b.str() + ", " + rep.id_c.str());
  if (retraction) {
    const ModMap& r = *retraction;
    require(r.source.dim() == b.dim() && r.target.dim() == a.dim() && is_r_linear(b, a, r.matrix),
            ErrorCode::InvalidInput, "retraction must be an R-linear map B -> A");
    Mat rf = r.matrix * f.matrix;
    bool split = false;
    for (const Vec& x : s.elements())
      if (rf == a.act(x)) {
        split = true;
        break;
      }
    require(split, ErrorCode::InvalidInput, "retraction composed with f is not s Id_A for any s in S");
    add("pd(B) = max(pd(A), pd(C))", equal(pb, max_of(pa, pc)),
        rep.pd_b.str() + " vs max(" + rep.pd_a.str() + ", " + rep.pd_c.str() + ")");
    add("id(B) = max(id(A), id(C))", equal(ib, max_of(ia, ic)),
        rep.id_b.str() + " vs max(" + rep.id_a.str() + ", " + rep.id_c.str() + ")");
  }
  return rep;
}

ShiftReport dimension_shift_check(const ModMap& f, const ModMap& g, const Mod& n, std::size_t degree, DimKind kind,
                                  const MultSet& s) {
  const Mod& b = f.target;
  SplitSearch cert = kind == DimKind::Projective ? is_s_projective(b, s) : is_s_injective(b, s);
  require(cert.found(), ErrorCode::MiddleNotCertified,
          std::string("middle term is not S-") + (kind == DimKind::Projective ? "projective" : "injective"));
  Variance v = kind == DimKind::Projective ? Variance::Contravariant : Variance::Covariant;
  ConnectingData cd = long_ext_sequence(f, g, n, degree + 1, v, s);
  const ModMap& delta = cd.deltas[degree + 1];
  ShiftReport rep;
  rep.lower = degree + 1;
  rep.upper = degree + 2;
  rep.lower_dim = delta.source.dim();
  rep.upper_dim = delta.target.dim();
  if (is_s_isomorphism(delta, s).verdict()) {
    rep.verdict = true;
    rep.via_connecting = true;
    return rep;
  }
  std::vector<ModMap> hs = hom_space(delta.source, delta.target);
  for (const ModMap& h : hs)
    if (is_s_isomorphism(h, s).verdict()) {
      rep.verdict = true;
      rep.detail = "S-isomorphism found among basis maps";
      return rep;
    }
  Rng rng(derive_seed(degree, hs.size()));
  const Fp p = delta.source.prime();
  for (int t = 0; t < 64 && !hs.empty(); ++t) {
    Mat m(p, delta.target.dim(), delta.source.dim());
    for (const ModMap& h : hs) m.add_scaled(h.matrix, rng.field(p));
    if (is_s_isomorphism(ModMap{delta.source, delta.target, m}, s).verdict()) {
      rep.verdict = true;
      rep.detail = "S-isomorphism found by random search";
      return rep;
    }
  }
  rep.detail = "connecting map is not an S-isomorphism and no S-isomorphism was found in Hom (dims " +
               std::to_string(rep.lower_dim) + ", " + std::to_string(rep.upper_dim) + ")";
  return rep;
}

Mod restrict_scalars(const Mod& m, const Ring& ring, const Quotient& q) {
  require(m.ring()->same_as(*q.ring), ErrorCode::RingMismatch, "module is not over the quotient ring");
  std::vector<Mat> action;
  for (std::size_t i = 0; i < ring->dim(); ++i) action.push_back(m.act(q.projection.col(i)));
  return Mod::from_action(ring, m.dim(), std::move(action));
}

MultSet image_multset(const MultSet& s, const Quotient& q) {
  std::vector<Vec> seeds;
  for (const Vec& x : s.elements()) seeds.push_back(q.projection.apply(x));
  return MultSet::closure(q.ring, seeds);
}

ChangeOfRingsReport change_of_rings_check(const Ring& ring, const Quotient& q, const Mod& m_over_t,
                                          const MultSet& s, std::size_t bound) {
  require(q.projection.cols() == ring->dim() && q.projection.rows() == q.ring->dim(), ErrorCode::UnsupportedPair,
          "quotient does not belong to the ring");
  ChangeOfRingsReport rep;
  rep.over_r = s_pd(restrict_scalars(m_over_t, ring, q), s, bound).value;
  rep.over_t = s_pd(m_over_t, image_multset(s, q), bound).value;
  rep.t_over_r = s_pd(restrict_scalars(free_module(q.ring, 1), ring, q), s, bound).value;
  rep.verdict = leq(Interval::of(rep.over_r), Interval::of(rep.over_t) + Interval::of(rep.t_over_r));
  return rep;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(n, std::min<std::size_t>(hw, 8));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_at = n;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          // Keep the lowest failing index so the reported error is stable.
          std::lock_guard<std::mutex> lock(mu);
          if (i < error_at) {
            error = std::current_exception();
            error_at = i;
          }
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace shom
