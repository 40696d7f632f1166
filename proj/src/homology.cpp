#include "homology.hpp"

#include <atomic>

#include "error.hpp"

namespace shom {

namespace {

std::atomic<bool> g_sabotage{false};

Mat section_of(const ModMap& surjection) {
  auto s = Solver(surjection.matrix).solve(Mat::identity(surjection.target.prime(), surjection.target.dim()));
  require(s.has_value(), ErrorCode::InternalInvariantViolation, "expected a surjection");
  return *s;
}

}  // namespace

void set_connecting_sabotage(bool on) { g_sabotage = on; }
bool connecting_sabotage() { return g_sabotage; }

Mod power_module(const Mod& n, std::size_t r) {
  std::vector<Mat> action;
  for (const Mat& a : n.actions()) action.push_back(Mat::repeat_diag(a, r));
  return Mod::unchecked(n.ring(), n.dim() * r, std::move(action));
}

std::vector<std::size_t> Resolution::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& c : covers) out.push_back(c.rank());
  return out;
}

std::optional<std::size_t> Resolution::length() const {
  for (std::size_t k = 0; k < syzygies.size(); ++k)
    if (syzygies[k].module.is_zero()) return k;
  return std::nullopt;
}

Resolution free_resolution(const Mod& m, std::size_t depth, CoverStyle style, std::uint64_t seed) {
  Resolution res;
  res.target = m;
  res.style = style;
  res.syzygies.push_back({m, identity_map(m), Mat::identity(m.prime(), m.dim())});
  for (std::size_t k = 0; k <= depth; ++k) {
    const SubResult& kk = res.syzygies[k];
    Cover c = free_cover(kk.module, style, derive_seed(seed, k));
    res.d.push_back(compose(kk.map, c.map));
    res.syzygies.push_back(subquotient(c.map, Part::Kernel));
    res.covers.push_back(std::move(c));
  }
  return res;
}

Resolution resolution_from_images(const Mod& m, const std::vector<Mat>& images) {
  require(!images.empty(), ErrorCode::InvalidInput, "resolution needs at least the augmentation");
  const Ring& r = m.ring();
  Resolution res;
  res.target = m;
  res.style = CoverStyle::Plain;
  res.syzygies.push_back({m, identity_map(m), Mat::identity(m.prime(), m.dim())});
  for (std::size_t k = 0; k < images.size(); ++k) {
    const Mod& below = k == 0 ? m : res.covers[k - 1].free;
    require(images[k].rows() == below.dim(), ErrorCode::InvalidInput,
            "differential " + std::to_string(k) + " has " + std::to_string(images[k].rows()) + " rows, expected " +
                std::to_string(below.dim()));
    Mod f = free_module(r, images[k].cols());
    ModMap d = free_map(f, below, images[k]);
    const SubResult& kk = res.syzygies[k];
    require(column_space_contains(kk.map.matrix, d.matrix) && rank(d.matrix) == kk.module.dim(),
            ErrorCode::InvalidInput, "not exact at degree " + std::to_string(k));
    ModMap onto = corestrict(d, kk);
    auto section = Solver(onto.matrix).solve(Mat::identity(m.prime(), kk.module.dim()));
    require(section.has_value(), ErrorCode::InvalidInput, "differential " + std::to_string(k) + " is not onto its syzygy");
    res.d.push_back(d);
    res.syzygies.push_back(subquotient(onto, Part::Kernel));
    res.covers.push_back({f, onto, *section});
  }
  return res;
}

void check_resolution(const Resolution& res) {
  require(rank(res.d[0].matrix) == res.target.dim(), ErrorCode::InternalInvariantViolation,
          "augmentation is not surjective");
  for (std::size_t k = 1; k < res.d.size(); ++k) {
    require((res.d[k - 1].matrix * res.d[k].matrix).is_zero(), ErrorCode::InternalInvariantViolation,
            "d^2 != 0 at degree " + std::to_string(k));
    const std::size_t ker = res.d[k - 1].source.dim() - rank(res.d[k - 1].matrix);
    require(ker == rank(res.d[k].matrix), ErrorCode::InternalInvariantViolation,
            "resolution not exact at degree " + std::to_string(k - 1));
    require(res.syzygies[k].module.dim() == ker, ErrorCode::InternalInvariantViolation,
            "cached syzygy has the wrong dimension at degree " + std::to_string(k));
  }
}

ExtResult ext_from_resolution(const Resolution& res, const Mod& n, std::size_t degree) {
  require_same_ring(res.target, n);
  require(res.depth() >= degree + 1, ErrorCode::InvalidInput, "resolution too short for the requested degree");
  Mod cn = power_module(n, res.covers[degree].rank());
  Mat delta = pullback(res.d[degree + 1], n);
  SubResult z = submodule(cn, kernel(delta));
  Mat boundaries = degree ? pullback(res.d[degree], n) : Mat(n.prime(), cn.dim(), 0);
  SubResult h = quotient(z.module, z.aux * boundaries);
  ExtResult out;
  out.n = degree;
  out.module = h.module;
  out.cochains = cn;
  out.representatives = z.map.matrix * h.aux;
  out.projection = h.map.matrix * z.aux;
  return out;
}

ExtResult ext(const Mod& m, const Mod& n, std::size_t degree, CoverStyle style, std::uint64_t seed) {
  return ext_from_resolution(free_resolution(m, degree + 1, style, seed), n, degree);
}

std::vector<ModMap> lift_chain_map(const ModMap& alpha, const Resolution& p, const Resolution& q, std::size_t upto) {
  require(upto <= p.depth() && upto <= q.depth(), ErrorCode::InvalidInput, "resolutions too short to lift");
  std::vector<ModMap> out;
  for (std::size_t k = 0; k <= upto; ++k) {
    const Mat prev = k == 0 ? alpha.matrix : out.back().matrix;
    Mat targets = prev * generator_images(p.d[k]);  // in M' or Q_{k-1}
    Mat coords = q.syzygies[k].aux * targets;
    Mat images = q.covers[k].section * coords;
    ModMap ak = free_map(p.free(k), q.free(k), images);
    require(q.d[k].matrix * ak.matrix == prev * p.d[k].matrix, ErrorCode::InternalInvariantViolation,
            "chain map lift failed at degree " + std::to_string(k));
    out.push_back(std::move(ak));
  }
  return out;
}

ModMap ext_covariant_map(const ExtResult& from, const ExtResult& to, const ModMap& f) {
  std::size_t r = 0;
  if (f.source.dim()) r = from.cochains.dim() / f.source.dim();
  else if (f.target.dim()) r = to.cochains.dim() / f.target.dim();
  Mat m = (to.projection * Mat::repeat_diag(f.matrix, r)) * from.representatives;
  if (r == 0) m = Mat(f.source.prime(), to.module.dim(), from.module.dim());
  return {from.module, to.module, std::move(m)};
}

ModMap ext_contravariant_map(const ModMap& alpha, const Resolution& p, const Resolution& q, const ExtResult& over_q,
                             const ExtResult& over_p, const Mod& n) {
  const std::size_t deg = over_p.n;
  auto lifts = lift_chain_map(alpha, p, q, deg);
  Mat m = over_p.projection * pullback(lifts[deg], n) * over_q.representatives;
  return {over_q.module, over_p.module, std::move(m)};
}

namespace {

/// Horseshoe resolution of B from 0 -> K -i-> B -pi-> I -> 0 and fixed
/// resolutions of K and I; returns d^B_0 .. d^B_upto with F^B_k = F^K_k + F^I_k.
std::vector<ModMap> horseshoe(const Resolution& rk, const Resolution& ri, const ModMap& i, const ModMap& pi,
                              std::size_t upto) {
  const Ring& ring = i.source.ring();
  const std::size_t d = ring->dim();
  std::vector<ModMap> out;
  ModMap incl = identity_map(i.target);
  ModMap ik = i, pk = pi;
  for (std::size_t k = 0; k <= upto; ++k) {
    const Cover& ck = rk.covers[k];
    const Cover& ci = ri.covers[k];
    Mod pb = free_module(ring, ck.rank() + ci.rank());
    Mat gens = Mat::hcat(ik.matrix * generator_images(ck.map), section_of(pk) * generator_images(ci.map));
    ModMap eps = free_map(pb, ik.target, gens);
    out.push_back({pb, incl.target, incl.matrix * eps.matrix});

    SubResult kb = subquotient(eps, Part::Kernel);
    const SubResult& kk = rk.syzygies[k + 1];
    const SubResult& ki = ri.syzygies[k + 1];
    Mat top(pb.prime(), pb.dim(), kk.module.dim());
    top.set_block(0, 0, kk.map.matrix);
    Mat bottom = kb.map.matrix.block(ck.rank() * d, 0, ci.rank() * d, kb.module.dim());
    ik = ModMap{kk.module, kb.module, kb.aux * top};
    pk = ModMap{kb.module, ki.module, ki.aux * bottom};
    incl = kb.map;
  }
  return out;
}

ModMap maybe_sabotaged(ModMap m) {
  if (g_sabotage) m.matrix = Mat(m.matrix.prime(), m.matrix.rows(), m.matrix.cols());
  return m;
}

}  // namespace

ConnectingData long_ext_sequence(const ModMap& f, const ModMap& g, const Mod& l, std::size_t n, Variance variance,
                                 const MultSet& s) {
  require_same_ring(f.source, l);
  SExactReport input = s_exactness_check(short_chain(f, g), s);
  if (!input.passed()) fail(ErrorCode::NotSExact, "input sequence is not S-exact: " + input.summary(*s.ring()));
  const Mod& a = f.source;
  const Mod& b = f.target;
  const Mod& c = g.target;
  const Vec s1 = *input.positions[1].s;

  // Exact core 0 -> K -> B -> I -> 0 and the S-isomorphisms t1: A -> K, t2: I -> C.
  SubResult kr = subquotient(g, Part::Kernel);
  SubResult ir = subquotient(g, Part::Image);
  ModMap pi = corestrict(g, ir);
  Mat sf = b.act(s1) * f.matrix;
  require(column_space_contains(kr.map.matrix, sf), ErrorCode::InternalInvariantViolation, "s Im f not inside Ker g");
  ModMap t1{a, kr.module, kr.aux * sf};
  const ModMap& t2 = ir.map;
  ModMap t1inv = s_iso_inverse(t1, s).g;
  ModMap t2inv = s_iso_inverse(t2, s).g;
  const Mod& km = kr.module;
  const Mod& im = ir.module;

  ConnectingData out;
  out.variance = variance;
  out.n = n;
  Mod zero = zero_module(a.ring());

  if (variance == Variance::Covariant) {
    Resolution res = free_resolution(l, n + 2);
    auto ext_of = [&](const Mod& x) {
      std::vector<ExtResult> e;
      for (std::size_t k = 0; k <= n + 1; ++k) e.push_back(ext_from_resolution(res, x, k));
      return e;
    };
    auto ea = ext_of(a), eb = ext_of(b), ec = ext_of(c), ek = ext_of(km), ei = ext_of(im);
    Mat sigma = section_of(pi);
    out.chain.push_back(zero_map(zero, ea[0].module));
    for (std::size_t k = 0; k <= n; ++k) {
      out.chain.push_back(ext_covariant_map(ea[k], eb[k], f));
      out.chain.push_back(ext_covariant_map(eb[k], ec[k], g));
      const std::size_t rk = res.covers[k].rank(), rk1 = res.covers[k + 1].rank();
      Mat core = ek[k + 1].projection * Mat::repeat_diag(kr.aux, rk1) * pullback(res.d[k + 1], b) *
                 Mat::repeat_diag(sigma, rk) * ei[k].representatives;
      ModMap dprime{ei[k].module, ek[k + 1].module, core};
      ModMap delta = compose(ext_covariant_map(ek[k + 1], ea[k + 1], t1inv),
                             compose(dprime, ext_covariant_map(ec[k], ei[k], t2inv)));
      delta = maybe_sabotaged(delta);
      out.deltas.push_back(delta);
      out.chain.push_back(delta);
    }
  } else {
    const Mod& nmod = l;
    auto res_of = [&](const Mod& x) { return free_resolution(x, n + 2); };
    Resolution ra = res_of(a), rb = res_of(b), rc = res_of(c), rkr = res_of(km), rir = res_of(im);
    auto ext_of = [&](const Resolution& r) {
      std::vector<ExtResult> e;
      for (std::size_t k = 0; k <= n + 1; ++k) e.push_back(ext_from_resolution(r, nmod, k));
      return e;
    };
    auto ea = ext_of(ra), eb = ext_of(rb), ec = ext_of(rc), ek = ext_of(rkr), ei = ext_of(rir);
    std::vector<ModMap> db = horseshoe(rkr, rir, kr.map, pi, n + 1);
    const std::size_t nd = nmod.dim();
    out.chain.push_back(zero_map(zero, ec[0].module));
    for (std::size_t k = 0; k <= n; ++k) {
      out.chain.push_back(ext_contravariant_map(g, rb, rc, ec[k], eb[k], nmod));
      out.chain.push_back(ext_contravariant_map(f, ra, rb, eb[k], ea[k], nmod));
      // delta': lift a K-cocycle by zero on the I-generators, apply the
      // coboundary of the horseshoe, keep the I-part.
      const std::size_t rk_k = rkr.covers[k].rank(), rb_k = rk_k + rir.covers[k].rank();
      const std::size_t rk_k1 = rkr.covers[k + 1].rank(), ri_k1 = rir.covers[k + 1].rank();
      Mat embed(nmod.prime(), rb_k * nd, rk_k * nd);
      embed.set_block(0, 0, Mat::identity(nmod.prime(), rk_k * nd));
      Mat extract(nmod.prime(), ri_k1 * nd, (rk_k1 + ri_k1) * nd);
      extract.set_block(0, rk_k1 * nd, Mat::identity(nmod.prime(), ri_k1 * nd));
      Mat core = ei[k + 1].projection * extract * pullback(db[k + 1], nmod) * embed * ek[k].representatives;
      ModMap dprime{ek[k].module, ei[k + 1].module, core};
      ModMap delta = compose(ext_contravariant_map(t2inv, rc, rir, ei[k + 1], ec[k + 1], nmod),
                             compose(dprime, ext_contravariant_map(t1inv, rkr, ra, ea[k], ek[k], nmod)));
      delta = maybe_sabotaged(delta);
      out.deltas.push_back(delta);
      out.chain.push_back(delta);
    }
  }
  out.report = s_exactness_check(out.chain, s);
  return out;
}

Cocover injective_cocover(const Mod& e) {
  Cover c = free_cover(character_dual(e), CoverStyle::Minimal);
  Mod inj = character_dual(c.free);
  ModMap map{e, inj, c.map.matrix.transpose()};
  require(rank(map.matrix) == e.dim(), ErrorCode::InternalInvariantViolation, "cocover is not injective");
  return {inj, map};
}

}  // namespace shom
