#include "module.hpp"

#include <algorithm>

#include "error.hpp"

namespace shom {

namespace {

bool same_ring(const Ring& a, const Ring& b) { return a == b || a->same_as(*b); }

Mat span_of(const Mod& m, const Mat& gens) {
  Mat all(m.prime(), m.dim(), 0);
  for (const Mat& a : m.actions()) all = Mat::hcat(all, a * gens);
  return all;
}

}  // namespace

Mod Mod::unchecked(Ring ring, std::size_t dim, std::vector<Mat> action) {
  Mod m;
  m.ring_ = std::move(ring);
  m.dim_ = dim;
  m.action_ = std::move(action);
  return m;
}

Mod Mod::from_action(Ring ring, std::size_t dim, std::vector<Mat> action) {
  Mod m = unchecked(std::move(ring), dim, std::move(action));
  m.validate();
  return m;
}

void Mod::validate() const {
  const auto& r = *ring_;
  require(action_.size() == r.dim(), ErrorCode::InvalidModule, "module needs one action matrix per basis element");
  for (std::size_t i = 0; i < r.dim(); ++i)
    require(action_[i].rows() == dim_ && action_[i].cols() == dim_ && action_[i].prime() == r.prime(),
            ErrorCode::InvalidModule, "action of " + r.label(i) + " has the wrong shape");
  require(act(r.unit()) == Mat::identity(r.prime(), dim_), ErrorCode::InvalidModule,
          "the unit does not act as the identity");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i; j < r.dim(); ++j) {
      Mat lhs = action_[i] * action_[j];
      if (lhs != act(r.product(i, j)))
        fail(ErrorCode::InvalidModule,
             "action of " + r.label(i) + "*" + r.label(j) + " does not match the product table");
      if (lhs != action_[j] * action_[i])
        fail(ErrorCode::InvalidModule, "actions of " + r.label(i) + " and " + r.label(j) + " do not commute");
    }
}

Mat Mod::act(const Vec& r) const {
  Mat m(prime(), dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) m.add_scaled(action_[i], r[i]);
  return m;
}

void require_same_ring(const Mod& a, const Mod& b) {
  require(same_ring(a.ring(), b.ring()), ErrorCode::RingMismatch, "modules live over different rings");
}

bool is_r_linear(const Mod& source, const Mod& target, const Mat& matrix) {
  for (std::size_t i = 0; i < source.actions().size(); ++i)
    if (matrix * source.action(i) != target.action(i) * matrix) return false;
  return true;
}

ModMap make_map(const Mod& source, const Mod& target, Mat matrix) {
  require_same_ring(source, target);
  require(matrix.rows() == target.dim() && matrix.cols() == source.dim(), ErrorCode::InvalidInput,
          "map matrix must be target.dim x source.dim");
  for (std::size_t i = 0; i < source.actions().size(); ++i)
    if (matrix * source.action(i) != target.action(i) * matrix)
      fail(ErrorCode::NotRLinear, "map does not commute with the action of " + source.ring()->label(i));
  return {source, target, std::move(matrix)};
}

ModMap identity_map(const Mod& m) { return {m, m, Mat::identity(m.prime(), m.dim())}; }

ModMap zero_map(const Mod& source, const Mod& target) {
  return {source, target, Mat(source.prime(), target.dim(), source.dim())};
}

ModMap scalar_map(const Mod& m, const Vec& r) { return {m, m, m.act(r)}; }

ModMap compose(const ModMap& g, const ModMap& f) {
  require(f.target.dim() == g.source.dim() && same_ring(f.target.ring(), g.source.ring()),
          ErrorCode::NotComposable, "maps are not composable");
  return {f.source, g.target, g.matrix * f.matrix};
}

ModMap add_maps(const ModMap& a, const ModMap& b) { return {a.source, a.target, a.matrix + b.matrix}; }

ModMap scale_map(const ModMap& f, const Vec& r) { return {f.source, f.target, f.target.act(r) * f.matrix}; }

Mod zero_module(const Ring& ring) {
  return Mod::unchecked(ring, 0, std::vector<Mat>(ring->dim(), Mat(ring->prime(), 0, 0)));
}

Mod free_module(const Ring& ring, std::size_t rank) {
  std::vector<Mat> action;
  for (std::size_t i = 0; i < ring->dim(); ++i) action.push_back(Mat::repeat_diag(ring->regular(i), rank));
  return Mod::unchecked(ring, rank * ring->dim(), std::move(action));
}

std::size_t free_rank(const Mod& f) { return f.dim() / f.ring()->dim(); }

Mod direct_sum(const Mod& a, const Mod& b) {
  require_same_ring(a, b);
  std::vector<Mat> action;
  for (std::size_t i = 0; i < a.actions().size(); ++i) action.push_back(Mat::block_diag({a.action(i), b.action(i)}));
  return Mod::unchecked(a.ring(), a.dim() + b.dim(), std::move(action));
}

Mod direct_sum(const std::vector<Mod>& parts) {
  Mod out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

ModMap direct_sum_map(const ModMap& f, const ModMap& g) {
  return {direct_sum(f.source, g.source), direct_sum(f.target, g.target), Mat::block_diag({f.matrix, g.matrix})};
}

ModMap sum_inclusion(const Mod& a, const Mod& b, int which) {
  Mod s = direct_sum(a, b);
  const Mod& part = which == 0 ? a : b;
  Mat m(s.prime(), s.dim(), part.dim());
  m.set_block(which == 0 ? 0 : a.dim(), 0, Mat::identity(s.prime(), part.dim()));
  return {part, s, m};
}

ModMap sum_projection(const Mod& a, const Mod& b, int which) {
  ModMap inc = sum_inclusion(a, b, which);
  return {inc.target, inc.source, inc.matrix.transpose()};
}

Mod cyclic_module(const Ring& ring, const Mat& ideal_basis) {
  return quotient(free_module(ring, 1), ideal_basis).module;
}

ModMap free_map(const Mod& free, const Mod& target, const Mat& images) {
  const std::size_t d = free.ring()->dim();
  const std::size_t r = images.cols();
  Mat m(free.prime(), target.dim(), r * d);
  for (std::size_t b = 0; b < r; ++b) {
    Vec x = images.col(b);
    for (std::size_t j = 0; j < d; ++j) m.set_col(b * d + j, target.action(j).apply(x));
  }
  return {free, target, std::move(m)};
}

Mod presented_module(const Ring& ring, std::size_t rank, const std::vector<Vec>& relations) {
  Mod f = free_module(ring, rank);
  Mat rel = Mat::from_columns(ring->prime(), f.dim(), relations);
  return quotient(f, generated_submodule(f, rel)).module;
}

Mat generator_images(const ModMap& f) {
  const auto& ring = *f.source.ring();
  const std::size_t r = free_rank(f.source);
  Mat out(f.source.prime(), f.target.dim(), r);
  Vec g(f.source.dim(), 0);
  for (std::size_t b = 0; b < r; ++b) {
    std::fill(g.begin(), g.end(), 0);
    for (std::size_t k = 0; k < ring.dim(); ++k) g[b * ring.dim() + k] = ring.unit()[k];
    out.set_col(b, f.apply(g));
  }
  return out;
}

Mat pullback(const ModMap& a, const Mod& l) {
  const std::size_t d = a.source.ring()->dim();
  const std::size_t r1 = free_rank(a.source), r2 = free_rank(a.target);
  const std::size_t n = l.dim();
  Mat gens = generator_images(a);
  Mat out(l.prime(), r1 * n, r2 * n);
  for (std::size_t b = 0; b < r1; ++b)
    for (std::size_t c = 0; c < r2; ++c) {
      Vec coef(d);
      bool nonzero = false;
      for (std::size_t k = 0; k < d; ++k) {
        coef[k] = gens(c * d + k, b);
        nonzero |= coef[k] != 0;
      }
      if (nonzero) out.set_block(b * n, c * n, l.act(coef));
    }
  return out;
}

SubResult submodule(const Mod& m, const Mat& span) {
  const Fp p = m.prime();
  Mat basis = span.cols() ? column_basis(span) : Mat(p, m.dim(), 0);
  const std::size_t k = basis.cols();
  Mat inv = k ? left_inverse(basis) : Mat(p, 0, m.dim());
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(k ? inv * a * basis : Mat(p, 0, 0));
  Mod sub = Mod::unchecked(m.ring(), k, std::move(action));
  return {sub, ModMap{sub, m, basis}, inv};
}

SubResult quotient(const Mod& m, const Mat& span) {
  const Fp p = m.prime();
  Mat basis = span.cols() ? column_basis(span) : Mat(p, m.dim(), 0);
  Mat comp = complement_basis(basis);
  const std::size_t q = comp.cols();
  Mat proj(p, q, m.dim());
  if (q) {
    Mat inv = left_inverse(Mat::hcat(basis, comp));
    proj = inv.block(basis.cols(), 0, q, m.dim());
  }
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(proj * a * comp);
  Mod quot = Mod::unchecked(m.ring(), q, std::move(action));
  return {quot, ModMap{m, quot, proj}, comp};
}

Mat generated_submodule(const Mod& m, const Mat& gens) {
  if (gens.cols() == 0) return Mat(m.prime(), m.dim(), 0);
  return column_basis(span_of(m, gens));
}

Mat image_under(const Mod& m, const std::vector<Vec>& elements) {
  Mat all(m.prime(), m.dim(), 0);
  for (const Vec& r : elements) all = Mat::hcat(all, m.act(r));
  return all.cols() ? column_basis(all) : all;
}

SubResult subquotient(const ModMap& f, Part part) {
  switch (part) {
    case Part::Kernel: return submodule(f.source, kernel(f.matrix));
    case Part::Image: return submodule(f.target, f.matrix);
    case Part::Cokernel: return quotient(f.target, f.matrix);
  }
  fail(ErrorCode::InvalidInput, "unknown subquotient part");
}

ModMap corestrict(const ModMap& f, const SubResult& sub) { return {f.source, sub.module, sub.aux * f.matrix}; }

std::vector<ModMap> hom_space(const Mod& m, const Mod& n) {
  require_same_ring(m, n);
  const Fp p = m.prime();
  const std::size_t rows = n.dim(), cols = m.dim(), vars = rows * cols;
  std::vector<ModMap> out;
  if (vars == 0) return out;
  // Unknown X is n.dim x m.dim, flattened row-major. Impose X A_i = B_i X one
  // basis element at a time, shrinking the solution space as we go.
  Mat sol = Mat::identity(p, vars);
  for (std::size_t i = 0; i < m.actions().size() && sol.cols(); ++i) {
    const Mat& a = m.action(i);
    const Mat& b = n.action(i);
    Mat cons(p, vars, sol.cols());
    for (std::size_t c = 0; c < sol.cols(); ++c) {
      Mat x(p, rows, cols);
      for (std::size_t v = 0; v < vars; ++v) x(v / cols, v % cols) = sol(v, c);
      Mat diff = x * a - b * x;
      cons.set_col(c, diff.data());
    }
    sol = sol * kernel(cons);
  }
  for (std::size_t c = 0; c < sol.cols(); ++c) {
    Mat x(p, rows, cols);
    for (std::size_t v = 0; v < vars; ++v) x(v / cols, v % cols) = sol(v, c);
    out.push_back({m, n, std::move(x)});
  }
  return out;
}

std::size_t hom_dim(const Mod& m, const Mod& n) { return hom_space(m, n).size(); }

STorsionWitness is_uniformly_s_torsion(const Mod& t, const MultSet& s) {
  require(same_ring(t.ring(), s.ring()), ErrorCode::RingMismatch, "module and multiplicative set over different rings");
  if (t.is_zero()) return {true, t.ring()->unit(), "zero module"};
  for (const Vec& x : s.elements())
    if (t.act(x).is_zero()) return {true, x, ""};
  return {false, std::nullopt,
          "no element of S (" + std::to_string(s.size()) + " tried) annihilates the module of dimension " +
              std::to_string(t.dim())};
}

bool SExactReport::passed() const {
  return std::all_of(positions.begin(), positions.end(), [](const PositionVerdict& v) { return v.ok; });
}

std::string SExactReport::summary(const FiniteAlgebra& ring) const {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ", ";
    out += positions[i].ok ? ring.format(*positions[i].s) : "fail";
  }
  return "[" + out + "]";
}

SExactReport s_exactness_check(const std::vector<ModMap>& chain, const MultSet& s) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    require(chain[i].target.dim() == chain[i + 1].source.dim() && same_ring(chain[i].target.ring(), chain[i + 1].source.ring()),
            ErrorCode::NotComposable, "maps " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not composable");
  SExactReport report;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Mod& mid = chain[i].target;
    Mat im = chain[i].matrix.cols() ? column_basis(chain[i].matrix) : Mat(mid.prime(), mid.dim(), 0);
    Mat ker = kernel(chain[i + 1].matrix);
    PositionVerdict v;
    for (const Vec& x : s.elements()) {
      Mat a = mid.act(x);
      if (column_space_contains(im, a * ker) && column_space_contains(ker, a * im)) {
        v.ok = true;
        v.s = x;
        break;
      }
    }
    if (!v.ok)
      v.failure = "position " + std::to_string(i + 1) + ": no s in S with s Ker in Im and s Im in Ker (dim Ker " +
                  std::to_string(ker.cols()) + ", dim Im " + std::to_string(im.cols()) + ")";
    report.positions.push_back(std::move(v));
  }
  return report;
}

std::vector<ModMap> short_chain(const ModMap& f, const ModMap& g) {
  Mod zero = zero_module(f.source.ring());
  return {zero_map(zero, f.source), f, g, zero_map(g.target, zero)};
}

SIsoVerdict is_s_isomorphism(const ModMap& f, const MultSet& s) {
  return {is_uniformly_s_torsion(subquotient(f, Part::Kernel).module, s),
          is_uniformly_s_torsion(subquotient(f, Part::Cokernel).module, s)};
}

SIsoInverse s_iso_inverse(const ModMap& f, const MultSet& s) {
  require(is_s_isomorphism(f, s).verdict(), ErrorCode::NotSIso, "map is not an S-isomorphism");
  const Mod& m = f.source;
  const Mod& n = f.target;
  const Fp p = m.prime();
  std::vector<ModMap> basis = hom_space(n, m);
  const std::size_t nn = n.dim() * n.dim(), mm = m.dim() * m.dim();
  // Unknown coefficients c with sum c_i (f h_i, h_i f) = (s Id_N, s Id_M).
  Mat sys(p, nn + mm, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Mat fh = f.matrix * basis[i].matrix;
    Mat hf = basis[i].matrix * f.matrix;
    Vec col(fh.data());
    col.insert(col.end(), hf.data().begin(), hf.data().end());
    sys.set_col(i, col);
  }
  Solver solver(sys);
  for (const Vec& x : s.elements()) {
    Vec rhs(n.act(x).data());
    Mat sm = m.act(x);
    rhs.insert(rhs.end(), sm.data().begin(), sm.data().end());
    auto c = solver.solve(rhs);
    if (!c) continue;
    Mat g(p, m.dim(), n.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) g.add_scaled(basis[i].matrix, (*c)[i]);
    return {ModMap{n, m, std::move(g)}, x};
  }
  fail(ErrorCode::InternalInvariantViolation, "no inverse found for a certified S-isomorphism");
}

Mod character_dual(const Mod& m) {
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(a.transpose());
  return Mod::unchecked(m.ring(), m.dim(), std::move(action));
}

ModMap dual_map(const ModMap& f) {
  return {character_dual(f.target), character_dual(f.source), f.matrix.transpose()};
}

namespace {

Mat plain_generators(const Mod& m) {
  const Fp p = m.prime();
  Mat gens(p, m.dim(), 0);
  Mat span(p, m.dim(), 0);
  for (std::size_t k = 0; k < m.dim(); ++k) {
    Vec e(m.dim(), 0);
    e[k] = 1;
    if (in_column_space(span, e)) continue;
    Mat g = Mat::column(p, e);
    gens = Mat::hcat(gens, g);
    span = Mat::hcat(span, span_of(m, g));
    span = column_basis(span);
  }
  return gens;
}

Mat minimal_generators(const Mod& m) {
  const auto& ring = *m.ring();
  if (!ring.cardinality()) return plain_generators(m);
  const Fp p = m.prime();
  Mat rad = ring.radical();
  std::vector<Vec> rad_elems;
  for (std::size_t c = 0; c < rad.cols(); ++c) rad_elems.push_back(rad.col(c));
  Mat jm = image_under(m, rad_elems);

  // Over each local factor e_j R the greedy choice is a basis of e_j M / J e_j M;
  // summing across factors gives a minimal generating set.
  std::vector<std::vector<Vec>> per_factor;
  std::size_t count = 0;
  for (const Vec& e : ring.primitive_idempotents()) {
    Mat part = m.act(e);
    Mat candidates = part.cols() ? column_basis(part) : part;
    Mat span = jm;
    std::vector<Vec> chosen;
    for (std::size_t c = 0; c < candidates.cols(); ++c) {
      Vec v = candidates.col(c);
      if (in_column_space(span, v)) continue;
      chosen.push_back(v);
      span = column_basis(Mat::hcat(span, span_of(m, Mat::column(p, v))));
    }
    count = std::max(count, chosen.size());
    per_factor.push_back(std::move(chosen));
  }
  Mat gens(p, m.dim(), count);
  for (std::size_t l = 0; l < count; ++l) {
    Vec g(m.dim(), 0);
    for (const auto& chosen : per_factor)
      if (l < chosen.size())
        for (std::size_t k = 0; k < g.size(); ++k) g[k] = fp_add(g[k], chosen[l][k], p);
    gens.set_col(l, g);
  }
  return gens;
}

}  // namespace

Cover free_cover(const Mod& m, CoverStyle style, std::uint64_t seed) {
  Mat gens;
  switch (style) {
    case CoverStyle::Minimal: gens = minimal_generators(m); break;
    case CoverStyle::Plain: gens = plain_generators(m); break;
    case CoverStyle::SeededRandom: {
      gens = minimal_generators(m);
      Rng rng(seed);
      const std::size_t extra = 1 + rng.below(2);
      for (std::size_t i = 0; i < extra; ++i) gens = Mat::hcat(gens, Mat::column(m.prime(), rng.vec(m.prime(), m.dim())));
      break;
    }
  }
  Mod f = free_module(m.ring(), gens.cols());
  ModMap pi = free_map(f, m, gens);
  auto section = Solver(pi.matrix).solve(Mat::identity(m.prime(), m.dim()));
  require(section.has_value(), ErrorCode::InternalInvariantViolation, "cover is not surjective");
  return {f, pi, *section};
}

Presentation presentation(const Mod& m) {
  Cover cover = free_cover(m, CoverStyle::Minimal);
  SubResult k = subquotient(cover.map, Part::Kernel);
  Cover kc = free_cover(k.module, CoverStyle::Minimal);
  return {cover, compose(k.map, kc.map)};
}

MapSpace::MapSpace(const Presentation& pres, const Mod& target) : pres_(pres), target_(target) {
  require_same_ring(pres.cover.map.target, target);
  basis_ = kernel(pullback(pres.relations, target));
}

ModMap MapSpace::realize(const Vec& x) const {
  const std::size_t g = pres_.cover.rank(), n = target_.dim();
  Mat images(target_.prime(), n, g);
  for (std::size_t b = 0; b < g; ++b)
    for (std::size_t k = 0; k < n; ++k) images(k, b) = x[b * n + k];
  ModMap onfree = free_map(pres_.cover.free, target_, images);
  return {pres_.cover.map.target, target_, onfree.matrix * pres_.cover.section};
}

std::vector<ModMap> MapSpace::maps() const {
  std::vector<ModMap> out;
  for (std::size_t c = 0; c < basis_.cols(); ++c) out.push_back(realize(basis_.col(c)));
  return out;
}

std::vector<std::size_t> kernel_profile(const Mod& m) {
  std::vector<std::size_t> out;
  const auto& ring = *m.ring();
  if (ring.cardinality()) {
    for (const Vec& r : ring.elements()) out.push_back(m.dim() - rank(m.act(r)));
  } else {
    for (const Mat& a : m.actions()) out.push_back(m.dim() - rank(a));
  }
  return out;
}

bool is_bijective(const ModMap& f) {
  return f.source.dim() == f.target.dim() && rank(f.matrix) == f.source.dim();
}

std::optional<ModMap> find_isomorphism(const Mod& m, const Mod& n, std::uint64_t seed) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return ModMap{m, n, Mat(m.prime(), 0, 0)};
  if (kernel_profile(m) != kernel_profile(n)) return std::nullopt;
  std::vector<ModMap> basis = hom_space(m, n);
  if (basis.empty()) return std::nullopt;
  const Fp p = m.prime();
  auto combine = [&](const Vec& c) {
    Mat x(p, n.dim(), m.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) x.add_scaled(basis[i].matrix, c[i]);
    return ModMap{m, n, std::move(x)};
  };
  double total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
  if (total <= 4096) {
    Vec c(basis.size(), 0);
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(total); ++idx) {
      ModMap f = combine(c);
      if (is_bijective(f)) return f;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (++c[k] < p) break;
        c[k] = 0;
      }
    }
    return std::nullopt;
  }
  Rng rng(seed);
  for (int t = 0; t < 2000; ++t) {
    ModMap f = combine(rng.vec(p, basis.size()));
    if (is_bijective(f)) return f;
  }
  return std::nullopt;
}

Vec Rng::vec(Fp p, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = field(p);
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL));
}

Mod random_module(const Ring& ring, Rng& rng, std::size_t cap) {
  const std::size_t r = 1 + rng.below(2);
  const std::size_t len = r * ring->dim();
  // Relations scaled into the radical give non-free modules over local rings,
  // which plain random relations rarely do.
  const Mat rad = ring->radical();
  auto relation = [&] {
    Vec v = rng.vec(ring->prime(), len);
    if (rad.cols() == 0 || rng.below(3) == 0) return v;
    Vec x = ring->zero();
    while (ring->is_zero(x))
      for (std::size_t c = 0; c < rad.cols(); ++c)
        for (std::uint64_t a = rng.below(ring->prime()); a > 0; --a) x = ring->add(x, rad.col(c));
    Vec out(len, 0);
    for (std::size_t g = 0; g < r; ++g) {
      Vec block(v.begin() + g * ring->dim(), v.begin() + (g + 1) * ring->dim());
      Vec y = ring->mul(x, block);
      std::copy(y.begin(), y.end(), out.begin() + g * ring->dim());
    }
    return out;
  };
  std::vector<Vec> rels;
  const std::size_t k = rng.below(4);
  for (std::size_t i = 0; i < k; ++i) rels.push_back(relation());
  // Zero modules are kept only occasionally so that sweeps see real instances.
  const bool allow_zero = cap == 0 || rng.below(8) == 0;
  for (;;) {
    Mod m = presented_module(ring, r, rels);
    if (m.dim() == 0 && !allow_zero && !rels.empty()) {
      rels.pop_back();
      continue;
    }
    if (m.dim() <= cap) return m;
    rels.push_back(relation());
  }
}

}  // namespace shom
