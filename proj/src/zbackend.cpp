#include "zbackend.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "error.hpp"

namespace shom {

namespace {

BigInt mod_floor(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::string big_str(const BigInt& x) { return x.str(); }

}  // namespace

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMat ZMat::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  ZMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::InvalidInput, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ZMat ZMat::hcat(const ZMat& a, const ZMat& b) {
  require(a.rows_ == b.rows_, ErrorCode::InternalInvariantViolation, "hcat row mismatch");
  ZMat m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

ZMat ZMat::kron_identity(const ZMat& a, std::size_t n) {
  ZMat m(a.rows_ * n, a.cols_ * n);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (a(r, c) != 0)
        for (std::size_t k = 0; k < n; ++k) m(r * n + k, c * n + k) = a(r, c);
  return m;
}

ZMat ZMat::identity_kron(std::size_t n, const ZMat& a) {
  ZMat m(a.rows_ * n, a.cols_ * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) m(k * a.rows_ + r, k * a.cols_ + c) = a(r, c);
  return m;
}

std::vector<BigInt> ZMat::col(std::size_t c) const {
  std::vector<BigInt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ZMat ZMat::cols_range(std::size_t c0, std::size_t n) const {
  ZMat m(rows_, n);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c0 + c);
  return m;
}

ZMat ZMat::rows_range(std::size_t r0, std::size_t n) const {
  ZMat m(n, cols_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r0 + r, c);
  return m;
}

ZMat ZMat::transpose() const {
  ZMat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool ZMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

ZMat ZMat::reduced_mod(const BigInt& m) const {
  std::vector<std::size_t> keep;
  ZMat red(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    bool nz = false;
    for (std::size_t r = 0; r < rows_; ++r) {
      red(r, c) = mod_floor((*this)(r, c), m);
      nz |= red(r, c) != 0;
    }
    if (nz) keep.push_back(c);
  }
  ZMat out(rows_, keep.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < keep.size(); ++i) out(r, i) = red(r, keep[i]);
  return out;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
  require(a.cols_ == b.rows_, ErrorCode::InternalInvariantViolation, "integer matrix product shape");
  ZMat m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

std::vector<BigInt> Snf::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

Snf snf(const ZMat& input) {
  const std::size_t m = input.rows(), n = input.cols();
  Snf s{ZMat::identity(m), ZMat::identity(m), input, ZMat::identity(n), 0};
  ZMat& a = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(s.u(i, c), s.u(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(s.u_inv(r, i), s.u_inv(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(s.v(r, i), s.v(r, j));
  };
  // row_i += q row_j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) a(i, c) += q * a(j, c);
    for (std::size_t c = 0; c < m; ++c) s.u(i, c) += q * s.u(j, c);
    for (std::size_t r = 0; r < m; ++r) s.u_inv(r, j) -= q * s.u_inv(r, i);
  };
  // col_i += q col_j
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) a(r, i) += q * a(r, j);
    for (std::size_t r = 0; r < n; ++r) s.v(r, i) += q * s.v(r, j);
  };

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (a(r, c) != 0 && (!best || babs(a(r, c)) < babs(a(best->first, best->second)))) best = {r, c};
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r)
        if (a(r, t) != 0) {
          add_row(r, t, -(a(r, t) / a(t, t)));
          if (a(r, t) != 0) clean = false;
        }
      for (std::size_t c = t + 1; c < n; ++c)
        if (a(t, c) != 0) {
          add_col(c, t, -(a(t, c) / a(t, t)));
          if (a(t, c) != 0) clean = false;
        }
      if (!clean) {
        std::size_t br = t, bc = t;
        BigInt bv = babs(a(t, t));
        for (std::size_t r = t + 1; r < m; ++r)
          if (a(r, t) != 0 && babs(a(r, t)) < bv) bv = babs(a(r, t)), br = r, bc = t;
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(t, c) != 0 && babs(a(t, c)) < bv) bv = babs(a(t, c)), br = t, bc = c;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> bad;
      for (std::size_t r = t + 1; r < m && !bad; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (!bad) break;
      add_row(t, *bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) s.u(t, c) = -s.u(t, c);
      for (std::size_t r = 0; r < m; ++r) s.u_inv(r, t) = -s.u_inv(r, t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

ZMat z_kernel(const ZMat& a) {
  Snf s = snf(a);
  return s.v.cols_range(s.rank, a.cols() - s.rank);
}

ZMat lattice_basis(const ZMat& gens) {
  Snf s = snf(gens);
  ZMat out(gens.rows(), s.rank);
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t r = 0; r < gens.rows(); ++r) out(r, i) = s.u_inv(r, i) * s.d(i, i);
  return out;
}

namespace {

// Coordinates c with basis * c = v for every column v of `vs`; `basis` has
// full column rank and every v lies in its lattice.
ZMat lattice_coordinates(const ZMat& basis, const ZMat& vs) {
  Snf s = snf(basis);
  require(s.rank == basis.cols(), ErrorCode::InternalInvariantViolation, "lattice basis is not independent");
  ZMat w = s.u * vs;
  ZMat y(basis.cols(), vs.cols());
  for (std::size_t c = 0; c < vs.cols(); ++c) {
    for (std::size_t i = 0; i < s.rank; ++i) {
      require(w(i, c) % s.d(i, i) == 0, ErrorCode::InternalInvariantViolation, "vector outside the lattice");
      y(i, c) = w(i, c) / s.d(i, i);
    }
    for (std::size_t i = s.rank; i < basis.rows(); ++i)
      require(w(i, c) == 0, ErrorCode::InternalInvariantViolation, "vector outside the lattice span");
  }
  return s.v * y;
}

bool lattice_contains(const ZMat& big, const ZMat& small) {
  if (small.cols() == 0) return true;
  ZMat basis = lattice_basis(big);
  Snf s = snf(basis);
  ZMat w = s.u * small;
  for (std::size_t c = 0; c < small.cols(); ++c)
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i < s.rank ? w(i, c) % s.d(i, i) != 0 : w(i, c) != 0) return false;
    }
  return true;
}

// Non-unit invariant factors of Z^rows / colspace(rel), zeros last.
std::vector<BigInt> quotient_factors(const ZMat& rel) {
  Snf s = snf(rel);
  std::vector<BigInt> out;
  for (const BigInt& d : s.diagonal())
    if (d != 1) out.push_back(d);
  for (std::size_t i = s.rank; i < rel.rows(); ++i) out.push_back(0);
  return out;
}

}  // namespace

std::string ZRing::name() const { return integers() ? "Z" : "Z/" + big_str(m); }

ZMod ZMod::cyclic(const ZRing& ring, const BigInt& d) {
  ZMod z{ring, 1, ZMat(1, 1)};
  z.rel(0, 0) = d;
  return z;
}

ZMod ZMod::from_factors(const ZRing& ring, const std::vector<BigInt>& factors) {
  ZMod z{ring, factors.size(), ZMat(factors.size(), factors.size())};
  for (std::size_t i = 0; i < factors.size(); ++i) z.rel(i, i) = factors[i];
  return z;
}

ZMat ZMod::full_relations() const {
  require(rel.rows() == gens, ErrorCode::InvalidInput, "relation matrix must have one row per generator");
  if (ring.integers()) return rel;
  ZMat mi = ZMat::identity(gens);
  for (std::size_t i = 0; i < gens; ++i) mi(i, i) = ring.m;
  return ZMat::hcat(rel, mi);
}

std::vector<BigInt> ZMod::invariant_factors() const { return quotient_factors(full_relations()); }

bool ZMod::finite() const {
  auto f = invariant_factors();
  return std::none_of(f.begin(), f.end(), [](const BigInt& x) { return x == 0; });
}

BigInt ZMod::exponent() const {
  auto f = invariant_factors();
  require(finite(), ErrorCode::InvalidInput, "module has a free summand");
  return f.empty() ? BigInt(1) : f.back();
}

std::string ZMod::str() const {
  auto f = invariant_factors();
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    out += f[i] == 0 ? "Z" : "Z/" + big_str(f[i]);
  }
  return out;
}

bool ZMultSet::contains(const BigInt& x) const {
  if (!ring.integers()) {
    // Reachable residues from 1.
    BigInt target = mod_floor(x, ring.m);
    std::set<BigInt> seen{mod_floor(1, ring.m)};
    std::deque<BigInt> q{mod_floor(1, ring.m)};
    while (!q.empty()) {
      BigInt r = q.front();
      q.pop_front();
      if (r == target) return true;
      for (const BigInt& g : generators) {
        BigInt n = mod_floor(r * g, ring.m);
        if (seen.insert(n).second) q.push_back(n);
      }
    }
    return false;
  }
  if (x == 1) return true;
  if (x == 0) return false;
  bool minus = std::find(generators.begin(), generators.end(), BigInt(-1)) != generators.end();
  if (x == -1) return minus;
  for (const BigInt& g : generators) {
    if (babs(g) <= 1) continue;
    if (x % g == 0 && contains(x / g)) return true;
  }
  return minus && x < 0 && contains(-x);
}

std::string ZMultSet::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + big_str(generators[i]);
  return out + "> in " + ring.name();
}

ZTorsion z_uniform_torsion(const ZMod& x, const ZMultSet& s) {
  ZTorsion out;
  if (!x.finite()) {
    out.detail = "module " + x.str() + " has a free summand";
    return out;
  }
  const BigInt e = x.exponent();
  out.exponents.assign(s.generators.size(), 0);
  if (e == 1) {
    out.verdict = true;
    out.expression = "1";
    return out;
  }
  // BFS over residues mod e; parents record the generator used.
  std::map<BigInt, std::pair<BigInt, std::size_t>> parent;
  std::deque<BigInt> q{BigInt(1)};
  parent.emplace(BigInt(1), std::make_pair(BigInt(-1), std::size_t{0}));
  std::optional<BigInt> hit;
  while (!q.empty() && !hit) {
    BigInt r = q.front();
    q.pop_front();
    for (std::size_t j = 0; j < s.generators.size(); ++j) {
      BigInt n = mod_floor(r * s.generators[j], e);
      if (parent.count(n)) continue;
      parent.emplace(n, std::make_pair(r, j));
      if (n == 0) {
        hit = n;
        break;
      }
      q.push_back(n);
    }
  }
  if (!hit) {
    out.detail = "no product of generators of " + s.str() + " is divisible by the exponent " + big_str(e) + " (" +
                 std::to_string(parent.size()) + " residues reached)";
    return out;
  }
  for (BigInt r = *hit; r != 1;) {
    auto [prev, j] = parent.at(r);
    ++out.exponents[j];
    r = prev;
  }
  out.verdict = true;
  out.s = 1;
  for (std::size_t j = 0; j < s.generators.size(); ++j) {
    for (unsigned k = 0; k < out.exponents[j]; ++k) out.s *= s.generators[j];
    if (out.exponents[j] == 0) continue;
    if (!out.expression.empty()) out.expression += "*";
    out.expression += big_str(s.generators[j]);
    if (out.exponents[j] > 1) out.expression += "^" + std::to_string(out.exponents[j]);
  }
  if (!s.ring.integers()) out.s = mod_floor(out.s, s.ring.m);
  return out;
}

std::vector<ZMat> z_resolution(const ZMod& m, std::size_t depth) {
  std::vector<ZMat> ds;
  if (depth == 0) return ds;
  require(m.rel.rows() == m.gens, ErrorCode::InvalidInput, "relation matrix must have one row per generator");
  ds.push_back(m.ring.integers() ? m.rel : m.rel.reduced_mod(m.ring.m));
  while (ds.size() < depth) {
    const ZMat& prev = ds.back();
    if (m.ring.integers()) {
      ds.push_back(z_kernel(prev));
      continue;
    }
    // Kernel over Z/m from the lift [d | m Id], then a reduced generating set.
    ZMat mi = ZMat::identity(prev.rows());
    for (std::size_t i = 0; i < prev.rows(); ++i) mi(i, i) = m.ring.m;
    ZMat k = z_kernel(ZMat::hcat(prev, mi)).rows_range(0, prev.cols());
    ZMat mc = ZMat::identity(prev.cols());
    for (std::size_t i = 0; i < prev.cols(); ++i) mc(i, i) = m.ring.m;
    ds.push_back(lattice_basis(ZMat::hcat(k, mc)).reduced_mod(m.ring.m));
  }
  return ds;
}

ZMod z_ext(const ZMod& m, const ZMod& n, std::size_t degree) {
  return z_ext_from_resolution(m, z_resolution(m, degree + 1), n, degree);
}

void check_z_resolution(const ZMod& m, const std::vector<ZMat>& ds) {
  require(!ds.empty(), ErrorCode::InvalidInput, "resolution needs at least the presentation");
  require(ds[0].rows() == m.gens, ErrorCode::InvalidInput, "presentation has the wrong number of rows");
  require(ZMod{m.ring, m.gens, ds[0]}.invariant_factors() == m.invariant_factors(), ErrorCode::InvalidInput,
          "first boundary does not present the module");
  for (std::size_t i = 1; i < ds.size(); ++i) {
    require(ds[i].rows() == ds[i - 1].cols(), ErrorCode::InvalidInput,
            "boundary " + std::to_string(i + 1) + " has the wrong number of rows");
    ZMat prod = ds[i - 1] * ds[i];
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        require(m.ring.integers() ? prod(r, c) == 0 : prod(r, c) % m.ring.m == 0, ErrorCode::InvalidInput,
                "d^2 != 0 at degree " + std::to_string(i));
    // Exactness: the image of d_{i+1} is the whole kernel of d_i.
    std::vector<ZMat> fresh = z_resolution(ZMod{m.ring, ds[i - 1].rows(), ds[i - 1]}, 2);
    ZMat kernel = fresh[1];
    ZMat mine = ds[i];
    if (!m.ring.integers()) {
      ZMat mi = ZMat::identity(kernel.rows());
      for (std::size_t k = 0; k < kernel.rows(); ++k) mi(k, k) = m.ring.m;
      kernel = ZMat::hcat(kernel, mi);
      mine = ZMat::hcat(mine, mi);
    }
    require(lattice_contains(kernel, mine) && lattice_contains(mine, kernel),
            ErrorCode::InvalidInput, "not exact at degree " + std::to_string(i));
  }
}

ZMod z_ext_from_resolution(const ZMod& m, const std::vector<ZMat>& ds, const ZMod& n, std::size_t degree) {
  require(m.ring == n.ring, ErrorCode::RingMismatch, "modules over " + m.ring.name() + " and " + n.ring.name());
  require(ds.size() >= degree + 1, ErrorCode::InvalidInput, "resolution too short for the requested degree");
  auto rank_at = [&](std::size_t i) { return i == 0 ? m.gens : ds[i - 1].cols(); };
  const std::size_t h = n.gens;
  const ZMat bn = n.full_relations();
  const std::size_t rn = rank_at(degree), rn1 = rank_at(degree + 1);
  const std::size_t a = h * rn;
  if (a == 0) return ZMod::from_factors(m.ring, {});
  // Cocycles: x in Z^a with L x in the relations of N^{r_{n+1}}.
  ZMat l = ZMat::kron_identity(ds[degree].transpose(), h);
  ZMat r_next = ZMat::identity_kron(rn1, bn);
  ZMat cocycles = z_kernel(ZMat::hcat(l, r_next)).rows_range(0, a);
  ZMat z = lattice_basis(cocycles);
  if (z.cols() == 0) return ZMod::from_factors(m.ring, {});
  ZMat bounds = ZMat::identity_kron(rn, bn);
  if (degree > 0) bounds = ZMat::hcat(ZMat::kron_identity(ds[degree - 1].transpose(), h), bounds);
  ZMat coords = lattice_coordinates(z, bounds);
  return ZMod::from_factors(m.ring, quotient_factors(coords));
}

ZDimResult z_s_pd(const ZMod& m, const ZMultSet& s, std::size_t bound) {
  require(m.ring == s.ring, ErrorCode::RingMismatch, "module over " + m.ring.name() + ", set over " + s.ring.name());
  std::vector<ZMat> ds = z_resolution(m, bound + 2);
  ZDimResult out;
  for (std::size_t i = 0; i <= bound; ++i) {
    ZMod k{m.ring, ds[i].rows(), ds[i]};
    ZMod next{m.ring, ds[i + 1].rows(), ds[i + 1]};
    ZMod e = z_ext(k, next, 1);
    ZTorsion t = z_uniform_torsion(e, s);
    if (t.verdict) {
      out.value = Dim::exact(i, bound);
      out.witness = std::move(t);
      return out;
    }
    out.failures.push_back("K_" + std::to_string(i) + ": Ext^1(K_" + std::to_string(i) + ", K_" + std::to_string(i + 1) +
                           ") = " + e.str() + " is not uniformly S-torsion");
  }
  out.value = Dim::beyond(bound);
  return out;
}

std::optional<ZTorsion> divisible_element(const ZMultSet& s, const BigInt& a) {
  ZTorsion t = z_uniform_torsion(ZMod::cyclic(ZRing{}, a), s);
  if (t.verdict) return t;
  return std::nullopt;
}

ZMultSet reduce_multset(const ZMultSet& s, const BigInt& a) {
  ZMultSet out{ZRing{a}, {}};
  for (const BigInt& g : s.generators) out.generators.push_back(mod_floor(g, a));
  return out;
}

ZMod lift_to_integers(const ZMod& m) { return ZMod{ZRing{}, m.gens, m.full_relations()}; }

FactorRingReport factor_ring_check(const BigInt& a, const ZMod& m, const ZMultSet& s, std::size_t bound) {
  require(a >= 2, ErrorCode::InvalidInput, "a must be at least 2");
  require(s.ring.integers(), ErrorCode::RingMismatch, "S must be a subset of Z");
  require(m.ring.m == a, ErrorCode::RingMismatch, "module must be over Z/" + big_str(a));
  require(!m.is_zero(), ErrorCode::InvalidInput, "module must be nonzero");
  if (auto d = divisible_element(s, a)) fail(ErrorCode::DividesS, big_str(a) + " divides " + d->expression + " in S");
  FactorRingReport rep;
  rep.a = a;
  rep.over_z = z_s_pd(lift_to_integers(m), s, bound).value;
  rep.over_quotient = z_s_pd(m, reduce_multset(s, a), bound).value;
  if (!rep.over_quotient.finite()) {
    rep.verdict = Verdict::Vacuous;
    rep.message = "vacuous: S-bar-pd over Z/" + big_str(a) + " is " + rep.over_quotient.str();
    return rep;
  }
  rep.verdict = equal(Interval::of(rep.over_z), Interval::of(rep.over_quotient) + 1);
  rep.message = std::string("+1 identity ") + (rep.verdict == Verdict::Pass ? "holds: " : "fails: ") + rep.over_z.str() +
                (rep.verdict == Verdict::Pass ? " = " : " != ") + rep.over_quotient.str() + " + 1";
  return rep;
}

ChangeOfRingsReport z_change_of_rings_check(const BigInt& a, const ZMod& m, const ZMultSet& s, std::size_t bound) {
  require(a >= 2 && s.ring.integers() && m.ring.m == a, ErrorCode::UnsupportedPair,
          "expected Z -> Z/a with S in Z and M over Z/a");
  ChangeOfRingsReport rep;
  rep.over_r = z_s_pd(lift_to_integers(m), s, bound).value;
  rep.over_t = z_s_pd(m, reduce_multset(s, a), bound).value;
  rep.t_over_r = z_s_pd(ZMod::cyclic(ZRing{}, a), s, bound).value;
  rep.verdict = leq(Interval::of(rep.over_r), Interval::of(rep.over_t) + Interval::of(rep.t_over_r));
  return rep;
}

ZMod random_z_module(const BigInt& a, Rng& rng, std::size_t gens) {
  const auto am = static_cast<std::uint64_t>(a);
  for (;;) {
    const std::size_t g = 1 + rng.below(gens);
    const std::size_t k = rng.below(3);
    ZMod m{ZRing{a}, g, ZMat(g, k)};
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t c = 0; c < k; ++c) m.rel(r, c) = rng.below(am);
    if (!m.is_zero()) return m;
  }
}

}  // namespace shom
