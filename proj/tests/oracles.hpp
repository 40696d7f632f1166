#pragma once

// Brute-force reference computations used to cross-check the engine. They
// share nothing with the engine beyond the data types.

#include <cstdint>
#include <set>
#include <vector>

#include "module.hpp"
#include "ring.hpp"

namespace oracle {

using shom::Fp;
using shom::Mat;
using shom::Mod;
using shom::Vec;

inline Vec mat_vec(const Mat& a, const Vec& x) {
  Vec out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += std::uint64_t{a(r, c)} * x[c];
    out[r] = static_cast<Fp>(acc % a.prime());
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat out(a.prime(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += std::uint64_t{a(r, k)} * b(k, c);
      out(r, c) = static_cast<Fp>(acc % a.prime());
    }
  return out;
}

/// Counts all F_p-linear maps M -> N commuting with every action matrix.
inline std::uint64_t count_homs(const Mod& m, const Mod& n) {
  const Fp p = m.prime();
  const std::size_t vars = m.dim() * n.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat x(p, n.dim(), m.dim());
    std::uint64_t t = idx;
    for (std::size_t v = 0; v < vars; ++v) {
      x(v / m.dim(), v % m.dim()) = static_cast<Fp>(t % p);
      t /= p;
    }
    bool ok = true;
    for (std::size_t i = 0; i < m.actions().size() && ok; ++i)
      ok = mat_mul(x, m.action(i)) == mat_mul(n.action(i), x);
    count += ok;
  }
  return count;
}

inline std::size_t log_p(std::uint64_t count, Fp p) {
  std::size_t k = 0;
  while (count > 1) {
    count /= p;
    ++k;
  }
  return k;
}

/// All subsets of the element list closed under addition and under
/// multiplication by ring elements, found by brute force over subsets.
inline std::size_t count_ideals_bruteforce(const shom::FiniteAlgebra& r) {
  std::vector<Vec> elems = r.elements();
  const std::size_t n = elems.size();
  std::set<Vec> all(elems.begin(), elems.end());
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<Vec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.insert(elems[i]);
    if (!sub.count(r.zero())) continue;
    bool ok = true;
    for (const Vec& a : sub) {
      for (const Vec& b : sub)
        if (!sub.count(r.add(a, b))) { ok = false; break; }
      if (!ok) break;
      for (const Vec& x : elems)
        if (!sub.count(r.mul(x, a))) { ok = false; break; }
      if (!ok) break;
    }
    count += ok;
  }
  return count;
}

/// Elements of M as vectors: all of F_p^dim.
inline std::vector<Vec> all_vectors(Fp p, std::size_t dim) {
  std::vector<Vec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec v(dim);
    std::uint64_t t = idx;
    for (auto& x : v) {
      x = static_cast<Fp>(t % p);
      t /= p;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace oracle
