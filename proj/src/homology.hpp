#pragma once

#include <cstdint>
#include <vector>

#include "module.hpp"

namespace shom {

/// Free resolution ... -> F_1 -> F_0 -> M -> 0. Past the first zero syzygy
/// every further term is the zero module, so indexing never runs off the end.
struct Resolution {
  Mod target;
  CoverStyle style = CoverStyle::Minimal;
  std::vector<Cover> covers;       // covers[k]: F_k -> K_k
  std::vector<ModMap> d;           // d[0]: F_0 -> M, d[k]: F_k -> F_{k-1}
  std::vector<SubResult> syzygies; // syzygies[k] = K_k as a submodule of F_{k-1} (K_0 = M)
  std::size_t depth() const { return covers.size() - 1; }
  const Mod& free(std::size_t k) const { return covers[k].free; }
  std::vector<std::size_t> ranks() const;
  /// First k with K_k = 0, or nullopt.
  std::optional<std::size_t> length() const;
};

/// N^r with the diagonal action.
Mod power_module(const Mod& n, std::size_t r);

Resolution free_resolution(const Mod& m, std::size_t depth, CoverStyle style = CoverStyle::Minimal,
                           std::uint64_t seed = 0);
/// Rebuilds a resolution from generator images: images[0] holds the images
/// in M of the generators of F_0, images[k] those of F_k in F_{k-1}. Throws
/// InvalidInput when the data is not an exact free complex over M.
Resolution resolution_from_images(const Mod& m, const std::vector<Mat>& images);
/// Re-checks d_{k-1} d_k = 0 and exactness by ranks; throws InternalInvariantViolation.
void check_resolution(const Resolution& res);

struct ExtResult {
  std::size_t n = 0;
  Mod module;
  Mod cochains;          // Hom(F_n, N) = N^{r_n}
  Mat representatives;   // cochains.dim x module.dim, cocycle representatives
  Mat projection;        // module.dim x cochains.dim, valid on cocycles
};

ExtResult ext_from_resolution(const Resolution& res, const Mod& n, std::size_t degree);
ExtResult ext(const Mod& m, const Mod& n, std::size_t degree, CoverStyle style = CoverStyle::Minimal,
              std::uint64_t seed = 0);

/// Chain map over alpha: M -> M' between resolutions, alpha_k: P_k -> Q_k.
std::vector<ModMap> lift_chain_map(const ModMap& alpha, const Resolution& p, const Resolution& q,
                                   std::size_t upto);
/// Ext^n(L, f) for f: N -> N', both Ext groups taken over the same resolution of L.
ModMap ext_covariant_map(const ExtResult& from, const ExtResult& to, const ModMap& f);
/// Ext^n(alpha, N): Ext^n(M', N) -> Ext^n(M, N) for alpha: M -> M'.
ModMap ext_contravariant_map(const ModMap& alpha, const Resolution& p, const Resolution& q, const ExtResult& over_q,
                             const ExtResult& over_p, const Mod& n);

enum class Variance { Covariant, Contravariant };

struct ConnectingData {
  Variance variance = Variance::Covariant;
  std::size_t n = 0;
  std::vector<ModMap> chain;   // 0 -> E^0 -> ... -> E^n(last) -> E^{n+1}(first)
  std::vector<ModMap> deltas;  // deltas[k-1] = delta_k, k = 1..n+1
  SExactReport report;
};

/// The long S-exact Ext sequence attached to an S-exact 0 -> A -> B -> C -> 0,
/// built from the exact core 0 -> Ker g -> B -> Im g -> 0 and the S-inverse
/// correctors, through degree n. NotSExact when the input fails the check.
ConnectingData long_ext_sequence(const ModMap& f, const ModMap& g, const Mod& l, std::size_t n, Variance variance,
                                 const MultSet& s);

/// Mutation fixture: when set, every connecting map is replaced by zero.
void set_connecting_sabotage(bool on);
bool connecting_sabotage();

struct Cocover {
  Mod injective;  // D(F) for a free F
  ModMap map;     // E -> D(F), injective
};
Cocover injective_cocover(const Mod& e);

}  // namespace shom
