#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fp_matrix.hpp"
#include "ring.hpp"

namespace shom {

/// A finite module over a FiniteAlgebra: an F_p-space of dimension dim() with
/// one action matrix per ring basis element.
class Mod {
 public:
  Mod() = default;
  /// Validates the representation property; throws InvalidModule naming the
  /// offending basis element.
  static Mod from_action(Ring ring, std::size_t dim, std::vector<Mat> action);
  static Mod unchecked(Ring ring, std::size_t dim, std::vector<Mat> action);

  const Ring& ring() const { return ring_; }
  Fp prime() const { return ring_->prime(); }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  const std::vector<Mat>& actions() const { return action_; }
  /// Matrix of x -> r x.
  Mat act(const Vec& r) const;

  void validate() const;

 private:
  Ring ring_;
  std::size_t dim_ = 0;
  std::vector<Mat> action_;
};

struct ModMap {
  Mod source;
  Mod target;
  Mat matrix;  // target.dim() x source.dim()

  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

/// Checks sizes and R-linearity (NotRLinear).
ModMap make_map(const Mod& source, const Mod& target, Mat matrix);
ModMap identity_map(const Mod& m);
ModMap zero_map(const Mod& source, const Mod& target);
ModMap scalar_map(const Mod& m, const Vec& r);
/// g after f; NotComposable on a dimension mismatch.
ModMap compose(const ModMap& g, const ModMap& f);
ModMap add_maps(const ModMap& a, const ModMap& b);
ModMap scale_map(const ModMap& f, const Vec& r);
bool is_r_linear(const Mod& source, const Mod& target, const Mat& matrix);
void require_same_ring(const Mod& a, const Mod& b);

Mod zero_module(const Ring& ring);
/// R^rank; generator b is the unit placed in block b.
Mod free_module(const Ring& ring, std::size_t rank);
std::size_t free_rank(const Mod& f);
Mod direct_sum(const Mod& a, const Mod& b);
Mod direct_sum(const std::vector<Mod>& parts);
ModMap direct_sum_map(const ModMap& f, const ModMap& g);
ModMap sum_inclusion(const Mod& a, const Mod& b, int which);
ModMap sum_projection(const Mod& a, const Mod& b, int which);
/// R/I for an ideal given by its column basis.
Mod cyclic_module(const Ring& ring, const Mat& ideal_basis);
/// Cokernel of R^k -> R^rank, relations given as vectors of length rank * dim R.
Mod presented_module(const Ring& ring, std::size_t rank, const std::vector<Vec>& relations);

/// Map R^rank -> target sending generator b to column b of `images`.
ModMap free_map(const Mod& free, const Mod& target, const Mat& images);
/// Images of the generators of a free source.
Mat generator_images(const ModMap& f);
/// For a: R^r1 -> R^r2, the induced map Hom(R^r2, L) = L^r2 -> L^r1 = Hom(R^r1, L).
Mat pullback(const ModMap& a, const Mod& l);

/// A module together with its structure map. For kernels and images `map` is
/// the inclusion and `aux` a left inverse; for cokernels `map` is the
/// projection and `aux` a linear section.
struct SubResult {
  Mod module;
  ModMap map;
  Mat aux;
};

enum class Part { Kernel, Image, Cokernel };
SubResult subquotient(const ModMap& f, Part part);
/// Submodule spanned by the (R-stable) column space of `span`.
SubResult submodule(const Mod& m, const Mat& span);
SubResult quotient(const Mod& m, const Mat& span);
/// Smallest submodule containing the columns of `gens`, as column basis.
Mat generated_submodule(const Mod& m, const Mat& gens);
/// Column basis of r M summed over r in `elements`.
Mat image_under(const Mod& m, const std::vector<Vec>& elements);
/// f viewed as a map onto its image.
ModMap corestrict(const ModMap& f, const SubResult& sub_of_target);

/// Hom_R(M, N) by one dense intertwining solve; deterministic basis order.
std::vector<ModMap> hom_space(const Mod& m, const Mod& n);
std::size_t hom_dim(const Mod& m, const Mod& n);

struct STorsionWitness {
  bool verdict = false;
  std::optional<Vec> s;
  std::string detail;
};

STorsionWitness is_uniformly_s_torsion(const Mod& t, const MultSet& s);

struct PositionVerdict {
  bool ok = false;
  std::optional<Vec> s;
  std::string failure;
};

struct SExactReport {
  std::vector<PositionVerdict> positions;
  bool passed() const;
  std::string summary(const FiniteAlgebra& ring) const;
};

SExactReport s_exactness_check(const std::vector<ModMap>& chain, const MultSet& s);
/// The chain 0 -> A -> B -> C -> 0.
std::vector<ModMap> short_chain(const ModMap& f, const ModMap& g);

struct SIsoVerdict {
  STorsionWitness kernel;
  STorsionWitness cokernel;
  bool verdict() const { return kernel.verdict && cokernel.verdict; }
};
SIsoVerdict is_s_isomorphism(const ModMap& f, const MultSet& s);

struct SIsoInverse {
  ModMap g;
  Vec s;
};
/// g with f g = s Id and g f = s Id for the first such s; NotSIso when f is
/// not an S-isomorphism.
SIsoInverse s_iso_inverse(const ModMap& f, const MultSet& s);

Mod character_dual(const Mod& m);
ModMap dual_map(const ModMap& f);

/// A surjection from a free module with a linear section.
struct Cover {
  Mod free;
  ModMap map;    // free -> target
  Mat section;   // map.matrix * section == I
  std::size_t rank() const { return free_rank(free); }
};

enum class CoverStyle { Minimal, Plain, SeededRandom };
Cover free_cover(const Mod& m, CoverStyle style, std::uint64_t seed = 0);

/// Free presentation F1 -> F0 -> M -> 0 (relations need not be minimal).
struct Presentation {
  Cover cover;
  ModMap relations;  // F1 -> F0
};
Presentation presentation(const Mod& m);

/// Hom_R(M, N) via a presentation of M: X in N^g with pullback(rel) X = 0.
class MapSpace {
 public:
  MapSpace(const Presentation& pres, const Mod& target);
  std::size_t dim() const { return basis_.cols(); }
  /// Coordinates in N^g of the basis maps.
  const Mat& basis() const { return basis_; }
  ModMap realize(const Vec& generator_images) const;
  std::vector<ModMap> maps() const;

 private:
  Presentation pres_;
  Mod target_;
  Mat basis_;
};

/// Invariant used by oracles: dims of ker(r) on M for every r in R.
std::vector<std::size_t> kernel_profile(const Mod& m);
/// An isomorphism M -> N if one is found (exhaustive on small Hom spaces,
/// randomized otherwise).
std::optional<ModMap> find_isomorphism(const Mod& m, const Mod& n, std::uint64_t seed = 0);
bool is_bijective(const ModMap& f);

/// Deterministic generator: splitmix64 seeding, raw 64-bit draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }
  Fp field(Fp p) { return static_cast<Fp>(below(p)); }
  Vec vec(Fp p, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Cokernel of a random R^k -> R^r with r <= 2 and dimension at most `cap`.
Mod random_module(const Ring& ring, Rng& rng, std::size_t cap = 6);

}  // namespace shom
