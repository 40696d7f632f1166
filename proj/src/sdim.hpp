#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homology.hpp"

namespace shom {

enum class DimKind { Projective, Injective };

/// Certifies an S-split: for projectivity `map` is P -> F with cover o map =
/// s Id_P; for injectivity `map` is I -> E with map o cocover = s Id_E.
struct SplitWitness {
  DimKind kind = DimKind::Projective;
  Vec s;
  ModMap map;
  ModMap against;  // the cover F -> P or the cocover E -> I
  /// Re-checks the composite identity as an exact matrix equality.
  bool verify() const;
};

struct SplitSearch {
  std::optional<SplitWitness> witness;
  std::string failure;
  bool found() const { return witness.has_value(); }
};

SplitSearch is_s_projective(const Mod& p, const MultSet& s);
SplitSearch is_s_injective(const Mod& e, const MultSet& s);

/// A value in {0..bound} or ">bound".
struct Dim {
  std::optional<std::size_t> value;
  std::size_t bound = 0;

  static Dim exact(std::size_t v, std::size_t bound) { return {v, bound}; }
  static Dim beyond(std::size_t bound) { return {std::nullopt, bound}; }
  bool finite() const { return value.has_value(); }
  std::string str() const;
  bool operator==(const Dim& o) const { return value == o.value && (value || bound == o.bound); }
};

enum class Verdict { Pass, Fail, Vacuous };
const char* verdict_name(Verdict v);

/// Closed interval [lo, hi] of naturals, hi = nullopt for infinity. An exact
/// value n is [n, n]; ">bound" is [bound + 1, inf).
struct Interval {
  std::size_t lo = 0;
  std::optional<std::size_t> hi;
  static Interval of(const Dim& d);
  bool point() const { return hi && *hi == lo; }
};
Interval operator+(const Interval& a, std::size_t k);
Interval operator+(const Interval& a, const Interval& b);
Interval max_of(const Interval& a, const Interval& b);

Verdict leq(const Interval& a, const Interval& b);
Verdict less(const Interval& a, const Interval& b);
Verdict equal(const Interval& a, const Interval& b);
/// Implication: vacuous when the hypothesis is undecided, pass when it fails.
Verdict implies(Verdict hypothesis, Verdict conclusion);
Verdict both(Verdict a, Verdict b);

struct DimResult {
  DimKind kind = DimKind::Projective;
  Dim value;
  std::optional<SplitWitness> witness;  // at the terminating (co)syzygy
  std::vector<std::string> failures;    // one per level below the value
  std::optional<Dim> dual_route;        // s_id only: s_pd of the dual
};

DimResult s_pd(const Mod& m, const MultSet& s, std::size_t bound);
/// Direct cosyzygy walk; the dual route s_pd(D(M)) is computed alongside and a
/// disagreement throws InternalInvariantViolation.
DimResult s_id(const Mod& m, const MultSet& s, std::size_t bound);
/// The cosyzygy walk alone.
DimResult s_id_direct(const Mod& m, const MultSet& s, std::size_t bound);

Dim max_dim(const Dim& a, const Dim& b);

struct IdealDims {
  Ideal ideal;
  Dim pd;
  Dim id;
};

struct GlobalDimReport {
  Dim candidate;
  Dim sweep;  // from the cyclic modules alone
  std::vector<IdealDims> ideals;
  std::size_t trials = 0;
  std::size_t exceedances = 0;
  std::uint64_t seed = 0;
  /// The cyclic sweep is not known to compute the S-global dimension exactly.
  bool caveat = true;
};

GlobalDimReport s_gldim(const Ring& ring, const MultSet& s, std::size_t bound, std::size_t trials,
                        std::uint64_t seed);

struct SemisimpleReport {
  bool verdict = false;
  std::optional<Vec> s;
  std::vector<Vec> images;  // f_I(1) for each ideal, in enumeration order
  IdealList ideals;
  /// For each s tried without success, the first ideal index that failed.
  std::vector<std::pair<Vec, std::size_t>> failures;
};

SemisimpleReport is_s_semisimple(const Ring& ring, const MultSet& s);

struct LocalEntry {
  Ideal prime;
  Dim value;
};

struct LocalProfile {
  DimKind kind = DimKind::Projective;
  std::vector<LocalEntry> entries;
  Dim classical;
  Dim sup_primes;
  Dim sup_maximal;
  bool agrees = false;  // ">bound" on both sides counts as agreement
};

LocalProfile local_profile(const Mod& m, DimKind kind, std::size_t bound);

struct Assertion {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct InequalityReport {
  Dim pd_a, pd_b, pd_c, id_a, id_b, id_c;
  std::vector<Assertion> assertions;
  bool passed() const;
};

/// Exact-sequence inequalities for 0 -> A -f-> B -g-> C -> 0. With a retraction
/// r: B -> A satisfying r f = s Id_A the split equalities are also evaluated.
InequalityReport check_inequalities(const ModMap& f, const ModMap& g, const MultSet& s, std::size_t bound,
                                    const std::optional<ModMap>& retraction = std::nullopt);

struct ShiftReport {
  bool verdict = false;
  bool via_connecting = false;  // the connecting map itself is the S-isomorphism
  std::size_t lower = 0, upper = 0;
  std::size_t lower_dim = 0, upper_dim = 0;
  std::string detail;
};

/// Dimension shifting along 0 -> A -> B -> C -> 0.
/// Projective: B S-projective, Ext^{n+1}(A, N) ~_S Ext^{n+2}(C, N).
/// Injective: B S-injective, Ext^{n+1}(N, C) ~_S Ext^{n+2}(N, A).
/// MiddleNotCertified when B fails the certification.
ShiftReport dimension_shift_check(const ModMap& f, const ModMap& g, const Mod& n, std::size_t degree, DimKind kind,
                                  const MultSet& s);

/// A T-module viewed as an R-module along the quotient R -> T.
Mod restrict_scalars(const Mod& m, const Ring& ring, const Quotient& q);
/// Image of S under the quotient map.
MultSet image_multset(const MultSet& s, const Quotient& q);

struct ChangeOfRingsReport {
  Dim over_r;     // S-pd_R(M)
  Dim over_t;     // theta(S)-pd_T(M)
  Dim t_over_r;   // S-pd_R(T)
  Verdict verdict = Verdict::Pass;
};

/// The change-of-rings inequality for the quotient R -> R/I.
ChangeOfRingsReport change_of_rings_check(const Ring& ring, const Quotient& q, const Mod& m_over_t,
                                          const MultSet& s, std::size_t bound);

/// Runs fn(i) for i in [0, n) on a small pool of threads. Results must be
/// keyed by i so scheduling never changes the outcome.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace shom
