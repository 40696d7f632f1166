#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sdim.hpp"

namespace shom {

using BigInt = boost::multiprecision::cpp_int;

class ZMat {
 public:
  ZMat() = default;
  ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ZMat identity(std::size_t n);
  static ZMat from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols = 0);
  static ZMat hcat(const ZMat& a, const ZMat& b);
  /// Kronecker product with an identity on the right: a (x) I_n.
  static ZMat kron_identity(const ZMat& a, std::size_t n);
  /// I_n (x) a.
  static ZMat identity_kron(std::size_t n, const ZMat& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<BigInt> col(std::size_t c) const;
  ZMat cols_range(std::size_t c0, std::size_t n) const;
  ZMat rows_range(std::size_t r0, std::size_t n) const;
  ZMat transpose() const;
  bool is_zero() const;
  /// Entries reduced into [0, m); columns that become zero are dropped.
  ZMat reduced_mod(const BigInt& m) const;

  friend ZMat operator*(const ZMat& a, const ZMat& b);
  friend bool operator==(const ZMat& a, const ZMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// U A V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct Snf {
  ZMat u, u_inv, d, v;
  std::size_t rank = 0;
  std::vector<BigInt> diagonal() const;
};
Snf snf(const ZMat& a);

/// Integer kernel basis (columns).
ZMat z_kernel(const ZMat& a);
/// A basis of the lattice spanned by the columns.
ZMat lattice_basis(const ZMat& gens);

/// Z (m = 0) or Z/m.
struct ZRing {
  BigInt m = 0;
  bool integers() const { return m == 0; }
  std::string name() const;
  bool operator==(const ZRing& o) const { return m == o.m; }
};

/// Z^g modulo the columns of `rel` (and m Z^g over Z/m).
struct ZMod {
  ZRing ring;
  std::size_t gens = 0;
  ZMat rel;  // gens x k

  static ZMod cyclic(const ZRing& ring, const BigInt& d);
  static ZMod from_factors(const ZRing& ring, const std::vector<BigInt>& factors);
  /// Relations including m Id.
  ZMat full_relations() const;
  /// Non-unit invariant factors, ascending, free summands as 0 at the end.
  std::vector<BigInt> invariant_factors() const;
  bool finite() const;
  bool is_zero() const { return invariant_factors().empty(); }
  /// Largest invariant factor (1 for the zero module); requires finite().
  BigInt exponent() const;
  std::string str() const;
};

/// Multiplicative set generated by nonzero integers (or residues over Z/m).
struct ZMultSet {
  ZRing ring;
  std::vector<BigInt> generators;
  bool contains(const BigInt& x) const;
  std::string str() const;
};

struct ZTorsion {
  bool verdict = false;
  BigInt s = 1;
  std::vector<unsigned> exponents;  // per generator
  std::string expression;           // e.g. "2^3" or "1"
  std::string detail;
};

/// Decides whether a single element of S kills X by BFS over the image of
/// the monoid in Z/e, e the exponent of X.
ZTorsion z_uniform_torsion(const ZMod& x, const ZMultSet& s);

/// Boundary matrices d_1..d_depth of a free resolution; d_1 is the
/// presentation. Over Z/m kernels come from the lift [d | m Id].
std::vector<ZMat> z_resolution(const ZMod& m, std::size_t depth);
ZMod z_ext(const ZMod& m, const ZMod& n, std::size_t degree);
/// Ext from given boundary matrices (at least degree + 1 of them).
ZMod z_ext_from_resolution(const ZMod& m, const std::vector<ZMat>& ds, const ZMod& n, std::size_t degree);
/// Throws InvalidInput unless ds is a resolution of m.
void check_z_resolution(const ZMod& m, const std::vector<ZMat>& ds);

struct ZDimResult {
  Dim value;
  std::optional<ZTorsion> witness;
  std::vector<std::string> failures;
};

/// Syzygy walk: K_i is S-projective iff some s kills Ext^1(K_i, K_{i+1}),
/// the group holding the class of the cover sequence.
ZDimResult z_s_pd(const ZMod& m, const ZMultSet& s, std::size_t bound);

/// Whether some element of S is divisible by a, by BFS modulo a.
std::optional<ZTorsion> divisible_element(const ZMultSet& s, const BigInt& a);
ZMultSet reduce_multset(const ZMultSet& s, const BigInt& a);
/// A Z/a-module viewed over Z.
ZMod lift_to_integers(const ZMod& m);

struct FactorRingReport {
  BigInt a;
  Dim over_z;         // S-pd over Z
  Dim over_quotient;  // S-bar-pd over Z/a
  Verdict verdict = Verdict::Vacuous;
  std::string message;
};

/// The +1 shift S-pd_Z(M) = S-bar-pd_{Z/a}(M) + 1 for a nonzero Z/a-module M.
/// DividesS when some element of S is divisible by a.
FactorRingReport factor_ring_check(const BigInt& a, const ZMod& m, const ZMultSet& s, std::size_t bound);

/// Change of rings along Z -> Z/a.
ChangeOfRingsReport z_change_of_rings_check(const BigInt& a, const ZMod& m, const ZMultSet& s, std::size_t bound);

/// A random nonzero finite Z/a-module on at most `gens` generators.
ZMod random_z_module(const BigInt& a, Rng& rng, std::size_t gens = 3);

}  // namespace shom
