#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fp_matrix.hpp"

namespace shom {

/// A finite commutative F_p-algebra presented by a basis and structure
/// constants. Validated on construction: commutative, associative, and with a
/// two-sided unit. Immutable afterwards.
class FiniteAlgebra {
 public:
  /// `table[i * d + j]` holds the coefficients of e_i * e_j.
  static FiniteAlgebra build(Fp p, std::vector<std::string> labels, std::vector<Vec> table, Vec unit);

  Fp prime() const { return p_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec zero() const { return Vec(dim(), 0); }
  Vec basis_vector(std::size_t i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec pow(const Vec& x, std::uint64_t k) const;
  bool is_zero(const Vec& x) const;

  /// Matrix of x -> e_i * x on the basis.
  const Mat& regular(std::size_t i) const { return regular_[i]; }
  Mat regular_matrix(const Vec& x) const;

  /// p^dim, or nullopt when the ring is too large to enumerate.
  std::optional<std::uint64_t> cardinality() const;
  /// All elements in canonical order.
  std::vector<Vec> elements() const;

  /// The F_p-linear Frobenius x -> x^p.
  Mat frobenius() const;
  /// Nilradical (= Jacobson radical) as column basis.
  Mat radical() const;
  /// Primitive idempotents, in canonical order; they sum to 1.
  std::vector<Vec> primitive_idempotents() const;

  std::string format(const Vec& x) const;
  Vec parse_element(const std::string& text) const;

  bool same_as(const FiniteAlgebra& other) const;

 private:
  Fp p_ = 2;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;
  Vec unit_;
  std::vector<Mat> regular_;
  std::shared_ptr<std::vector<Vec>> idempotents_;

  friend std::shared_ptr<const FiniteAlgebra> make_ring(FiniteAlgebra alg);
};

using Ring = std::shared_ptr<const FiniteAlgebra>;

Ring make_ring(FiniteAlgebra alg);

/// Canonical element order: the unit first, then lexicographic on coefficient
/// vectors. All witness searches scan in this order.
bool canonical_less(const FiniteAlgebra& r, const Vec& a, const Vec& b);

namespace rings {
Ring prime_field(Fp p);
/// F_p[t]/(t^k) on the basis 1, t, ..., t^{k-1}.
Ring truncated_polynomial(Fp p, std::size_t k, const std::string& var = "t");
Ring product(const Ring& a, const Ring& b);
/// The ring (Z2 x Z2)[x]/<sx, x^2> with s = (1,0), on the basis e1, e2, f.
Ring example36();
}  // namespace rings

/// A multiplicative subset, stored as its full closure in canonical order.
class MultSet {
 public:
  static MultSet closure(const Ring& ring, const std::vector<Vec>& seeds);
  /// Takes an explicit list and verifies it contains 1 and is closed.
  static MultSet from_elements(const Ring& ring, std::vector<Vec> elements);

  const Ring& ring() const { return ring_; }
  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Vec& x) const;
  bool contains_zero() const { return contains_zero_; }
  bool is_subset_of(const MultSet& other) const;
  /// Closure check used as a validator.
  bool is_multiplicatively_closed() const;

 private:
  Ring ring_;
  std::vector<Vec> elements_;
  bool contains_zero_ = false;
};

struct Ideal {
  Mat basis;  // d x k, columns in canonical (reduced) form
  bool prime = false;
  bool maximal = false;

  std::size_t dim() const { return basis.cols(); }
  bool contains(const Vec& x) const;
};

using IdealList = std::vector<Ideal>;

IdealList enumerate_ideals(const Ring& ring);
Mat ideal_generated(const FiniteAlgebra& ring, const std::vector<Vec>& gens);
MultSet complement_multset(const Ring& ring, const Ideal& prime);

/// R/I with its projection matrix (dim(R/I) x dim R).
struct Quotient {
  Ring ring;
  Mat projection;
};
Quotient quotient_ring(const Ring& ring, const Mat& ideal_basis);

}  // namespace shom
