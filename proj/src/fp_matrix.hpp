#pragma once

// Dense matrices over a prime field F_p and the elimination routines every
// module computation reduces to.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shom {

using Fp = std::uint32_t;
using Vec = std::vector<Fp>;

inline Fp fp_add(Fp a, Fp b, Fp p) { return static_cast<Fp>((std::uint64_t{a} + b) % p); }
inline Fp fp_sub(Fp a, Fp b, Fp p) { return static_cast<Fp>((std::uint64_t{a} + p - b) % p); }
inline Fp fp_mul(Fp a, Fp b, Fp p) { return static_cast<Fp>((std::uint64_t{a} * b) % p); }
inline Fp fp_neg(Fp a, Fp p) { return a == 0 ? 0 : p - a; }
Fp fp_inv(Fp a, Fp p);
Fp fp_reduce(long long v, Fp p);

bool is_prime(std::uint64_t n);

class Mat {
 public:
  Mat() = default;
  Mat(Fp p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(Fp p, std::size_t n);
  static Mat from_columns(Fp p, std::size_t rows, const std::vector<Vec>& cols);
  static Mat column(Fp p, std::span<const Fp> v);
  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);
  static Mat block_diag(const std::vector<Mat>& blocks);
  // n copies of `block` on the diagonal.
  static Mat repeat_diag(const Mat& block, std::size_t n);

  Fp prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const Fp> v);

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  Mat select_cols(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  Mat transpose() const;
  Mat scaled(Fp k) const;
  Vec apply(std::span<const Fp> v) const;

  void add_scaled(const Mat& other, Fp k);  // this += k * other

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<Fp>& data() const { return data_; }
  std::string to_string() const;

 private:
  Fp p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

struct Echelon {
  Mat reduced;                       // reduced row echelon form of the input
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  Mat transform;                     // transform * input == reduced (only when requested)
};

Echelon row_reduce(const Mat& a, bool with_transform = false);
std::size_t rank(const Mat& a);

// Columns form a basis of {x : a x = 0}, in order of the free columns.
Mat kernel(const Mat& a);
// Subset of a's columns forming a basis of its column space.
Mat column_basis(const Mat& a);
// Standard basis vectors extending the column space of `basis` to the full space.
Mat complement_basis(const Mat& basis);
// For a matrix with independent columns, L with L * basis == I.
Mat left_inverse(const Mat& basis);
bool in_column_space(const Mat& basis, std::span<const Fp> v);
bool column_space_contains(const Mat& big, const Mat& small);
// Canonical key of the column space: reduced echelon form of the transpose.
Mat canonical_span(const Mat& columns);

// Factors a once; solves a x = b for many right-hand sides.
class Solver {
 public:
  explicit Solver(const Mat& a);
  std::optional<Vec> solve(std::span<const Fp> b) const;
  std::optional<Mat> solve(const Mat& b) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t unknowns() const { return cols_; }

 private:
  Fp p_;
  std::size_t cols_;
  Mat transform_;
  Mat check_;
  std::vector<std::size_t> pivots_;
};

}  // namespace shom
