#include "fp_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace shom {

Fp fp_inv(Fp a, Fp p) {
  require(a % p != 0, ErrorCode::InternalInvariantViolation, "inverse of zero in F_p");
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return fp_reduce(t, p);
}

Fp fp_reduce(long long v, Fp p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<Fp>(m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Mat Mat::identity(Fp p, std::size_t n) {
  Mat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

Mat Mat::from_columns(Fp p, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Mat Mat::column(Fp p, std::span<const Fp> v) {
  Mat m(p, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
  return m;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  Mat m(a.p_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  Mat m(a.p_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks) {
  std::size_t r = 0, c = 0;
  Fp p = blocks.empty() ? 2 : blocks.front().p_;
  for (const auto& b : blocks) {
    r += b.rows_;
    c += b.cols_;
  }
  Mat m(p, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return m;
}

Mat Mat::repeat_diag(const Mat& block, std::size_t n) {
  Mat m(block.p_, block.rows_ * n, block.cols_ * n);
  for (std::size_t i = 0; i < n; ++i) m.set_block(i * block.rows_, i * block.cols_, block);
  return m;
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_col(std::size_t c, std::span<const Fp> v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r] % p_;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat m(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat m(p_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

bool Mat::is_zero() const {
  for (Fp v : data_)
    if (v != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat m(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Mat Mat::scaled(Fp k) const {
  Mat m = *this;
  for (Fp& v : m.data_) v = fp_mul(v, k % p_, p_);
  return m;
}

Vec Mat::apply(std::span<const Fp> v) const {
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{(*this)(r, c)} * v[c];
    out[r] = static_cast<Fp>(acc % p_);
  }
  return out;
}

void Mat::add_scaled(const Mat& other, Fp k) {
  k %= p_;
  if (k == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = static_cast<Fp>((data_[i] + std::uint64_t{other.data_[i]} * k) % p_);
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat m(a.p_, a.rows_, b.cols_);
  const Fp p = a.p_;
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fp x = a(r, k);
      if (x == 0) continue;
      const Fp* brow = b.data_.data() + k * b.cols_;
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] += std::uint64_t{x} * brow[c];
      if ((k & 0xff) == 0xff)
        for (auto& v : acc) v %= p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) = static_cast<Fp>(acc[c] % p);
  }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat m = a;
  m.add_scaled(b, 1);
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat m = a;
  m.add_scaled(b, a.p_ - 1);
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(const Mat& a, bool with_transform) {
  const Fp p = a.prime();
  Echelon e{a, {}, with_transform ? Mat::identity(p, a.rows()) : Mat()};
  Mat& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
      if (with_transform)
        for (std::size_t c = 0; c < e.transform.cols(); ++c) std::swap(e.transform(piv, c), e.transform(row, c));
    }
    const Fp inv = fp_inv(m(row, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = fp_mul(m(row, c), inv, p);
    if (with_transform)
      for (std::size_t c = 0; c < e.transform.cols(); ++c) e.transform(row, c) = fp_mul(e.transform(row, c), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Fp k = fp_neg(m(r, col), p);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = static_cast<Fp>((m(r, c) + std::uint64_t{k} * m(row, c)) % p);
      if (with_transform)
        for (std::size_t c = 0; c < e.transform.cols(); ++c)
          e.transform(r, c) = static_cast<Fp>((e.transform(r, c) + std::uint64_t{k} * e.transform(row, c)) % p);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Mat& a) { return row_reduce(a).pivots.size(); }

Mat kernel(const Mat& a) {
  const Fp p = a.prime();
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(a.cols(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = fp_neg(e.reduced(i, f), p);
    basis.push_back(std::move(x));
  }
  return Mat::from_columns(p, a.cols(), basis);
}

Mat column_basis(const Mat& a) { return a.select_cols(row_reduce(a).pivots); }

Mat complement_basis(const Mat& basis) {
  const Fp p = basis.prime();
  const std::size_t n = basis.rows();
  Mat ext = Mat::hcat(basis, Mat::identity(p, n));
  std::vector<std::size_t> extra;
  for (auto c : row_reduce(ext).pivots)
    if (c >= basis.cols()) extra.push_back(c - basis.cols());
  Mat out(p, n, extra.size());
  for (std::size_t i = 0; i < extra.size(); ++i) out(extra[i], i) = 1;
  return out;
}

Mat left_inverse(const Mat& basis) {
  const Fp p = basis.prime();
  // Rows of the transform matching pivot rows give coordinates.
  Echelon e = row_reduce(basis, true);
  require(e.pivots.size() == basis.cols(), ErrorCode::InternalInvariantViolation,
          "left_inverse of a matrix with dependent columns");
  Mat out(p, basis.cols(), basis.rows());
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t c = 0; c < basis.rows(); ++c) out(i, c) = e.transform(i, c);
  return out;
}

bool in_column_space(const Mat& basis, std::span<const Fp> v) {
  if (basis.cols() == 0) {
    for (Fp x : v)
      if (x != 0) return false;
    return true;
  }
  return rank(Mat::hcat(basis, Mat::column(basis.prime(), v))) == rank(basis);
}

bool column_space_contains(const Mat& big, const Mat& small) {
  if (small.cols() == 0) return true;
  if (big.cols() == 0) return small.is_zero();
  return rank(Mat::hcat(big, small)) == rank(big);
}

Mat canonical_span(const Mat& columns) {
  Echelon e = row_reduce(columns.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), columns.rows());
}

Solver::Solver(const Mat& a) : p_(a.prime()), cols_(a.cols()) {
  // Independent rows of a, then pivot columns within them; the square
  // submatrix on those rows and columns is inverted once.
  std::vector<std::size_t> rows = row_reduce(a.transpose()).pivots;
  Mat sub(p_, rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) sub(i, c) = a(rows[i], c);
  pivots_ = row_reduce(sub).pivots;
  Mat square = sub.select_cols(pivots_);
  Mat inv = left_inverse(square);
  // transform_ maps b (full length) to the pivot unknowns.
  transform_ = Mat(p_, rows.size(), a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) transform_(i, rows[j]) = inv(i, j);
  check_ = a;
}

std::optional<Vec> Solver::solve(std::span<const Fp> b) const {
  Vec y = transform_.apply(b);
  Vec x(cols_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  Vec ax = check_.apply(x);
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != b[i] % p_) return std::nullopt;
  return x;
}

std::optional<Mat> Solver::solve(const Mat& b) const {
  Mat out(p_, cols_, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto x = solve(b.col(c));
    if (!x) return std::nullopt;
    out.set_col(c, *x);
  }
  return out;
}

}  // namespace shom
