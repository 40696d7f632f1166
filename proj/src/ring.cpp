#include "ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace shom {

namespace {

constexpr std::uint64_t kMaxEnumerable = 1u << 20;

std::string triple_name(const std::vector<std::string>& l, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + l[i] + ", " + l[j] + ", " + l[k] + ")";
}

}  // namespace

FiniteAlgebra FiniteAlgebra::build(Fp p, std::vector<std::string> labels, std::vector<Vec> table, Vec unit) {
  require(is_prime(p) && p < (1u << 16), ErrorCode::NotPrimeChar,
          "characteristic " + std::to_string(p) + " is not a supported prime");
  const std::size_t d = labels.size();
  require(d > 0, ErrorCode::InvalidInput, "algebra needs a nonempty basis");
  require(table.size() == d * d, ErrorCode::InvalidInput, "multiplication table must have d*d entries");
  require(unit.size() == d, ErrorCode::InvalidInput, "unit must have length d");
  for (auto& v : table) {
    require(v.size() == d, ErrorCode::InvalidInput, "product coefficient vectors must have length d");
    for (auto& c : v) c %= p;
  }
  for (auto& c : unit) c %= p;

  FiniteAlgebra a;
  a.p_ = p;
  a.labels_ = std::move(labels);
  a.table_ = std::move(table);
  a.unit_ = std::move(unit);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (a.table_[i * d + j] != a.table_[j * d + i])
        fail(ErrorCode::NonCommutative, a.labels_[i] + "*" + a.labels_[j] + " != " + a.labels_[j] + "*" + a.labels_[i]);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec left = a.mul(a.table_[i * d + j], a.basis_vector(k));
        Vec right = a.mul(a.basis_vector(i), a.table_[j * d + k]);
        if (left != right)
          fail(ErrorCode::NonAssociative, "(ab)c != a(bc) at basis triple " + triple_name(a.labels_, i, j, k));
      }

  for (std::size_t i = 0; i < d; ++i)
    if (a.mul(a.unit_, a.basis_vector(i)) != a.basis_vector(i))
      fail(ErrorCode::BadUnit, "unit * " + a.labels_[i] + " != " + a.labels_[i]);

  a.regular_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Mat m(p, d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_col(j, a.table_[i * d + j]);
    a.regular_.push_back(std::move(m));
  }
  return a;
}

Vec FiniteAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  std::vector<std::uint64_t> acc(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{x[i]} * y[j] % p_;
      const Vec& prod = table_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) acc[k] += c * prod[k];
    }
  }
  Vec out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = static_cast<Fp>(acc[k] % p_);
  return out;
}

Vec FiniteAlgebra::add(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = fp_add(x[k], y[k], p_);
  return out;
}

Vec FiniteAlgebra::pow(const Vec& x, std::uint64_t k) const {
  Vec result = unit_, base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteAlgebra::is_zero(const Vec& x) const {
  return std::all_of(x.begin(), x.end(), [](Fp c) { return c == 0; });
}

Mat FiniteAlgebra::regular_matrix(const Vec& x) const {
  Mat m(p_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(regular_[i], x[i]);
  return m;
}

std::optional<std::uint64_t> FiniteAlgebra::cardinality() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    n *= p_;
    if (n > kMaxEnumerable) return std::nullopt;
  }
  return n;
}

std::vector<Vec> FiniteAlgebra::elements() const {
  auto n = cardinality();
  require(n.has_value(), ErrorCode::BackendUnsupported, "ring too large to enumerate");
  std::vector<Vec> out;
  out.reserve(*n);
  Vec v(dim(), 0);
  for (std::uint64_t idx = 0; idx < *n; ++idx) {
    out.push_back(v);
    for (std::size_t k = dim(); k-- > 0;) {
      if (++v[k] < p_) break;
      v[k] = 0;
    }
  }
  std::stable_sort(out.begin(), out.end(), [this](const Vec& a, const Vec& b) { return canonical_less(*this, a, b); });
  return out;
}

Mat FiniteAlgebra::frobenius() const {
  Mat m(p_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, pow(basis_vector(j), p_));
  return m;
}

Mat FiniteAlgebra::radical() const {
  // x^(p^k) = 0 exactly for nilpotent x once p^k >= dim.
  Mat phi = frobenius();
  Mat acc = phi;
  std::uint64_t power = p_;
  while (power < dim()) {
    acc = phi * acc;
    power *= p_;
  }
  return kernel(acc);
}

std::vector<Vec> FiniteAlgebra::primitive_idempotents() const {
  if (idempotents_) return *idempotents_;
  std::vector<Vec> idem;
  for (const Vec& x : elements())
    if (!is_zero(x) && mul(x, x) == x) idem.push_back(x);
  std::vector<Vec> prim;
  for (const Vec& e : idem) {
    bool primitive = true;
    for (const Vec& f : idem)
      if (f != e && mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) prim.push_back(e);
  }
  return prim;
}

std::string FiniteAlgebra::format(const Vec& x) const {
  if (x == unit_) return "1";
  if (is_zero(x)) return "0";
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (x[i] != 1) out += std::to_string(x[i]);
    out += labels_[i];
  }
  return out;
}

Vec FiniteAlgebra::parse_element(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  for (std::size_t i = 0; i < dim(); ++i)
    if (s == labels_[i]) return basis_vector(i);
  if (s == "1") return unit_;
  if (s == "0") return zero();
  Vec out = zero();
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::size_t pos = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    Fp coef = pos ? static_cast<Fp>(std::stoul(term.substr(0, pos)) % p_) : 1;
    std::string lab = term.substr(pos);
    Vec v;
    if (lab.empty()) {
      v = unit_;
    } else {
      auto it = std::find(labels_.begin(), labels_.end(), lab);
      if (it == labels_.end()) {
        require(lab == "1", ErrorCode::InvalidInput, "unknown basis label '" + lab + "' in element '" + text + "'");
        v = unit_;
      } else {
        v = basis_vector(static_cast<std::size_t>(it - labels_.begin()));
      }
    }
    for (std::size_t k = 0; k < dim(); ++k) out[k] = fp_add(out[k], fp_mul(coef, v[k], p_), p_);
  }
  return out;
}

bool FiniteAlgebra::same_as(const FiniteAlgebra& o) const {
  return p_ == o.p_ && labels_ == o.labels_ && table_ == o.table_ && unit_ == o.unit_;
}

Ring make_ring(FiniteAlgebra alg) {
  auto r = std::make_shared<FiniteAlgebra>(std::move(alg));
  if (r->cardinality()) {
    // Cached eagerly so the shared ring stays immutable afterwards.
    auto idem = r->primitive_idempotents();
    r->idempotents_ = std::make_shared<std::vector<Vec>>(std::move(idem));
  }
  return r;
}

bool canonical_less(const FiniteAlgebra& r, const Vec& a, const Vec& b) {
  const bool ua = a == r.unit(), ub = b == r.unit();
  if (ua != ub) return ua;
  return a < b;
}

namespace rings {

Ring prime_field(Fp p) { return make_ring(FiniteAlgebra::build(p, {"1"}, {Vec{1}}, Vec{1})); }

Ring truncated_polynomial(Fp p, std::size_t k, const std::string& var) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<Vec> table(k * k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j < k) table[i * k + j][i + j] = 1;
  Vec unit(k, 0);
  unit[0] = 1;
  return make_ring(FiniteAlgebra::build(p, std::move(labels), std::move(table), std::move(unit)));
}

Ring product(const Ring& a, const Ring& b) {
  require(a->prime() == b->prime(), ErrorCode::InvalidInput, "product of algebras of different characteristic");
  const std::size_t da = a->dim(), db = b->dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b->labels()) labels.push_back("(0," + l + ")");
  std::vector<Vec> table(d * d, Vec(d, 0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) table[i * d + j][k] = a->product(i, j)[k];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) table[(da + i) * d + da + j][da + k] = b->product(i, j)[k];
  Vec unit(d, 0);
  for (std::size_t k = 0; k < da; ++k) unit[k] = a->unit()[k];
  for (std::size_t k = 0; k < db; ++k) unit[da + k] = b->unit()[k];
  return make_ring(FiniteAlgebra::build(a->prime(), std::move(labels), std::move(table), std::move(unit)));
}

Ring example36() {
  // e1 = (1,0), e2 = (0,1), f = image of x; sx = 0 forces e1 f = 0.
  std::vector<Vec> table(9, Vec(3, 0));
  auto set = [&](std::size_t i, std::size_t j, Vec v) {
    table[i * 3 + j] = v;
    table[j * 3 + i] = v;
  };
  set(0, 0, {1, 0, 0});
  set(1, 1, {0, 1, 0});
  set(0, 1, {0, 0, 0});
  set(0, 2, {0, 0, 0});
  set(1, 2, {0, 0, 1});
  set(2, 2, {0, 0, 0});
  return make_ring(FiniteAlgebra::build(2, {"e1", "e2", "f"}, std::move(table), {1, 1, 0}));
}

}  // namespace rings

MultSet MultSet::closure(const Ring& ring, const std::vector<Vec>& seeds) {
  std::set<Vec> seen{ring->unit()};
  std::vector<Vec> order{ring->unit()};
  for (const Vec& s : seeds) {
    require(s.size() == ring->dim(), ErrorCode::InvalidInput, "multiplicative set seed has wrong length");
    Vec r(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) r[k] = s[k] % ring->prime();
    if (seen.insert(r).second) order.push_back(r);
  }
  // Fixpoint: multiply every element by every generator until nothing new appears.
  std::vector<Vec> gens = order;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const Vec& g : gens) {
      Vec prod = ring->mul(order[i], g);
      if (seen.insert(prod).second) order.push_back(std::move(prod));
    }
  MultSet m;
  m.ring_ = ring;
  m.elements_ = std::move(order);
  std::sort(m.elements_.begin(), m.elements_.end(),
            [&](const Vec& a, const Vec& b) { return canonical_less(*ring, a, b); });
  m.contains_zero_ = seen.count(ring->zero()) > 0;
  return m;
}

MultSet MultSet::from_elements(const Ring& ring, std::vector<Vec> elements) {
  MultSet m;
  m.ring_ = ring;
  std::sort(elements.begin(), elements.end(), [&](const Vec& a, const Vec& b) { return canonical_less(*ring, a, b); });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  m.elements_ = std::move(elements);
  require(m.contains(ring->unit()), ErrorCode::InvalidInput, "multiplicative set must contain 1");
  require(m.is_multiplicatively_closed(), ErrorCode::InvalidInput, "multiplicative set is not closed under products");
  m.contains_zero_ = m.contains(ring->zero());
  return m;
}

bool MultSet::contains(const Vec& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x,
                            [&](const Vec& a, const Vec& b) { return canonical_less(*ring_, a, b); });
}

bool MultSet::is_subset_of(const MultSet& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const Vec& x) { return other.contains(x); });
}

bool MultSet::is_multiplicatively_closed() const {
  if (!contains(ring_->unit())) return false;
  for (const Vec& a : elements_)
    for (const Vec& b : elements_)
      if (!contains(ring_->mul(a, b))) return false;
  return true;
}

bool Ideal::contains(const Vec& x) const { return in_column_space(basis, x); }

Mat ideal_generated(const FiniteAlgebra& ring, const std::vector<Vec>& gens) {
  Mat span(ring.prime(), ring.dim(), 0);
  for (const Vec& g : gens) span = Mat::hcat(span, ring.regular_matrix(g));
  if (span.cols() == 0) return span;
  return canonical_span(span).transpose();
}

Quotient quotient_ring(const Ring& ring, const Mat& ideal_basis) {
  const Fp p = ring->prime();
  const std::size_t d = ring->dim();
  Mat basis = ideal_basis.cols() ? column_basis(ideal_basis) : Mat(p, d, 0);
  Mat comp = complement_basis(basis);
  require(comp.cols() > 0, ErrorCode::InvalidInput, "quotient by the whole ring");
  Mat full = Mat::hcat(basis, comp);
  Mat inv = left_inverse(full);
  Mat proj = inv.block(basis.cols(), 0, comp.cols(), d);

  const std::size_t q = comp.cols();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    Vec v = comp.col(a);
    labels.push_back("[" + ring->format(v) + "]");
  }
  std::vector<Vec> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = proj.apply(ring->mul(comp.col(a), comp.col(b)));
  Vec unit = proj.apply(ring->unit());
  return {make_ring(FiniteAlgebra::build(p, std::move(labels), std::move(table), std::move(unit))), proj};
}

namespace {

bool quotient_is_field(const Ring& ring, const Mat& basis) {
  if (basis.cols() == ring->dim()) return false;
  Ring q = quotient_ring(ring, basis).ring;
  for (const Vec& x : q->elements()) {
    if (q->is_zero(x)) continue;
    if (rank(q->regular_matrix(x)) != q->dim()) return false;
  }
  return true;
}

}  // namespace

IdealList enumerate_ideals(const Ring& ring) {
  const Fp p = ring->prime();
  const std::size_t d = ring->dim();
  std::map<std::vector<Fp>, Mat> found;  // canonical key -> basis columns
  auto key_of = [&](const Mat& cols) {
    Mat c = cols.cols() ? canonical_span(cols) : Mat(p, 0, d);
    std::vector<Fp> key = c.data();
    key.insert(key.begin(), static_cast<Fp>(c.rows()));
    return std::pair{key, c.transpose()};
  };
  for (const Vec& x : ring->elements()) {
    auto [key, basis] = key_of(ring->regular_matrix(x));
    found.emplace(std::move(key), std::move(basis));
  }
  // Every ideal is a sum of cyclic ones.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mat> current;
    for (auto& [k, b] : found) current.push_back(b);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        auto [key, basis] = key_of(Mat::hcat(current[i], current[j]));
        if (found.emplace(std::move(key), std::move(basis)).second) grew = true;
      }
  }
  IdealList out;
  for (auto& [k, b] : found) out.push_back(Ideal{b, false, false});
  std::stable_sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis.transpose().data() > b.basis.transpose().data();
  });
  for (auto& I : out) I.prime = quotient_is_field(ring, I.basis);
  for (auto& I : out) {
    if (I.dim() == d) continue;
    bool maximal = true;
    for (const auto& J : out)
      if (J.dim() > I.dim() && J.dim() < d && column_space_contains(J.basis, I.basis)) {
        maximal = false;
        break;
      }
    I.maximal = maximal;
  }
  return out;
}

MultSet complement_multset(const Ring& ring, const Ideal& prime) {
  std::vector<Vec> elems;
  for (const Vec& x : ring->elements())
    if (!prime.contains(x)) elems.push_back(x);
  MultSet m;
  try {
    m = MultSet::from_elements(ring, std::move(elems));
  } catch (const Error&) {
    fail(ErrorCode::NotPrime, "complement of the ideal is not multiplicatively closed");
  }
  return m;
}

}  // namespace shom
