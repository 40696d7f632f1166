#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace shom;
using testkit::mult;

TEST_CASE("fp arithmetic and elimination") {
  CHECK(fp_inv(3, 7) == 5);
  CHECK(fp_reduce(-1, 5) == 4);
  Mat a(5, 2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 2;
  CHECK(rank(a) == 2);
  Mat k = kernel(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  Solver s(a);
  auto x = s.solve(Vec{1, 1});
  REQUIRE(x);
  CHECK(a.apply(*x) == Vec{1, 1});
}

TEST_CASE("left inverse and complement") {
  Mat b(3, 3, 2);
  b(0, 0) = 1; b(1, 0) = 2; b(2, 1) = 1; b(1, 1) = 1;
  Mat l = left_inverse(b);
  CHECK(l * b == Mat::identity(3, 2));
  Mat c = complement_basis(b);
  CHECK(c.cols() == 1);
  CHECK(rank(Mat::hcat(b, c)) == 3);
}

TEST_CASE("example ring builds and multiplies") {
  Ring r = rings::example36();
  CHECK(r->dim() == 3);
  Vec e1 = r->parse_element("e1"), e2 = r->parse_element("e2"), f = r->parse_element("f");
  CHECK(r->mul(e1, e1) == e1);
  CHECK(r->mul(e2, f) == f);
  CHECK(r->is_zero(r->mul(e1, f)));
  CHECK(r->format(r->unit()) == "1");
  CHECK(r->format(r->add(e2, f)) == "e2+f");
}

TEST_CASE("validator names the violation") {
  std::vector<Vec> table(9, Vec(3, 0));
  table[0] = {1, 0, 0};
  table[4] = {0, 1, 0};
  table[5] = {0, 0, 1};  // e2 f = f
  table[7] = {0, 0, 0};  // f e2 = 0
  try {
    FiniteAlgebra::build(2, {"e1", "e2", "f"}, table, {1, 1, 0});
    FAIL("expected NonCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommutative);
    CHECK(std::string(e.what()).find("e2*f") != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteAlgebra::build(4, {"1"}, {Vec{1}}, Vec{1}), Error);
  try {
    FiniteAlgebra::build(2, {"a"}, {Vec{1}}, Vec{0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadUnit);
  }
  // Non-associative: basis {1, x, y} with x*x = y, x*y = 0, y*y = y.
  std::vector<Vec> t2(9, Vec(3, 0));
  auto set = [&](int i, int j, Vec v) { t2[i * 3 + j] = v; t2[j * 3 + i] = v; };
  set(0, 0, {1, 0, 0}); set(0, 1, {0, 1, 0}); set(0, 2, {0, 0, 1});
  set(1, 1, {0, 0, 1}); set(1, 2, {0, 0, 0}); set(2, 2, {0, 0, 1});
  try {
    FiniteAlgebra::build(2, {"1", "x", "y"}, t2, {1, 0, 0});
    FAIL("expected NonAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAssociative);
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("canonical order puts the unit first") {
  Ring r = rings::example36();
  auto el = r->elements();
  CHECK(el.size() == 8);
  CHECK(el.front() == r->unit());
  for (std::size_t i = 2; i < el.size(); ++i) CHECK(el[i - 1] < el[i]);
}

TEST_CASE("multiplicative closure") {
  Ring r = rings::example36();
  MultSet s = mult(r, {"e1"});
  CHECK(s.size() == 2);
  CHECK(s.elements()[0] == r->unit());
  CHECK(s.elements()[1] == r->parse_element("e1"));
  CHECK(mult(r, {}).size() == 1);
  MultSet z = mult(rings::prime_field(2), {"0"});
  CHECK(z.size() == 2);
  CHECK(z.contains_zero());
  for (const Ring& ring : testkit::bundled_rings()) {
    auto el = ring->elements();
    for (std::size_t i = 0; i < el.size(); i += 3) {
      MultSet m = MultSet::closure(ring, {el[i]});
      CHECK(m.is_multiplicatively_closed());
    }
  }
}

TEST_CASE("ideal enumeration matches brute force") {
  for (const Ring& r : testkit::bundled_rings()) {
    if (r->elements().size() > 16) continue;
    IdealList ideals = enumerate_ideals(r);
    CHECK(ideals.size() == oracle::count_ideals_bruteforce(*r));
  }
  Ring e = rings::example36();
  IdealList ideals = enumerate_ideals(e);
  CHECK(ideals.size() == 6);
  std::size_t maximal = 0, prime = 0;
  for (const auto& i : ideals) {
    maximal += i.maximal;
    prime += i.prime;
    if (i.maximal) CHECK(i.prime);
  }
  CHECK(maximal == 2);
  CHECK(prime == 2);
  CHECK(enumerate_ideals(rings::prime_field(2)).size() == 2);
  CHECK(enumerate_ideals(rings::truncated_polynomial(2, 2)).size() == 3);
}

TEST_CASE("ideal lattice is closed under sum and intersection") {
  for (const Ring& r : testkit::bundled_rings()) {
    IdealList ideals = enumerate_ideals(r);
    auto listed = [&](const Mat& basis) {
      Mat key = basis.cols() ? canonical_span(basis) : Mat(r->prime(), 0, r->dim());
      for (const auto& i : ideals) {
        Mat k2 = i.basis.cols() ? canonical_span(i.basis) : Mat(r->prime(), 0, r->dim());
        if (k2 == key) return true;
      }
      return false;
    };
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        CHECK(listed(Mat::hcat(a.basis, b.basis)));
        // Intersection: vectors in the span of a whose coordinates also land in b.
        std::vector<Vec> inter;
        for (const Vec& x : r->elements())
          if (a.contains(x) && b.contains(x)) inter.push_back(x);
        CHECK(listed(Mat::from_columns(r->prime(), r->dim(), inter)));
      }
  }
}

TEST_CASE("prime complements") {
  Ring t = rings::truncated_polynomial(2, 2);
  for (const auto& i : enumerate_ideals(t)) {
    if (!i.prime) continue;
    MultSet c = complement_multset(t, i);
    CHECK(c.size() == 2);
    CHECK(c.contains(t->parse_element("1+t")));
  }
  Ring e = rings::example36();
  std::size_t seen = 0;
  for (const auto& i : enumerate_ideals(e)) {
    if (!i.prime) continue;
    MultSet c = complement_multset(e, i);
    CHECK(c.is_multiplicatively_closed());
    CHECK(c.size() == 4);
    ++seen;
  }
  CHECK(seen == 2);
  for (const auto& i : enumerate_ideals(e))
    if (!i.prime && i.dim() < e->dim()) CHECK_THROWS_AS(complement_multset(e, i), Error);
}

TEST_CASE("radical and idempotents") {
  Ring e = rings::example36();
  CHECK(e->radical().cols() == 1);
  auto idem = e->primitive_idempotents();
  CHECK(idem.size() == 2);
  Vec sum = e->add(idem[0], idem[1]);
  CHECK(sum == e->unit());
  Ring p = rings::product(rings::prime_field(2), rings::truncated_polynomial(2, 3));
  CHECK(p->radical().cols() == 2);
  CHECK(p->primitive_idempotents().size() == 2);
}

TEST_CASE("quotient rings") {
  Ring e = rings::example36();
  for (const auto& i : enumerate_ideals(e)) {
    if (!i.maximal) continue;
    Quotient q = quotient_ring(e, i.basis);
    CHECK(q.ring->dim() == 1);
  }
}
