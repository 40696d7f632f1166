#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "oracles.hpp"

using namespace shom;
using namespace testkit;

namespace {

// dim Ext^n(M, N) from the exact sequence
// 0 -> Hom(K_{n-1}, N) -> Hom(F_{n-1}, N) -> Hom(K_n, N) -> Ext^n(M, N) -> 0,
// with syzygies from a plain resolution and Hom counted by enumeration.
std::size_t ext_dim_oracle(const Mod& m, const Mod& n, std::size_t deg) {
  Resolution r = free_resolution(m, deg, CoverStyle::Plain);
  auto h = [&](const Mod& x) { return oracle::log_p(oracle::count_homs(x, n), n.prime()); };
  if (deg == 0) return h(m);
  return h(r.syzygies[deg].module) - h(r.free(deg - 1)) + h(r.syzygies[deg - 1].module);
}

}  // namespace

TEST_CASE("resolution shapes") {
  Ring t = rings::truncated_polynomial(2, 2);
  Resolution r = free_resolution(residue_field(t), 6);
  check_resolution(r);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(r.covers[k].rank() == 1);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(find_isomorphism(r.syzygies[k].module, residue_field(t)).has_value());

  Resolution fr = free_resolution(free_module(t, 2), 3);
  CHECK(fr.length() == std::optional<std::size_t>(1));

  Ring e = rings::example36();
  Mod ideal_quot = cyclic_module(e, ideal_generated(*e, {e->parse_element("e1"), e->parse_element("f")}));
  CHECK(ideal_quot.dim() == 1);
  Resolution er = free_resolution(ideal_quot, 2);
  CHECK(er.syzygies[1].module.dim() == 2);
}

TEST_CASE("resolutions are exact for random modules in every style") {
  for (const Ring& ring : bundled_rings()) {
    Rng rng(derive_seed(31, ring->dim()));
    for (int trial = 0; trial < 6; ++trial) {
      Mod m = random_module(ring, rng);
      check_resolution(free_resolution(m, 4, CoverStyle::Minimal));
      check_resolution(free_resolution(m, 4, CoverStyle::Plain));
      check_resolution(free_resolution(m, 4, CoverStyle::SeededRandom, rng.next()));
    }
  }
}

TEST_CASE("ext examples") {
  Ring f2 = rings::prime_field(2);
  CHECK(ext(free_module(f2, 1), free_module(f2, 2), 1).module.dim() == 0);
  Ring t = rings::truncated_polynomial(2, 2);
  Mod k = residue_field(t);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(ext(k, k, n).module.dim() == 1);
  CHECK(ext(k, k, 1, CoverStyle::SeededRandom, 5).module.dim() == 1);

  Ring e = rings::example36();
  Mod m2 = second_simple(e);
  ExtResult x = ext(m2, m2, 1);
  CHECK(x.module.dim() == 1);
  CHECK(x.module.act(e->parse_element("e1")).is_zero());
}

TEST_CASE("ext dimensions agree with the enumeration oracle") {
  for (const Ring& ring : bundled_rings()) {
    Rng rng(derive_seed(41, ring->dim()));
    for (int trial = 0; trial < 6; ++trial) {
      Mod m = random_module(ring, rng, 3);
      Mod n = random_module(ring, rng, 2);
      for (std::size_t deg = 0; deg <= 2; ++deg) {
        Resolution r = free_resolution(m, deg, CoverStyle::Plain);
        bool small = true;
        for (std::size_t k = 0; k <= deg; ++k)
          small &= r.syzygies[k].module.dim() * n.dim() <= 10 && r.free(k).dim() * n.dim() <= 10;
        if (!small || ring->prime() == 3) continue;
        CHECK(ext(m, n, deg).module.dim() == ext_dim_oracle(m, n, deg));
      }
    }
  }
}

TEST_CASE("ext^0 is hom and duality preserves ext dimensions") {
  for (const Ring& ring : bundled_rings()) {
    Rng rng(derive_seed(43, ring->dim()));
    for (int trial = 0; trial < 6; ++trial) {
      Mod m = random_module(ring, rng), n = random_module(ring, rng);
      CHECK(ext(m, n, 0).module.dim() == hom_dim(m, n));
      for (std::size_t deg = 1; deg <= 2; ++deg)
        CHECK(ext(m, n, deg).module.dim() == ext(character_dual(n), character_dual(m), deg).module.dim());
    }
  }
}

TEST_CASE("ext is independent of the resolution") {
  for (const Ring& ring : bundled_rings()) {
    Rng rng(derive_seed(47, ring->dim()));
    for (int trial = 0; trial < 6; ++trial) {
      Mod m = random_module(ring, rng), n = random_module(ring, rng);
      const std::size_t deg = 1 + rng.below(2);
      Resolution p = free_resolution(m, deg + 1, CoverStyle::Minimal);
      Resolution q = free_resolution(m, deg + 1, CoverStyle::SeededRandom, rng.next());
      ExtResult ep = ext_from_resolution(p, n, deg);
      ExtResult eq = ext_from_resolution(q, n, deg);
      ModMap cmp = ext_contravariant_map(identity_map(m), p, q, eq, ep, n);
      CHECK(is_bijective(cmp));
      CHECK(is_r_linear(cmp.source, cmp.target, cmp.matrix));
      CHECK(kernel_profile(ep.module) == kernel_profile(eq.module));
    }
  }
}

TEST_CASE("long exact sequence of 0 -> k -> R -> k -> 0") {
  Ring t = rings::truncated_polynomial(2, 2);
  Mod k = residue_field(t);
  Mod r = free_module(t, 1);
  MultSet one = mult(t, {});
  SubResult soc = submodule(r, Mat::column(2, t->parse_element("t")));
  SubResult top = quotient(r, soc.map.matrix);
  for (Variance v : {Variance::Covariant, Variance::Contravariant}) {
    ConnectingData cd = long_ext_sequence(soc.map, top.map, k, 2, v, one);
    CHECK(cd.report.passed());
    for (const auto& p : cd.report.positions) CHECK(*p.s == t->unit());
    for (std::size_t i = 1; i < cd.deltas.size(); ++i) CHECK(is_bijective(cd.deltas[i]));
  }
}

TEST_CASE("long sequences stay S-exact with torsion noise") {
  Ring e = rings::example36();
  MultSet s = mult(e, {"e1"});
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Mod m = random_module(e, rng);
    auto hs = hom_space(m, random_module(e, rng));
    if (hs.empty()) continue;
    ModMap f = hs[rng.below(hs.size())];
    SubResult kr = subquotient(f, Part::Kernel);
    ModMap g = corestrict(f, subquotient(f, Part::Image));
    Mod t = second_simple(e);
    ModMap fa = compose(sum_inclusion(m, t, 0), kr.map);
    ModMap gb = compose(g, sum_projection(m, t, 0));
    Mod l = random_module(e, rng, 3);
    for (Variance v : {Variance::Covariant, Variance::Contravariant}) {
      ConnectingData cd = long_ext_sequence(fa, gb, l, 1, v, s);
      CHECK(cd.report.passed());
      for (const auto& p : cd.report.positions)
        if (p.ok) CHECK((*p.s == e->unit() || *p.s == e->parse_element("e1")));
    }
  }
}

TEST_CASE("sabotaged connecting maps break exactness") {
  Ring t = rings::truncated_polynomial(2, 2);
  Mod k = residue_field(t);
  Mod r = free_module(t, 1);
  SubResult soc = submodule(r, Mat::column(2, t->parse_element("t")));
  SubResult top = quotient(r, soc.map.matrix);
  set_connecting_sabotage(true);
  ConnectingData cd = long_ext_sequence(soc.map, top.map, k, 1, Variance::Covariant, mult(t, {}));
  set_connecting_sabotage(false);
  CHECK_FALSE(cd.report.passed());
}

TEST_CASE("non S-exact input is rejected") {
  Ring t = rings::truncated_polynomial(2, 2);
  Mod r = free_module(t, 1);
  CHECK_THROWS_AS(long_ext_sequence(zero_map(r, r), zero_map(r, r), r, 1, Variance::Covariant, mult(t, {})), Error);
}

TEST_CASE("injective cocovers") {
  Ring t = rings::truncated_polynomial(2, 2);
  Cocover c = injective_cocover(residue_field(t));
  CHECK(c.injective.dim() == 2);
  CHECK(find_isomorphism(c.injective, free_module(t, 1)).has_value());
  Ring e = rings::example36();
  Cocover c2 = injective_cocover(character_dual(free_module(e, 1)));
  CHECK(c2.injective.dim() == 3);
  Cocover c3 = injective_cocover(second_simple(e));
  CHECK(c3.injective.dim() == 3);
  CHECK(rank(c3.map.matrix) == 1);
  for (const Ring& ring : bundled_rings()) {
    Rng rng(derive_seed(53, ring->dim()));
    for (int trial = 0; trial < 5; ++trial) {
      Mod m = random_module(ring, rng);
      Cocover cc = injective_cocover(m);
      CHECK(is_r_linear(cc.map.source, cc.map.target, cc.map.matrix));
      CHECK(rank(cc.map.matrix) == m.dim());
    }
  }
}
