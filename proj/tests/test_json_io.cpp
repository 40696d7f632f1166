#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "error.hpp"
#include "json_io.hpp"

using namespace shom;
using namespace testkit;
using io::json;

namespace {

json fixture(const std::string& name) { return io::load_file(std::string(SHOM_FIXTURES) + "/" + name); }

std::string error_of(const std::function<void()>& fn, ErrorCode* code = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (code) *code = e.code();
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bundled ring fixtures match the built-in constructors") {
  const std::vector<std::pair<std::string, Ring>> cases = {
      {"F2.json", rings::prime_field(2)},
      {"F3.json", rings::prime_field(3)},
      {"F2_t2.json", rings::truncated_polynomial(2, 2)},
      {"F2_t3.json", rings::truncated_polynomial(2, 3)},
      {"example36.json", rings::example36()},
      {"F2xF2_t2.json", rings::product(rings::prime_field(2), rings::truncated_polynomial(2, 2))}};
  for (const auto& [file, ring] : cases) {
    io::AnyRing r = io::parse_ring(fixture(file));
    REQUIRE(r.finite());
    CHECK(r.algebra()->same_as(*ring));
    CHECK(io::parse_ring(io::ring_to_json(ring)).algebra()->same_as(*ring));
  }
  CHECK(io::parse_ring(fixture("Z.json")).integers().integers());
  CHECK(io::parse_ring(fixture("Z4.json")).integers().m == 4);
}

TEST_CASE("multiplicative set fixtures") {
  Ring e = rings::example36();
  CHECK(io::parse_multset(fixture("trivial.json"), e).size() == 1);
  MultSet s = io::parse_multset(fixture("S1s.json"), e);
  CHECK(s.size() == 2);
  CHECK(s.contains(e->parse_element("e1")));
  CHECK(io::parse_multset(fixture("with_zero.json"), e).contains_zero());
  MultSet round = io::parse_multset(io::multset_to_json(s), e);
  CHECK(round.elements() == s.elements());
  ErrorCode code{};
  std::string msg = error_of([&] { io::parse_multset(json{{"elements", {"1", "e1", "e2"}}}, e); }, &code);
  CHECK(contains(msg, "/elements"));
  CHECK(io::parse_zmultset(fixture("gen2.json"), ZRing{}).generators == std::vector<BigInt>{2});
  CHECK(contains(error_of([&] { io::parse_zmultset(json{{"generators", {2, 0}}}, ZRing{}); }), "/generators/1"));
}

TEST_CASE("module documents") {
  Ring e = rings::example36();
  Mod m2 = io::parse_module(fixture("m2.json"), e);
  CHECK(find_isomorphism(m2, second_simple(e)).has_value());
  Mod m1 = io::parse_module(fixture("m1.json"), e);
  CHECK(find_isomorphism(m1, first_simple(e)).has_value());
  Ring t2 = rings::truncated_polynomial(2, 2);
  Mod k = io::parse_module(fixture("residue_t2.json"), t2);
  CHECK(find_isomorphism(k, residue_field(t2)).has_value());

  Rng rng(3);
  for (const Ring& r : bundled_rings())
    for (int t = 0; t < 10; ++t) {
      Mod m = random_module(r, rng, 5);
      Mod back = io::parse_module(io::module_to_json(m), r);
      CHECK(back.actions() == m.actions());
    }

  // e2 acts as 0 while f acts as 1: violates e2*f = f.
  json badmod = {{"kind", "action"}, {"dim", 1}, {"action", {{"e1", {{1}}}, {"e2", {{0}}}, {"f", {{1}}}}}};
  ErrorCode code{};
  std::string msg = error_of([&] { io::parse_module(badmod, e); }, &code);
  CHECK(code == ErrorCode::InvalidModule);
  CHECK(contains(msg, "/action"));
  CHECK(contains(msg, "*f"));

  json missing = {{"kind", "action"}, {"dim", 1}, {"action", {{"e1", {{1}}}, {"e2", {{0}}}}}};
  CHECK(contains(error_of([&] { io::parse_module(missing, e); }), "/action/f"));
  json shape = {{"kind", "action"}, {"dim", 2}, {"action", {{"e1", {1, 0, 0}}, {"e2", {{0}}}, {"f", {{1}}}}}};
  CHECK(contains(error_of([&] { io::parse_module(shape, e); }), "/action/e1"));
  json rel = {{"kind", "presentation"}, {"free_rank", 1}, {"relations", json::array({json::array({"e1", "f"})})}};
  CHECK(contains(error_of([&] { io::parse_module(rel, e); }), "/relations/0"));
  json label = {{"kind", "presentation"}, {"free_rank", 1}, {"relations", {{"g"}}}};
  CHECK(contains(error_of([&] { io::parse_module(label, e); }), "/relations/0/0"));
}

TEST_CASE("ring validation errors carry pointers and codes") {
  ErrorCode code{};
  json nounit = fixture("F2_t2.json");
  nounit["unit"] = {0, 1};
  error_of([&] { io::parse_ring(nounit); }, &code);
  CHECK(code == ErrorCode::BadUnit);

  // Non-associative but unital: e_a e_a = e_b, e_b e_b = e_b, e_a e_b = e_a.
  json table = {{"kind", "fp_algebra"},
                {"p", 2},
                {"basis", {"1", "a", "b"}},
                {"mul",
                 {{"1*1", {1, 0, 0}},
                  {"1*a", {0, 1, 0}},
                  {"1*b", {0, 0, 1}},
                  {"a*a", {0, 0, 1}},
                  {"a*b", {0, 1, 0}},
                  {"b*b", {0, 1, 0}}}},
                {"unit", {1, 0, 0}}};
  std::string msg = error_of([&] { io::parse_ring(table); }, &code);
  CHECK(code == ErrorCode::NonAssociative);
  CHECK(contains(msg, "basis triple"));

  CHECK(contains(error_of([&] { io::parse_ring(json{{"kind", "fp_algebra"}, {"p", 2}}); }), "/basis"));
  error_of([&] { io::parse_ring(json{{"kind", "fp_algebra"}, {"p", 4}, {"basis", {"1"}}}); }, &code);
  CHECK(code == ErrorCode::NotPrimeChar);
  json stray = fixture("F2.json");
  stray["mul"]["x*1"] = {1};
  CHECK(contains(error_of([&] { io::parse_ring(stray); }), "/mul/x*1"));
  CHECK(contains(error_of([&] { io::parse_ring(json{{"kind", "weird"}}); }), "/kind"));
  CHECK(contains(error_of([&] { io::parse_ring(json{{"kind", "z_mod"}, {"m", 1}}); }), "/m"));
}

TEST_CASE("integer module documents") {
  ZMod z3 = io::parse_zmod(fixture("z3.json"));
  CHECK(z3.ring.m == 3);
  CHECK(z3.str() == "Z/3");
  CHECK(io::parse_zmod(fixture("z2_over_z.json"), ZRing{}).str() == "Z/2");
  ErrorCode code{};
  error_of([&] { io::parse_zmod(fixture("z3.json"), ZRing{}); }, &code);
  CHECK(code == ErrorCode::RingMismatch);
  ZMod m{ZRing{12}, 2, ZMat::from_rows({{4, 0}, {6, 3}})};
  ZMod back = io::parse_zmod(io::zmod_to_json(m));
  CHECK(back.invariant_factors() == m.invariant_factors());
  ZMod free{ZRing{}, 2, ZMat(2, 0)};
  CHECK(io::parse_zmod(io::zmod_to_json(free)).str() == "Z + Z");
  json big = {{"kind", "z_presentation"}, {"ring", "Z"}, {"matrix", {{"123456789012345678901234567890"}}}};
  CHECK(io::parse_zmod(big).exponent() == BigInt("123456789012345678901234567890"));
  CHECK(contains(error_of([&] { io::parse_zmod(json{{"kind", "z_presentation"}, {"ring", "Q"}, {"matrix", json::array()}}); }),
                 "/ring"));
  CHECK(contains(error_of([&] {
                   io::parse_zmod(json{{"kind", "z_presentation"}, {"ring", "Z"}, {"matrix", {{1, 2}, {3}}}});
                 }),
                 "/matrix/1"));
}

TEST_CASE("maps") {
  Ring e = rings::example36();
  Mod f = free_module(e, 1), m2 = second_simple(e);
  ModMap pi = io::parse_map(json{{"matrix", {{0, 1, 0}}}}, f, m2);
  CHECK(pi.matrix(0, 1) == 1);
  CHECK(io::parse_map(io::map_to_json(pi), f, m2).matrix == pi.matrix);
  ErrorCode code{};
  error_of([&] { io::parse_map(json{{"matrix", {{0, 0, 1}}}}, f, m2); }, &code);
  CHECK(code == ErrorCode::NotRLinear);
}

TEST_CASE("exported resolutions reproduce Ext exactly") {
  Rng rng(17);
  for (const Ring& r : bundled_rings())
    for (int t = 0; t < 6; ++t) {
      Mod m = random_module(r, rng, 4), n = random_module(r, rng, 4);
      for (CoverStyle style : {CoverStyle::Minimal, CoverStyle::SeededRandom}) {
        Resolution res = free_resolution(m, 3, style, 5 + t);
        json doc = io::resolution_to_json(res);
        Resolution back = io::parse_resolution(json::parse(doc.dump()), r);
        check_resolution(back);
        CHECK(back.ranks() == res.ranks());
        for (std::size_t k = 0; k <= 2; ++k) {
          ExtResult a = ext_from_resolution(res, n, k), b = ext_from_resolution(back, n, k);
          CHECK(a.module.actions() == b.module.actions());
          CHECK(a.representatives == b.representatives);
        }
      }
    }
  Ring e = rings::example36();
  json doc = io::resolution_to_json(free_resolution(second_simple(e), 2));
  doc["differentials"][1][0][0] = 1 - doc["differentials"][1][0][0].get<int>();
  ErrorCode code{};
  std::string msg = error_of([&] { io::parse_resolution(doc, e); }, &code);
  CHECK(code == ErrorCode::InvalidInput);
  CHECK(contains(msg, "/differentials"));
  CHECK_THROWS(io::parse_resolution(doc, rings::prime_field(2)));
}

TEST_CASE("exported integer resolutions reproduce Ext exactly") {
  Rng rng(23);
  for (long a : {4L, 6L, 9L}) {
    for (int t = 0; t < 5; ++t) {
      ZMod m = random_z_module(a, rng), n = random_z_module(a, rng);
      auto ds = z_resolution(m, 4);
      auto [m2, ds2] = io::parse_zresolution(json::parse(io::zresolution_to_json(m, ds).dump()));
      CHECK(ds2 == ds);
      for (std::size_t k = 0; k <= 3; ++k)
        CHECK(z_ext_from_resolution(m2, ds2, n, k).invariant_factors() == z_ext(m, n, k).invariant_factors());
    }
  }
  ZMod z2{ZRing{}, 1, ZMat::from_rows({{2}})};
  auto ds = z_resolution(z2, 2);
  json doc = io::zresolution_to_json(z2, ds);
  doc["differentials"][0][0][0] = 4;
  CHECK(contains(error_of([&] { io::parse_zresolution(doc); }), "/differentials"));
}

TEST_CASE("file loading errors name the path") {
  std::string msg = error_of([] { io::load_file("/nonexistent/ring.json"); });
  CHECK(contains(msg, "/nonexistent/ring.json"));
}
