#pragma once

#include <string>
#include <vector>

#include "module.hpp"
#include "ring.hpp"

namespace testkit {

using namespace shom;

inline Mat m1(Fp p, Fp v) {
  Mat m(p, 1, 1);
  m(0, 0) = v;
  return m;
}

/// The simple module of the second factor of the 3-dimensional example ring:
/// e2 acts as 1, e1 and f act as 0.
inline Mod second_simple(const Ring& r) { return Mod::from_action(r, 1, {m1(2, 0), m1(2, 1), m1(2, 0)}); }
inline Mod first_simple(const Ring& r) { return Mod::from_action(r, 1, {m1(2, 1), m1(2, 0), m1(2, 0)}); }

/// R/(t) over a truncated polynomial ring.
inline Mod residue_field(const Ring& r) {
  std::vector<Mat> action;
  for (std::size_t i = 0; i < r->dim(); ++i) action.push_back(m1(r->prime(), i == 0 ? 1 : 0));
  return Mod::from_action(r, 1, std::move(action));
}

inline MultSet mult(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Vec> seeds;
  for (const auto& g : gens) seeds.push_back(r->parse_element(g));
  return MultSet::closure(r, seeds);
}

inline std::vector<Ring> bundled_rings() {
  return {rings::prime_field(2),
          rings::prime_field(3),
          rings::truncated_polynomial(2, 2),
          rings::truncated_polynomial(2, 3),
          rings::truncated_polynomial(3, 2),
          rings::example36(),
          rings::product(rings::prime_field(2), rings::truncated_polynomial(2, 2))};
}

}  // namespace testkit
