#pragma once

// JSON documents for rings, multiplicative sets, modules, maps and
// resolutions. Parse errors are InvalidInput with a JSON pointer prefix.

#include <optional>
#include <string>
#include <variant>

#include "homology.hpp"
#include "json.hpp"
#include "zbackend.hpp"

namespace shom::io {

using json = nlohmann::json;

/// A ring document: a finite algebra or Z / Z/m.
struct AnyRing {
  std::variant<Ring, ZRing> value;
  bool finite() const { return std::holds_alternative<Ring>(value); }
  const Ring& algebra() const { return std::get<Ring>(value); }
  const ZRing& integers() const { return std::get<ZRing>(value); }
};

AnyRing parse_ring(const json& doc);
json ring_to_json(const Ring& ring);
json ring_to_json(const ZRing& ring);

/// An element: a coefficient list or a string such as "e1+f".
Vec parse_element(const json& doc, const FiniteAlgebra& ring, const std::string& where);
json element_to_json(const Vec& x);

/// {"generators": [...]} closed under products, or {"elements": [...]} taken
/// as the full set and validated.
MultSet parse_multset(const json& doc, const Ring& ring);
json multset_to_json(const MultSet& s);
ZMultSet parse_zmultset(const json& doc, const ZRing& ring);
json zmultset_to_json(const ZMultSet& s);

/// {"kind":"action",...} or {"kind":"presentation",...}.
Mod parse_module(const json& doc, const Ring& ring);
json module_to_json(const Mod& m);
/// {"kind":"z_presentation",...}; the ring must match when given.
ZMod parse_zmod(const json& doc, const std::optional<ZRing>& ring = std::nullopt);
json zmod_to_json(const ZMod& m);

ModMap parse_map(const json& doc, const Mod& source, const Mod& target);
json map_to_json(const ModMap& f);

json resolution_to_json(const Resolution& res);
Resolution parse_resolution(const json& doc, const Ring& ring);
json zresolution_to_json(const ZMod& m, const std::vector<ZMat>& ds);
/// The module and its boundary matrices.
std::pair<ZMod, std::vector<ZMat>> parse_zresolution(const json& doc);

json matrix_to_json(const Mat& m);
json matrix_to_json(const ZMat& m);

/// Reads and parses a file; errors name the path.
json load_file(const std::string& path);

}  // namespace shom::io
