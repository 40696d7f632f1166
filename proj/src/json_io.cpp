#include "json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace shom::io {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + escape(key); }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  fail(ErrorCode::InvalidInput, (where.empty() ? std::string("/") : where) + ": " + msg);
}

const json& field(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) bad(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(at(where, key), "missing required field");
  return *it;
}

const json& array_at(const json& doc, const std::string& where) {
  if (!doc.is_array()) bad(where, "expected an array");
  return doc;
}

std::string string_at(const json& doc, const std::string& where) {
  if (!doc.is_string()) bad(where, "expected a string");
  return doc.get<std::string>();
}

std::uint64_t uint_at(const json& doc, const std::string& where) {
  if (!doc.is_number_unsigned() && !(doc.is_number_integer() && doc.get<long long>() >= 0))
    bad(where, "expected a non-negative integer");
  return doc.get<std::uint64_t>();
}

long long int_at(const json& doc, const std::string& where) {
  if (!doc.is_number_integer()) bad(where, "expected an integer");
  return doc.get<long long>();
}

BigInt big_at(const json& doc, const std::string& where) {
  if (doc.is_number_integer()) return BigInt(doc.get<long long>());
  if (doc.is_string()) {
    try {
      return BigInt(doc.get<std::string>());
    } catch (const std::exception&) {
      bad(where, "not an integer literal");
    }
  }
  bad(where, "expected an integer");
}

json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Vec coefficients(const json& doc, Fp p, std::size_t n, const std::string& where) {
  const json& arr = array_at(doc, where);
  if (arr.size() != n) bad(where, "expected " + std::to_string(n) + " coefficients, got " + std::to_string(arr.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = fp_reduce(int_at(arr[i], at(where, i)), p);
  return v;
}

/// Nested rows, or a flat row-major list.
Mat fp_matrix(const json& doc, Fp p, std::size_t rows, std::size_t cols, const std::string& where) {
  const json& arr = array_at(doc, where);
  Mat m(p, rows, cols);
  if (!arr.empty() && arr[0].is_array()) {
    if (arr.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(arr.size()));
    for (std::size_t r = 0; r < rows; ++r) {
      Vec row = coefficients(arr[r], p, cols, at(where, r));
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }
  if (arr.size() != rows * cols)
    bad(where, "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(arr.size()));
  for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = fp_reduce(int_at(arr[i], at(where, i)), p);
  return m;
}

ZMat z_matrix(const json& doc, const std::string& where, std::optional<std::size_t> rows) {
  const json& arr = array_at(doc, where);
  if (rows && arr.size() != *rows) bad(where, "expected " + std::to_string(*rows) + " rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const json& row = array_at(arr[r], at(where, r));
    if (r == 0) cols = row.size();
    else if (row.size() != cols) bad(at(where, r), "ragged matrix: expected " + std::to_string(cols) + " entries");
  }
  ZMat m(arr.size(), cols);
  for (std::size_t r = 0; r < arr.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = big_at(arr[r][c], at(at(where, r), c));
  return m;
}

/// Rebuilds the error message of a domain failure with a pointer prefix.
template <class F>
auto located(const std::string& where, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), (where.empty() ? std::string("/") : where) + ": " +
                              std::string(e.what()).substr(std::string(error_code_name(e.code())).size() + 2));
  }
}

}  // namespace

AnyRing parse_ring(const json& doc) {
  const std::string kind = string_at(field(doc, "kind", ""), "/kind");
  if (kind == "integers") return {ZRing{}};
  if (kind == "z_mod") {
    BigInt m = big_at(field(doc, "m", ""), "/m");
    if (m < 2) bad("/m", "modulus must be at least 2");
    return {ZRing{m}};
  }
  if (kind != "fp_algebra") bad("/kind", "unknown ring kind '" + kind + "'");
  const std::uint64_t p64 = uint_at(field(doc, "p", ""), "/p");
  if (p64 < 2 || p64 > (1u << 30)) bad("/p", "characteristic out of range");
  if (!is_prime(p64)) fail(ErrorCode::NotPrimeChar, "/p: " + std::to_string(p64) + " is not prime");
  const Fp p = static_cast<Fp>(p64);
  const json& basis = array_at(field(doc, "basis", ""), "/basis");
  if (basis.empty()) bad("/basis", "basis must be nonempty");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string l = string_at(basis[i], at("/basis", i));
    if (l.empty() || l.find_first_of("*+ ") != std::string::npos) bad(at("/basis", i), "invalid label '" + l + "'");
    if (!seen.insert(l).second) bad(at("/basis", i), "duplicate label '" + l + "'");
    labels.push_back(l);
  }
  const std::size_t d = labels.size();
  const json& mul = field(doc, "mul", "");
  if (!mul.is_object()) bad("/mul", "expected an object");
  std::set<std::string> used;
  std::vector<Vec> table(d * d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::string key = labels[i] + "*" + labels[j], swapped = labels[j] + "*" + labels[i];
      const std::string& found = mul.contains(key) ? key : swapped;
      if (!mul.contains(found)) continue;
      used.insert(found);
      table[i * d + j] = coefficients(mul[found], p, d, at("/mul", found));
    }
  for (const auto& [key, value] : mul.items())
    if (!used.count(key)) bad(at("/mul", key), "key does not name a product of basis labels");
  const json& unit_doc = field(doc, "unit", "");
  Vec unit;
  if (unit_doc.is_string()) {
    std::string text = unit_doc.get<std::string>();
    unit = Vec(d, 0);
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
      auto it = std::find(labels.begin(), labels.end(), term);
      if (it == labels.end()) bad("/unit", "unknown label '" + term + "'");
      Fp& c = unit[static_cast<std::size_t>(it - labels.begin())];
      c = fp_add(c, 1, p);
    }
  } else {
    unit = coefficients(unit_doc, p, d, "/unit");
  }
  return {make_ring(FiniteAlgebra::build(p, labels, std::move(table), std::move(unit)))};
}

json ring_to_json(const Ring& ring) {
  json mul = json::object();
  const std::size_t d = ring->dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) mul[ring->label(i) + "*" + ring->label(j)] = ring->product(i, j);
  return {{"kind", "fp_algebra"}, {"p", ring->prime()}, {"basis", ring->labels()}, {"mul", mul}, {"unit", ring->unit()}};
}

json ring_to_json(const ZRing& ring) {
  if (ring.integers()) return {{"kind", "integers"}};
  return {{"kind", "z_mod"}, {"m", big_json(ring.m)}};
}

Vec parse_element(const json& doc, const FiniteAlgebra& ring, const std::string& where) {
  if (doc.is_string()) return located(where, [&] { return ring.parse_element(doc.get<std::string>()); });
  return coefficients(doc, ring.prime(), ring.dim(), where);
}

json element_to_json(const Vec& x) { return x; }

MultSet parse_multset(const json& doc, const Ring& ring) {
  if (!doc.is_object()) bad("", "expected an object");
  if (doc.contains("elements")) {
    const json& arr = array_at(doc["elements"], "/elements");
    std::vector<Vec> elems;
    for (std::size_t i = 0; i < arr.size(); ++i) elems.push_back(parse_element(arr[i], *ring, at("/elements", i)));
    return located("/elements", [&] { return MultSet::from_elements(ring, std::move(elems)); });
  }
  const json& arr = array_at(field(doc, "generators", ""), "/generators");
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < arr.size(); ++i) seeds.push_back(parse_element(arr[i], *ring, at("/generators", i)));
  return MultSet::closure(ring, seeds);
}

json multset_to_json(const MultSet& s) {
  json elems = json::array();
  for (const Vec& x : s.elements()) elems.push_back(x);
  return {{"elements", elems}};
}

ZMultSet parse_zmultset(const json& doc, const ZRing& ring) {
  const json& arr = array_at(field(doc, "generators", ""), "/generators");
  ZMultSet s{ring, {}};
  for (std::size_t i = 0; i < arr.size(); ++i) {
    BigInt g = big_at(arr[i], at("/generators", i));
    if (ring.integers() && g == 0) bad(at("/generators", i), "0 is not allowed as a generator over Z");
    s.generators.push_back(g);
  }
  return s;
}

json zmultset_to_json(const ZMultSet& s) {
  json gens = json::array();
  for (const BigInt& g : s.generators) gens.push_back(big_json(g));
  return {{"generators", gens}};
}

Mod parse_module(const json& doc, const Ring& ring) {
  const std::string kind = string_at(field(doc, "kind", ""), "/kind");
  const Fp p = ring->prime();
  if (kind == "action") {
    const std::size_t dim = uint_at(field(doc, "dim", ""), "/dim");
    const json& act = field(doc, "action", "");
    if (!act.is_object()) bad("/action", "expected an object keyed by basis label");
    std::vector<Mat> mats;
    for (std::size_t i = 0; i < ring->dim(); ++i) {
      const std::string& l = ring->label(i);
      if (!act.contains(l)) bad(at("/action", l), "missing action matrix");
      mats.push_back(fp_matrix(act[l], p, dim, dim, at("/action", l)));
    }
    for (const auto& [key, value] : act.items())
      if (std::find(ring->labels().begin(), ring->labels().end(), key) == ring->labels().end())
        bad(at("/action", key), "not a basis label");
    return located("/action", [&] { return Mod::from_action(ring, dim, std::move(mats)); });
  }
  if (kind != "presentation") bad("/kind", "unknown module kind '" + kind + "'");
  const std::size_t rank = uint_at(field(doc, "free_rank", ""), "/free_rank");
  const json& rels = array_at(field(doc, "relations", ""), "/relations");
  std::vector<Vec> relations;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string w = at("/relations", r);
    const json& rel = array_at(rels[r], w);
    if (rel.size() != rank) bad(w, "expected " + std::to_string(rank) + " ring elements");
    Vec v;
    for (std::size_t b = 0; b < rank; ++b) {
      Vec e = parse_element(rel[b], *ring, at(w, b));
      v.insert(v.end(), e.begin(), e.end());
    }
    relations.push_back(std::move(v));
  }
  return presented_module(ring, rank, relations);
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Fp>(row.begin(), row.end()));
  }
  return rows;
}

json matrix_to_json(const ZMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json module_to_json(const Mod& m) {
  json act = json::object();
  for (std::size_t i = 0; i < m.ring()->dim(); ++i) act[m.ring()->label(i)] = matrix_to_json(m.action(i));
  return {{"kind", "action"}, {"dim", m.dim()}, {"action", act}};
}

ZMod parse_zmod(const json& doc, const std::optional<ZRing>& ring) {
  const std::string kind = string_at(field(doc, "kind", ""), "/kind");
  if (kind != "z_presentation") bad("/kind", "expected 'z_presentation'");
  const std::string rname = string_at(field(doc, "ring", ""), "/ring");
  ZRing zr;
  if (rname == "Z_mod") {
    zr.m = big_at(field(doc, "m", ""), "/m");
    if (zr.m < 2) bad("/m", "modulus must be at least 2");
  } else if (rname != "Z") {
    bad("/ring", "expected 'Z' or 'Z_mod'");
  }
  if (ring && !(*ring == zr))
    fail(ErrorCode::RingMismatch, "/ring: module is over " + zr.name() + ", expected " + ring->name());
  std::optional<std::size_t> gens;
  if (doc.contains("generators")) gens = uint_at(doc["generators"], "/generators");
  ZMat mat = z_matrix(field(doc, "matrix", ""), "/matrix", gens && *gens > 0 ? gens : std::nullopt);
  if (!gens) gens = mat.rows();
  if (mat.rows() == 0 && *gens > 0) mat = ZMat(*gens, 0);
  return ZMod{zr, *gens, mat};
}

json zmod_to_json(const ZMod& m) {
  json out = {{"kind", "z_presentation"}, {"ring", m.ring.integers() ? "Z" : "Z_mod"}};
  if (!m.ring.integers()) out["m"] = big_json(m.ring.m);
  out["generators"] = m.gens;
  out["matrix"] = matrix_to_json(m.rel);
  return out;
}

ModMap parse_map(const json& doc, const Mod& source, const Mod& target) {
  Mat mat = fp_matrix(field(doc, "matrix", ""), source.prime(), target.dim(), source.dim(), "/matrix");
  return located("/matrix", [&] { return make_map(source, target, std::move(mat)); });
}

json map_to_json(const ModMap& f) { return {{"matrix", matrix_to_json(f.matrix)}}; }

json resolution_to_json(const Resolution& res) {
  json diffs = json::array();
  for (const ModMap& d : res.d) diffs.push_back(matrix_to_json(generator_images(d)));
  return {{"kind", "resolution"},
          {"ring", ring_to_json(res.target.ring())},
          {"module", module_to_json(res.target)},
          {"ranks", res.ranks()},
          {"differentials", diffs}};
}

Resolution parse_resolution(const json& doc, const Ring& ring) {
  if (string_at(field(doc, "kind", ""), "/kind") != "resolution") bad("/kind", "expected 'resolution'");
  if (doc.contains("ring")) {
    AnyRing r = located("/ring", [&] { return parse_ring(doc["ring"]); });
    if (!r.finite() || !r.algebra()->same_as(*ring))
      fail(ErrorCode::RingMismatch, "/ring: resolution was exported over a different ring");
  }
  Mod m = located("/module", [&] { return parse_module(field(doc, "module", ""), ring); });
  const json& ranks = array_at(field(doc, "ranks", ""), "/ranks");
  const json& diffs = array_at(field(doc, "differentials", ""), "/differentials");
  if (ranks.size() != diffs.size()) bad("/ranks", "one rank per differential expected");
  std::vector<Mat> images;
  std::size_t below = m.dim();
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const std::size_t r = uint_at(ranks[k], at("/ranks", k));
    images.push_back(fp_matrix(diffs[k], ring->prime(), below, r, at("/differentials", k)));
    below = r * ring->dim();
  }
  return located("/differentials", [&] { return resolution_from_images(m, images); });
}

json zresolution_to_json(const ZMod& m, const std::vector<ZMat>& ds) {
  json diffs = json::array(), ranks = json::array({m.gens});
  for (const ZMat& d : ds) {
    diffs.push_back(matrix_to_json(d));
    ranks.push_back(d.cols());
  }
  return {{"kind", "z_resolution"}, {"module", zmod_to_json(m)}, {"ranks", ranks}, {"differentials", diffs}};
}

std::pair<ZMod, std::vector<ZMat>> parse_zresolution(const json& doc) {
  if (string_at(field(doc, "kind", ""), "/kind") != "z_resolution") bad("/kind", "expected 'z_resolution'");
  ZMod m = located("/module", [&] { return parse_zmod(field(doc, "module", "")); });
  const json& ranks = array_at(field(doc, "ranks", ""), "/ranks");
  const json& diffs = array_at(field(doc, "differentials", ""), "/differentials");
  if (ranks.size() != diffs.size() + 1) bad("/ranks", "expected one more rank than differentials");
  std::vector<ZMat> ds;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const std::size_t rows = uint_at(ranks[k], at("/ranks", k)), cols = uint_at(ranks[k + 1], at("/ranks", k + 1));
    ZMat d = z_matrix(diffs[k], at("/differentials", k), rows ? std::optional<std::size_t>(rows) : std::nullopt);
    if (d.rows() == 0) d = ZMat(rows, 0);
    if (d.cols() != cols && !(d.rows() == 0 && rows == 0)) bad(at("/differentials", k), "column count does not match rank");
    if (d.rows() == 0) d = ZMat(0, cols);
    ds.push_back(std::move(d));
  }
  located("/differentials", [&] { check_z_resolution(m, ds); });
  return {m, ds};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace shom::io
