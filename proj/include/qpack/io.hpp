// Copyright 2026 The qpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file io.hpp
 * @brief File formats.
 *
 * Geometry JSON (self-describing, coordinates rather than point indices):
 *
 *     {"version": 1,
 *      "field": {"p": 3, "n": 2, "modulus": [1, 0, 1]},
 *      "classes": {"[1,0]": [{"slope": [[1,0],[1,0],[1,0]],
 *                              "base":  [[0,0],[0,0],[0,0]]}, ...], ...},
 *      "metadata": {...}}
 *
 * Elements are coefficient arrays, constant term first; class keys are the
 * compact JSON text of the class lambda. Classes and lines keep file order.
 *
 * Plain incidence format: a header line `points N`, then one line per
 * geometry line listing whitespace-separated point ids. Blank lines and
 * `#` comments are ignored.
 */
#pragma once

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpack/bounds.hpp"
#include "qpack/construction.hpp"
#include "qpack/error.hpp"
#include "qpack/verifier.hpp"

namespace qpack::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "qpack 1.0.0";

// ---------------------------------------------------------------------------
// Field, elements, points, lines
// ---------------------------------------------------------------------------

inline json field_to_json(const gf::Field& f) {
  return {{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

inline json element_to_json(const gf::Field& f, gf::FieldElement e) { return f.coeffs(e); }

inline json point_to_json(const gf::Field& f, const geometry::Point& x) {
  return json::array({element_to_json(f, x[0]), element_to_json(f, x[1]), element_to_json(f, x[2])});
}

inline json line_to_json(const gf::Field& f, const geometry::Line& l) {
  return {{"slope", point_to_json(f, l.slope.direction())}, {"base", point_to_json(f, l.base)}};
}

inline std::string lambda_key(const gf::Field& f, gf::FieldElement lambda) {
  return element_to_json(f, lambda).dump();
}

namespace detail {

template <class T>
T get_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw FormatError(std::string(what) + " must be a non-negative integer");
  return j.get<T>();
}

inline gf::FieldElement element_from_json(const gf::Field& f, const json& j) {
  if (!j.is_array() || j.size() != f.n())
    throw FormatError("element must be an array of " + std::to_string(f.n()) + " coefficients");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const auto v = get_uint<std::uint64_t>(x, "coefficient");
    if (v >= f.p()) throw FormatError("coefficient out of range");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return f.from_coeffs(c);
}

inline geometry::Point point_from_json(const gf::Field& f, const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("point must have three coordinates");
  return {element_from_json(f, j[0]), element_from_json(f, j[1]), element_from_json(f, j[2])};
}

}  // namespace detail

inline gf::Field field_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("field must be an object");
  const auto p = detail::get_uint<std::uint64_t>(j.at("p"), "p");
  const auto n = detail::get_uint<std::uint64_t>(j.at("n"), "n");
  if (p > (1u << 31) || n > 31) throw FormatError("field too large");
  gf::Poly m;
  if (!j.at("modulus").is_array()) throw FormatError("modulus must be an array");
  for (const auto& c : j.at("modulus")) {
    const auto v = detail::get_uint<std::uint64_t>(c, "modulus coefficient");
    if (v >= p) throw FormatError("modulus coefficient out of range");
    m.push_back(static_cast<std::uint32_t>(v));
  }
  try {
    return gf::Field::from_modulus(static_cast<std::uint32_t>(p), static_cast<unsigned>(n), std::move(m));
  } catch (const InvalidModulus& e) {
    throw FormatError(std::string("invalid field: ") + e.what());
  }
}

/// Reads a line; the direction is canonicalized and the base moved to the
/// smallest point, so hand-written lines are accepted in any form.
inline geometry::Line line_from_json(const gf::Field& f, const json& j) {
  if (!j.is_object()) throw FormatError("line must be an object");
  const auto dir = detail::point_from_json(f, j.at("slope"));
  const auto base = detail::point_from_json(f, j.at("base"));
  try {
    return geometry::canonical_line(f, dir, base);
  } catch (const ZeroSlope&) {
    throw FormatError("line has zero slope");
  }
}

// ---------------------------------------------------------------------------
// Geometry files
// ---------------------------------------------------------------------------

struct GeometryFile {
  construction::GeometryFamily family;
  json metadata = json::object();
};

inline json geometry_to_json(const GeometryFile& g) {
  const auto& f = g.family.field;
  json classes = json::object();
  for (const auto& c : g.family.classes) {
    json lines = json::array();
    for (const auto& l : c.lines) lines.push_back(line_to_json(f, l));
    classes[lambda_key(f, c.lambda)] = std::move(lines);
  }
  json out = {{"version", kFormatVersion}, {"field", field_to_json(f)}, {"classes", std::move(classes)}};
  if (!g.metadata.empty()) out["metadata"] = g.metadata;
  return out;
}

inline std::string serialize_geometry(const GeometryFile& g) { return geometry_to_json(g).dump() + "\n"; }

inline GeometryFile parse_geometry(std::string_view text) {
  try {
    // The parser keeps one value per key, so repeated keys are caught here.
    std::vector<std::set<std::string>> keys;
    const json j = json::parse(text, [&](int, json::parse_event_t ev, json& v) {
      if (ev == json::parse_event_t::object_start) keys.emplace_back();
      else if (ev == json::parse_event_t::object_end) keys.pop_back();
      else if (ev == json::parse_event_t::key && !keys.back().insert(v.get<std::string>()).second)
        throw FormatError("duplicate key " + v.get<std::string>());
      return true;
    });
    if (!j.is_object()) throw FormatError("geometry file must be a JSON object");
    if (!j.contains("version") || j.at("version") != kFormatVersion)
      throw FormatError("unsupported geometry format version");
    gf::Field f = field_from_json(j.at("field"));
    GeometryFile out{{f, {}}, j.value("metadata", json::object())};
    const json& classes = j.at("classes");
    if (!classes.is_object()) throw FormatError("classes must be an object");
    std::vector<gf::FieldElement> seen;
    for (const auto& [key, lines] : classes.items()) {
      json kj;
      try {
        kj = json::parse(key);
      } catch (const json::exception&) {
        throw FormatError("class key '" + key + "' is not an element");
      }
      const auto lambda = detail::element_from_json(f, kj);
      if (lambda == f.zero()) throw FormatError("class lambda must be nonzero");
      if (std::find(seen.begin(), seen.end(), lambda) != seen.end())
        throw FormatError("duplicate class " + key);
      seen.push_back(lambda);
      if (!lines.is_array()) throw FormatError("class " + key + " must be an array of lines");
      construction::LineClass cls{lambda, {}};
      cls.lines.reserve(lines.size());
      for (const auto& l : lines) cls.lines.push_back(line_from_json(f, l));
      out.family.classes.push_back(std::move(cls));
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed geometry JSON: ") + e.what());
  } catch (const ElementOutOfField& e) {
    throw FormatError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Plain incidence format
// ---------------------------------------------------------------------------

inline verifier::GenericIncidence parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<std::vector<verifier::PointId>> lines;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw FormatError("line " + std::to_string(lineno) + ": " + why);
    };
    auto parse_id = [&](const std::string& t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail("'" + t + "' is not a non-negative integer");
      if (t.size() > 10) fail("'" + t + "' is too large");
      return std::stoull(t);
    };
    if (!have_header) {
      std::string count;
      if (tok != "points" || !(ls >> count)) fail("expected header 'points N'");
      n = parse_id(count);
      if (n > 0xffffffffull) fail("too many points");
      if (ls >> tok) fail("trailing text after header");
      have_header = true;
      continue;
    }
    std::vector<verifier::PointId> ids;
    do {
      const auto v = parse_id(tok);
      if (v >= n) fail("point id " + tok + " out of range");
      ids.push_back(static_cast<verifier::PointId>(v));
    } while (ls >> tok);
    lines.push_back(std::move(ids));
  }
  if (!have_header) throw FormatError("missing header 'points N'");
  try {
    return verifier::GenericIncidence(n, std::move(lines));
  } catch (const MalformedStructure& e) {
    throw FormatError(std::string("malformed structure: ") + e.what());
  }
}

inline std::string serialize_plain(const verifier::GenericIncidence& g) {
  std::string out = "points " + std::to_string(g.num_points()) + "\n";
  for (const auto& l : g.lines()) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(l[i]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json witness_to_json(const verifier::Witness& w) {
  json j = {{"kind", verifier::to_string(w.kind)}, {"lines", w.lines}, {"points", w.points}};
  if (!w.classes.empty()) j["classes"] = w.classes;
  if (w.kind == verifier::WitnessKind::gq_violation || w.kind == verifier::WitnessKind::order_violation)
    j["count"] = w.count;
  j["detail"] = w.detail;
  return j;
}

inline json constant_bound_to_json(const bounds::ConstantBound& b) {
  return {{"value", b.value}, {"constant", b.constant}, {"constant_unspecified", b.constant_unspecified}};
}

inline json bound_report_to_json(const bounds::BoundReport& r) {
  return {{"k", r.k},
          {"r", r.r},
          {"threshold", r.threshold},
          {"q", r.q},
          {"bound_main", r.bound_main},
          {"cap_main", r.cap_main},
          {"bound_fglps", r.bound_fglps},
          {"bound_hrs", constant_bound_to_json(r.hrs.bound)},
          {"hrs_applicable", r.hrs.applicable},
          {"bound_bbl", constant_bound_to_json(r.bbl)},
          {"eq1_range", {{"lower", constant_bound_to_json(r.eq1.lower)}, {"upper", constant_bound_to_json(r.eq1.upper)}}},
          {"conditions_ok",
           {{"s_large", r.conditions.s_large},
            {"t_large", r.conditions.t_large},
            {"enough_classes", r.conditions.enough_classes}}},
          {"winner", bounds::to_string(r.winner)}};
}

inline json exponent_report_to_json(const bounds::ExponentReport& e) {
  return {{"alpha", e.alpha},
          {"orientation", bounds::to_string(e.orientation)},
          {"k_exponent", e.k_exponent},
          {"r_exponent", e.r_exponent},
          {"total_degree", e.total_degree}};
}

inline constexpr const char* kScanCsvHeader =
    "k,r,threshold,q,bound_main,cap_main,bound_fglps,bound_hrs,hrs_applicable,bound_bbl,winner";

/// Numbers as their shortest round-trip text (the JSON rendering).
inline std::string number_text(double x) { return json(x).dump(); }

inline std::string scan_csv_row(const bounds::BoundReport& r) {
  std::ostringstream s;
  s << r.k << ',' << r.r << ',' << number_text(r.threshold) << ',' << r.q << ',' << r.bound_main << ','
    << number_text(r.cap_main) << ',' << r.bound_fglps << ',' << number_text(r.hrs.bound.value) << ','
    << (r.hrs.applicable ? "true" : "false") << ',' << number_text(r.bbl.value) << ','
    << bounds::to_string(r.winner);
  return s.str();
}

}  // namespace qpack::io
