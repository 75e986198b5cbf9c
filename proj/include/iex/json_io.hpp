#pragma once

/**
 * @file json_io.hpp
 * @brief Canonical JSON interchange for set systems, Venn diagrams, IE-vectors
 *        and check reports.
 *
 *   {"type":"set_system","n":N,"points":[[labels...],...]}
 *   {"type":"venn","n":N,"regions":[[labels...],...]}
 *   {"type":"ie_vector","n":N,"terms":[{"coeff":"-4","set":[labels...]},...]}
 *
 * Labels are 1-based.  Objects serialize with sorted keys, index sets with
 * sorted labels, regions and terms in canonical order, and coefficients as
 * decimal strings.  Readers ignore keys they do not know, so an ie_vector
 * document may carry extra metadata.
 */

#include <cstddef>
#include <istream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "iex/core.hpp"
#include "iex/standardize.hpp"
#include "iex/validate.hpp"

namespace iex {

using json = nlohmann::json;

namespace detail {

inline json labels_to_json(const IndexSet& s) {
  json arr = json::array();
  s.for_each([&](std::size_t i) { arr.push_back(i + 1); });
  return arr;
}

inline IndexSet labels_from_json(const json& arr, std::size_t n) {
  if (!arr.is_array()) throw input_error("expected an array of set labels");
  IndexSet s;
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw input_error("set labels must be integers");
    const auto label = v.get<long long>();
    if (label < 1 || static_cast<unsigned long long>(label) > n)
      throw input_error("set label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    if (s.contains(static_cast<std::size_t>(label - 1)))
      throw input_error("set label " + std::to_string(label) + " repeated");
    s.insert(static_cast<std::size_t>(label - 1));
  }
  return s;
}

inline const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw input_error(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

inline std::size_t read_n(const json& doc) {
  const json& n = require(doc, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw input_error("\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

inline void require_type(const json& doc, const char* type) {
  const json& t = require(doc, "type");
  if (!t.is_string() || t.get<std::string>() != type)
    throw input_error(std::string("expected a document of type \"") + type + "\"");
}

inline BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw input_error("empty coefficient");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw input_error("malformed coefficient \"" + text + "\"");
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace detail

inline json to_json(const SetSystem& fs) {
  json points = json::array();
  for (const IndexSet& p : fs.points()) points.push_back(detail::labels_to_json(p));
  return json{{"type", "set_system"}, {"n", fs.set_count()}, {"points", std::move(points)}};
}

inline json to_json(const VennDiagram& venn) {
  json regions = json::array();
  for (const IndexSet& r : venn.regions()) regions.push_back(detail::labels_to_json(r));
  return json{{"type", "venn"}, {"n", venn.set_count()}, {"regions", std::move(regions)}};
}

inline json to_json(const IEVector& x) {
  json terms = json::array();
  for (const auto& [s, c] : x.terms())
    terms.push_back(json{{"set", detail::labels_to_json(s)}, {"coeff", c.str()}});
  return json{{"type", "ie_vector"}, {"n", x.set_count()}, {"terms", std::move(terms)}};
}

inline SetSystem set_system_from_json(const json& doc) {
  detail::require_type(doc, "set_system");
  const std::size_t n = detail::read_n(doc);
  const json& pts = detail::require(doc, "points");
  if (!pts.is_array()) throw input_error("\"points\" must be an array");
  std::vector<IndexSet> points;
  points.reserve(pts.size());
  for (const json& p : pts) points.push_back(detail::labels_from_json(p, n));
  return SetSystem(n, std::move(points), DuplicateSets::allow);
}

inline VennDiagram venn_from_json(const json& doc) {
  detail::require_type(doc, "venn");
  const std::size_t n = detail::read_n(doc);
  const json& regs = detail::require(doc, "regions");
  if (!regs.is_array()) throw input_error("\"regions\" must be an array");
  std::vector<IndexSet> regions;
  regions.reserve(regs.size());
  for (const json& r : regs) regions.push_back(detail::labels_from_json(r, n));
  return VennDiagram(n, std::move(regions));
}

inline IEVector ie_vector_from_json(const json& doc) {
  detail::require_type(doc, "ie_vector");
  const std::size_t n = detail::read_n(doc);
  const json& terms = detail::require(doc, "terms");
  if (!terms.is_array()) throw input_error("\"terms\" must be an array");
  IEVector x(n);
  for (const json& t : terms) {
    IndexSet s = detail::labels_from_json(detail::require(t, "set"), n);
    const json& c = detail::require(t, "coeff");
    if (!c.is_string()) throw input_error("coefficients must be decimal strings");
    if (x.terms().contains(s)) throw input_error("term " + detail::label_string(s) + " repeated");
    x.set(s, detail::parse_bigint(c.get<std::string>()));
  }
  return x;
}

/// Venn diagram of either a set_system or a venn document.
inline VennDiagram venn_from_any_json(const json& doc) {
  const json& t = detail::require(doc, "type");
  if (t == "set_system") return compute_venn(set_system_from_json(doc));
  if (t == "venn") return venn_from_json(doc);
  throw input_error("expected a set_system or venn document");
}

/// Parses text, mapping JSON syntax errors to input_error.
inline json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

/// Compact canonical text (sorted keys), newline-terminated.
inline std::string dump_canonical(const json& doc) { return doc.dump() + "\n"; }

// Reports

inline json to_json(const IeCheckReport& r) {
  json violations = json::array();
  for (const RegionViolation& v : r.violations)
    violations.push_back(json{{"region", detail::labels_to_json(v.tau)}, {"sum", v.sum.str()}});
  json uncovered = json::array();
  for (const IndexSet& s : r.uncovered_terms) uncovered.push_back(detail::labels_to_json(s));
  return json{{"pass", r.pass}, {"violations", std::move(violations)},
              {"uncovered_terms", std::move(uncovered)}};
}

inline json to_json(const MeasureCheckReport& r) {
  json mismatches = json::array();
  for (const MeasureMismatch& mm : r.mismatches) {
    json w = json::array();
    for (const BigInt& v : mm.weights) w.push_back(v.str());
    mismatches.push_back(json{{"kind", mm.kind}, {"weights", std::move(w)},
                              {"formula", mm.formula.str()}, {"union", mm.union_measure.str()}});
  }
  return json{{"pass", r.pass}, {"measures_checked", r.measures_checked},
              {"mismatches", std::move(mismatches)}};
}

}  // namespace iex
