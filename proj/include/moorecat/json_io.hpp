#pragma once

// JSON encodings. Rationals are lowest-terms strings "p/q" or "n".
//
//   PLMap       {"dom":"2","cod":"1","breaks":[["0","0"],["2","1"]]}
//   PSpace      {"cells":[{"id":"c1","kind":"free","arity":"1","labels":["u"]},
//                         {"id":"c2","kind":"const","labels":["v"]}]}
//   Element     {"cell":"c1","length":"3","map":{...},"label":"u"}   (no "map" for const cells)
//   TensorClass {"length":"2","slots":[{"kind":"free","cell":"c1","start":"0","end":"1","map":{...},"label":"u"},
//                                      {"kind":"const","cell":"c2","label":"v"}]}
//               plus "grouping" when there are more than two factors.
//   RawTriple   {"psi":{...},"parts":[Element,...]}

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "moorecat/braiding.hpp"
#include "moorecat/errors.hpp"
#include "moorecat/gmaps.hpp"
#include "moorecat/pspaces.hpp"
#include "moorecat/tensorcalc.hpp"

namespace moorecat {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw validation_error(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw validation_error(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string string_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_string()) throw validation_error(std::string(what) + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw validation_error("rational: expected a string \"p/q\" or an integer");
}

inline json to_json(const PLMap& f) {
  json breaks = json::array();
  for (const auto& b : f.breaks()) breaks.push_back(json::array({b.t.str(), b.v.str()}));
  return {{"dom", f.dom().str()}, {"cod", f.cod().str()}, {"breaks", std::move(breaks)}};
}

inline PLMap plmap_from_json(const json& j) {
  const json& breaks = detail::field(j, "breaks", "PLMap");
  if (!breaks.is_array()) throw validation_error("PLMap: \"breaks\" must be an array");
  std::vector<Breakpoint> pts;
  for (const auto& b : breaks) {
    if (!b.is_array() || b.size() != 2) throw validation_error("PLMap: each break must be a [t, v] pair");
    pts.push_back({rational_from_json(b[0]), rational_from_json(b[1])});
  }
  PLMap f = PLMap::from_breaks(std::move(pts));
  if (j.contains("dom") && rational_from_json(j["dom"]) != f.dom().value())
    throw validation_error("PLMap: \"dom\" must equal the last break's t");
  if (j.contains("cod") && rational_from_json(j["cod"]) != f.cod().value())
    throw validation_error("PLMap: \"cod\" must equal the last break's v");
  return f;
}

inline json to_json(const PSpace& d) {
  json cells = json::array();
  for (const auto& c : d.cells()) {
    json jc = {{"id", c.id}, {"kind", c.is_free() ? "free" : "const"}};
    if (c.arity) jc["arity"] = c.arity->str();
    jc["labels"] = c.labels;
    cells.push_back(std::move(jc));
  }
  return {{"cells", std::move(cells)}};
}

inline PSpacePtr space_from_json(const json& j) {
  const json& cells = detail::field(j, "cells", "PSpace");
  if (!cells.is_array()) throw validation_error("PSpace: \"cells\" must be an array");
  std::vector<Cell> out;
  for (const auto& jc : cells) {
    std::string id = detail::string_field(jc, "id", "cell");
    const std::string kind = detail::string_field(jc, "kind", "cell");
    const json& labels = detail::field(jc, "labels", "cell");
    if (!labels.is_array()) throw validation_error("cell: \"labels\" must be an array");
    std::vector<std::string> ls;
    for (const auto& l : labels) {
      if (!l.is_string()) throw validation_error("cell: labels must be strings");
      ls.push_back(l.get<std::string>());
    }
    if (kind == "free")
      out.push_back(Cell::free(std::move(id), Length(rational_from_json(detail::field(jc, "arity", "free cell"))), std::move(ls)));
    else if (kind == "const")
      out.push_back(Cell::constant(std::move(id), std::move(ls)));
    else
      throw validation_error("cell: kind must be \"free\" or \"const\"");
  }
  return make_space(std::move(out));
}

inline json to_json(const Element& x) {
  json j = {{"cell", x.cell}, {"length", x.length.str()}};
  if (x.map) j["map"] = to_json(*x.map);
  j["label"] = x.label;
  return j;
}

inline Element element_from_json(const json& j) {
  std::string cell = detail::string_field(j, "cell", "element");
  std::string label = detail::string_field(j, "label", "element");
  if (j.contains("map")) {
    PLMap f = plmap_from_json(j["map"]);
    if (j.contains("length") && rational_from_json(j["length"]) != f.dom().value())
      throw validation_error("element: \"length\" must equal the map's dom");
    return Element::free(std::move(cell), std::move(f), std::move(label));
  }
  return Element::constant(std::move(cell), Length(rational_from_json(detail::field(j, "length", "element"))), std::move(label));
}

inline json to_json(const TensorClass& c) {
  json slots = json::array();
  for (const auto& s : c.slots) {
    if (const auto* f = std::get_if<FreeSlot>(&s))
      slots.push_back({{"kind", "free"}, {"cell", f->cell}, {"start", f->start.str()}, {"end", f->end.str()},
                       {"map", to_json(f->map)}, {"label", f->label}});
    else
      slots.push_back({{"kind", "const"}, {"cell", slot_cell(s)}, {"label", slot_label(s)}});
  }
  json j = {{"length", c.length.str()}, {"slots", std::move(slots)}};
  if (c.arity() > 2) j["grouping"] = c.grouping.str();
  return j;
}

inline TensorClass class_from_json(const json& j, std::vector<PSpacePtr> factors) {
  const json& slots = detail::field(j, "slots", "tensor class");
  if (!slots.is_array()) throw validation_error("tensor class: \"slots\" must be an array");
  std::vector<Slot> out;
  for (const auto& s : slots) {
    const std::string kind = detail::string_field(s, "kind", "slot");
    std::string cell = detail::string_field(s, "cell", "slot");
    std::string label = detail::string_field(s, "label", "slot");
    if (kind == "free")
      out.push_back(FreeSlot{std::move(cell), rational_from_json(detail::field(s, "start", "slot")),
                             rational_from_json(detail::field(s, "end", "slot")),
                             plmap_from_json(detail::field(s, "map", "slot")), std::move(label)});
    else if (kind == "const")
      out.push_back(ConstSlot{std::move(cell), std::move(label)});
    else
      throw validation_error("slot: kind must be \"free\" or \"const\"");
  }
  Grouping g = j.contains("grouping") ? Grouping::parse(detail::string_field(j, "grouping", "tensor class"))
                                      : Grouping::left_nested(factors.size());
  TensorClass c{std::move(factors), std::move(g), Length(rational_from_json(detail::field(j, "length", "tensor class"))),
                std::move(out)};
  validate_class(c);
  return c;
}

inline json to_json(const RawTriple& r) {
  json parts = json::array();
  for (const auto& x : r.parts) parts.push_back(to_json(x));
  json spaces = json::array();
  for (const auto& d : r.factors) spaces.push_back(to_json(*d));
  return {{"psi", to_json(r.psi)}, {"parts", std::move(parts)}, {"factors", std::move(spaces)}};
}

// Factors may be embedded (as written by to_json) or supplied by the caller.
inline RawTriple raw_triple_from_json(const json& j, std::vector<PSpacePtr> factors = {}) {
  if (factors.empty() && j.contains("factors"))
    for (const auto& d : j["factors"]) factors.push_back(space_from_json(d));
  const json& parts = detail::field(j, "parts", "representative");
  if (!parts.is_array()) throw validation_error("representative: \"parts\" must be an array");
  std::vector<Element> xs;
  for (const auto& p : parts) xs.push_back(element_from_json(p));
  return RawTriple{std::move(factors), plmap_from_json(detail::field(j, "psi", "representative")), std::move(xs)};
}

inline json to_json(const NaturalityWitness& w) {
  return {{"x", to_json(w.x)}, {"omega", to_json(w.omega)}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)},
          {"equal", w.equal}};
}

inline json to_json(const NaiveSwapReport& r) {
  return {{"original", to_json(r.original)}, {"rewritten", to_json(r.rewritten)}, {"canon1", to_json(r.canon1)},
          {"canon2", to_json(r.canon2)}, {"welldefined", r.welldefined}, {"braid_agrees", r.braid_agrees}};
}

inline json to_json(const GeneratorImage& img) {
  if (const auto* e = std::get_if<Element>(&img)) return to_json(*e);
  const auto& t = std::get<ConstTarget>(img);
  return {{"cell", t.cell}, {"label", t.label}};
}

inline json to_json(const TensorMorphism& m) {
  json assign = json::array();
  for (const auto& [k, img] : m.assignment)
    assign.push_back({{"left", {k.first.first, k.first.second}}, {"right", {k.second.first, k.second.second}},
                      {"image", to_json(img)}});
  return {{"left", to_json(*m.left)}, {"right", to_json(*m.right)}, {"target", to_json(*m.target)},
          {"assignment", std::move(assign)}};
}

}  // namespace moorecat
