#pragma once

// Coend tensor products of finitely presented G-spaces.
//
// A class of (D1 (x) ... (x) Dn)(L) is stored in segment normal form: every
// representative (psi, x1, ..., xn) is equivalent to (id_L, x1.psi1, ...,
// xn.psin) where psi = psi1 (x) ... (x) psin is the unique decomposition along
// the part lengths. Free parts then carry an interval [start, end] of [0, L]
// (the preimage of their codomain block) and the map x_i.psi_i; constant parts
// carry their label only, and a run of consecutive constant parts occupies
// the gap between the surrounding free intervals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "moorecat/errors.hpp"
#include "moorecat/gmaps.hpp"
#include "moorecat/pspaces.hpp"

namespace moorecat {

struct FreeSlot {
  std::string cell;
  Rational start;
  Rational end;
  PLMap map;  // (end - start) -> arity
  std::string label;

  friend bool operator==(const FreeSlot&, const FreeSlot&) = default;
};

struct ConstSlot {
  std::string cell;
  std::string label;

  friend bool operator==(const ConstSlot&, const ConstSlot&) = default;
};

using Slot = std::variant<FreeSlot, ConstSlot>;

inline const std::string& slot_cell(const Slot& s) {
  return std::visit([](const auto& x) -> const std::string& { return x.cell; }, s);
}
inline const std::string& slot_label(const Slot& s) {
  return std::visit([](const auto& x) -> const std::string& { return x.label; }, s);
}

// ---------------------------------------------------------------------------
// Bracketings of an n-fold tensor. The tensor is strict, so grouping is
// metadata on top of the flat slot list.

struct Grouping {
  std::vector<Grouping> children;  // empty: a single factor; otherwise exactly two

  static Grouping leaf() { return {}; }
  static Grouping node(Grouping a, Grouping b) {
    Grouping g;
    g.children.push_back(std::move(a));
    g.children.push_back(std::move(b));
    return g;
  }
  // ((x x) x) ... for n factors.
  static Grouping left_nested(std::size_t n) {
    if (n == 0) throw grouping_error("grouping: zero factors");
    Grouping g = leaf();
    for (std::size_t i = 1; i < n; ++i) g = node(std::move(g), leaf());
    return g;
  }

  [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }
  [[nodiscard]] std::size_t leaves() const {
    return is_leaf() ? 1 : children[0].leaves() + children[1].leaves();
  }

  [[nodiscard]] std::string str() const {
    return is_leaf() ? "x" : "(" + children[0].str() + " " + children[1].str() + ")";
  }

  static Grouping parse(std::string_view s) {
    std::size_t pos = 0;
    Grouping g = parse_at(s, pos);
    skip_ws(s, pos);
    if (pos != s.size()) throw grouping_error("grouping: trailing input at position " + std::to_string(pos));
    return g;
  }

  friend bool operator==(const Grouping& a, const Grouping& b) { return a.children == b.children; }

 private:
  static void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  static Grouping parse_at(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      return leaf();
    }
    if (pos >= s.size() || s[pos] != '(') throw grouping_error("grouping: expected 'x' or '(' at position " + std::to_string(pos));
    ++pos;
    Grouping a = parse_at(s, pos);
    Grouping b = parse_at(s, pos);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw grouping_error("grouping: expected ')' at position " + std::to_string(pos));
    ++pos;
    return node(std::move(a), std::move(b));
  }
};

// ---------------------------------------------------------------------------

struct TensorClass {
  std::vector<PSpacePtr> factors;
  Grouping grouping;
  Length length;
  std::vector<Slot> slots;

  [[nodiscard]] std::size_t arity() const noexcept { return factors.size(); }

  friend bool operator==(const TensorClass& a, const TensorClass& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
      if (!same_space(a.factors[i], b.factors[i])) return false;
    return a.grouping == b.grouping && a.length == b.length && a.slots == b.slots;
  }
};

// A representative (psi, x1, ..., xn) with psi : L -> l1 + ... + ln.
struct RawTriple {
  std::vector<PSpacePtr> factors;
  PLMap psi;
  std::vector<Element> parts;
};

namespace detail {

struct Segments {
  Length length;
  std::vector<Slot> slots;
};

inline Segments element_segments(const Element& x) {
  if (x.map) return {x.length, {FreeSlot{x.cell, 0, x.length.value(), *x.map, x.label}}};
  return {x.length, {ConstSlot{x.cell, x.label}}};
}

// Pulls a segment list back along omega : L' -> L. Free boundaries move to
// their omega-preimages and each free map is precomposed with its piece.
inline Segments restrict_segments(const Segments& s, const PLMap& omega) {
  Segments out{omega.dom(), {}};
  out.slots.reserve(s.slots.size());
  for (const auto& slot : s.slots) {
    if (const auto* f = std::get_if<FreeSlot>(&slot)) {
      Rational a = eval_inverse(omega, f->start);
      Rational b = eval_inverse(omega, f->end);
      PLMap piece = segment(omega, a, b);
      out.slots.push_back(FreeSlot{f->cell, std::move(a), std::move(b), compose(piece, f->map), f->label});
    } else {
      out.slots.push_back(slot);
    }
  }
  return out;
}

// Normalizes (psi, parts) where each part is already a segment list: split psi
// along the part lengths, pull each part back along its piece, and lay the
// results side by side.
inline Segments combine(const PLMap& psi, std::span<const Segments> parts) {
  Rational total = 0;
  for (const auto& p : parts) total += p.length.value();
  if (total != psi.cod().value())
    throw representative_error("representative: cod(psi) = " + psi.cod().str() + " but parts have total length " + total.str());
  Segments out{psi.dom(), {}};
  Rational cut_v = 0, cut_t = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    cut_v += parts[i].length.value();
    const Rational next_t = i + 1 == parts.size() ? psi.dom().value() : eval_inverse(psi, cut_v);
    Segments pulled = restrict_segments(parts[i], segment(psi, cut_t, next_t));
    for (auto& slot : pulled.slots) {
      if (auto* f = std::get_if<FreeSlot>(&slot)) {
        f->start += cut_t;
        f->end += cut_t;
      }
      out.slots.push_back(std::move(slot));
    }
    cut_t = next_t;
  }
  return out;
}

inline void check_factor_count(std::size_t factors, std::size_t parts) {
  if (factors < 2) throw representative_error("representative: a tensor needs at least two factors");
  if (factors != parts) throw representative_error("representative: one part per factor required");
}

}  // namespace detail

inline TensorClass canonicalize(const RawTriple& r, std::optional<Grouping> grouping = std::nullopt) {
  detail::check_factor_count(r.factors.size(), r.parts.size());
  std::vector<detail::Segments> segs;
  segs.reserve(r.parts.size());
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    if (auto why = check_element(*r.factors[i], r.parts[i]); !why.empty())
      throw representative_error("representative part " + std::to_string(i) + ": " + why);
    segs.push_back(detail::element_segments(r.parts[i]));
  }
  Grouping g = grouping ? std::move(*grouping) : Grouping::left_nested(r.factors.size());
  if (g.leaves() != r.factors.size()) throw grouping_error("grouping has the wrong number of factors");
  auto combined = detail::combine(r.psi, segs);
  return TensorClass{r.factors, std::move(g), std::move(combined.length), std::move(combined.slots)};
}

// Checks the normal-form invariants of a class read from outside. Returns an
// empty string when valid, otherwise the violated invariant.
inline std::string check_class(const TensorClass& c) {
  if (c.factors.size() < 2) return "a tensor class needs at least two factors";
  if (c.slots.size() != c.factors.size()) return "one slot per factor required";
  if (c.grouping.leaves() != c.factors.size()) return "grouping does not match the number of factors";
  Rational cursor = 0;
  bool const_run = false;
  for (std::size_t i = 0; i < c.slots.size(); ++i) {
    const Cell* cell = c.factors[i]->find(slot_cell(c.slots[i]));
    if (!cell) return "slot " + std::to_string(i) + ": unknown cell " + slot_cell(c.slots[i]);
    if (!cell->has_label(slot_label(c.slots[i]))) return "slot " + std::to_string(i) + ": label not in cell";
    if (const auto* f = std::get_if<FreeSlot>(&c.slots[i])) {
      if (!cell->is_free()) return "slot " + std::to_string(i) + ": free slot on a const cell";
      if (const_run ? !(cursor < f->start) : f->start != cursor)
        return "slot " + std::to_string(i) + ": free intervals must abut, with a positive gap exactly where const slots sit";
      if (!(f->start < f->end)) return "slot " + std::to_string(i) + ": empty interval";
      if (f->map.dom().value() != f->end - f->start) return "slot " + std::to_string(i) + ": map dom must equal end - start";
      if (f->map.cod() != *cell->arity) return "slot " + std::to_string(i) + ": map cod must equal the cell arity";
      cursor = f->end;
      const_run = false;
    } else {
      if (cell->is_free()) return "slot " + std::to_string(i) + ": const slot on a free cell";
      const_run = true;
    }
  }
  if (const_run ? !(cursor < c.length.value()) : cursor != c.length.value())
    return "free intervals must end at the length, with a positive gap exactly where const slots sit";
  return {};
}

inline void validate_class(const TensorClass& c) {
  if (auto why = check_class(c); !why.empty()) throw validation_error("tensor class: " + why);
}

// A representative of c: (id_L, parts), with each run of constant slots
// sharing its gap evenly.
inline RawTriple representative(const TensorClass& c) {
  std::vector<std::optional<Element>> parts(c.slots.size());
  Rational cursor = 0;
  std::vector<std::size_t> run;
  auto flush = [&](const Rational& until) {
    if (run.empty()) return;
    const Length each((until - cursor) / Rational(static_cast<std::int64_t>(run.size())));
    for (auto k : run) {
      const auto& s = std::get<ConstSlot>(c.slots[k]);
      parts[k] = Element::constant(s.cell, each, s.label);
    }
    run.clear();
  };
  for (std::size_t i = 0; i < c.slots.size(); ++i) {
    if (const auto* f = std::get_if<FreeSlot>(&c.slots[i])) {
      flush(f->start);
      parts[i] = Element::free(f->cell, f->map, f->label);
      cursor = f->end;
    } else {
      run.push_back(i);
    }
  }
  flush(c.length.value());
  std::vector<Element> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(std::move(*p));
  return RawTriple{c.factors, identity(c.length), std::move(out)};
}

inline TensorClass restrict_class(const TensorClass& c, const PLMap& omega) {
  if (omega.cod() != c.length)
    throw action_error("restrict_class: cod(omega) = " + omega.cod().str() + " but class length = " + c.length.str());
  auto pulled = detail::restrict_segments({c.length, c.slots}, omega);
  return TensorClass{c.factors, c.grouping, std::move(pulled.length), std::move(pulled.slots)};
}

// ---------------------------------------------------------------------------
// Nested representatives: (psi, a, b) where a and b are elements of factors or
// classes of sub-tensors. This is how elements of (D (x) E) (x) F arise.

struct LeafPart {
  PSpacePtr space;
  Element element;
};

using NestedPart = std::variant<LeafPart, TensorClass>;

inline TensorClass canonicalize_nested(const PLMap& psi, const NestedPart& left, const NestedPart& right) {
  std::vector<PSpacePtr> factors;
  std::vector<detail::Segments> segs;
  std::vector<Grouping> groups;
  for (const NestedPart* p : {&left, &right}) {
    if (const auto* leaf = std::get_if<LeafPart>(p)) {
      if (auto why = check_element(*leaf->space, leaf->element); !why.empty())
        throw representative_error("nested representative: " + why);
      factors.push_back(leaf->space);
      segs.push_back(detail::element_segments(leaf->element));
      groups.push_back(Grouping::leaf());
    } else {
      const auto& c = std::get<TensorClass>(*p);
      factors.insert(factors.end(), c.factors.begin(), c.factors.end());
      segs.push_back({c.length, c.slots});
      groups.push_back(c.grouping);
    }
  }
  auto combined = detail::combine(psi, segs);
  return TensorClass{std::move(factors), Grouping::node(std::move(groups[0]), std::move(groups[1])),
                     std::move(combined.length), std::move(combined.slots)};
}

// ---------------------------------------------------------------------------
// Associator. `path` addresses a subtree of the grouping ('l' / 'r' steps);
// the subtree ((A B) C) is regrouped as (A (B C)). Slots are untouched.

namespace detail {

inline Grouping& subtree(Grouping& g, std::string_view path) {
  Grouping* cur = &g;
  for (char step : path) {
    if (cur->is_leaf() || (step != 'l' && step != 'r')) throw grouping_error("associate: invalid path");
    cur = &cur->children[step == 'l' ? 0 : 1];
  }
  return *cur;
}

}  // namespace detail

inline TensorClass associate(const TensorClass& c, std::string_view path = {}) {
  TensorClass out = c;
  Grouping& g = detail::subtree(out.grouping, path);
  if (g.is_leaf() || g.children[0].is_leaf()) throw grouping_error("associate: subtree is not of the form ((A B) C)");
  Grouping ab = std::move(g.children[0]);
  Grouping cpart = std::move(g.children[1]);
  g = Grouping::node(std::move(ab.children[0]), Grouping::node(std::move(ab.children[1]), std::move(cpart)));
  return out;
}

inline TensorClass associate_inverse(const TensorClass& c, std::string_view path = {}) {
  TensorClass out = c;
  Grouping& g = detail::subtree(out.grouping, path);
  if (g.is_leaf() || g.children[1].is_leaf()) throw grouping_error("associate_inverse: subtree is not of the form (A (B C))");
  Grouping apart = std::move(g.children[0]);
  Grouping bc = std::move(g.children[1]);
  g = Grouping::node(Grouping::node(std::move(apart), std::move(bc.children[0])), std::move(bc.children[1]));
  return out;
}

// ---------------------------------------------------------------------------
// Collapse isomorphisms: the coend over l of G(-, l + l') x G(l, l'') is
// G(-, l'' + l') via (psi, phi) |-> (phi (x) id)psi, and symmetrically.

inline PLMap collapse_right(const PLMap& psi, const PLMap& phi) {
  if (!(phi.dom().value() < psi.cod().value()))
    throw collapse_error("collapse_right: cod(psi) = " + psi.cod().str() + " is not of the form dom(phi) + l'");
  return compose(psi, shift_right(Length(psi.cod() - phi.dom()), phi));
}

inline PLMap collapse_left(const PLMap& psi, const PLMap& phi) {
  if (!(phi.dom().value() < psi.cod().value()))
    throw collapse_error("collapse_left: cod(psi) = " + psi.cod().str() + " is not of the form l' + dom(phi)");
  return compose(psi, shift_left(Length(psi.cod() - phi.dom()), phi));
}

// ---------------------------------------------------------------------------
// Closed forms for binary tensors of cells:
//   Free(a, U) (x) Free(b, V) = Free(a + b, U x V)
//   Const(U)   (x) Const(V)   = Const(U x V)
// Mixed pairs have no closed-form cell; their classes stay in normal form.

inline std::string pair_label(const std::string& u, const std::string& v) { return "(" + u + "," + v + ")"; }
inline std::string pair_cell(const std::string& c1, const std::string& c2) { return c1 + "*" + c2; }

struct TensorCell {
  std::string left_cell;
  std::string right_cell;
  std::optional<Cell> closed_form;  // empty for mixed pairs
  std::vector<std::pair<std::string, std::string>> label_pairs;  // aligned with closed_form->labels
};

struct TensorSpace {
  PSpacePtr left;
  PSpacePtr right;
  std::vector<TensorCell> cells;

  [[nodiscard]] const TensorCell* find(const std::string& c1, const std::string& c2) const {
    for (const auto& c : cells)
      if (c.left_cell == c1 && c.right_cell == c2) return &c;
    return nullptr;
  }
  [[nodiscard]] const TensorCell* find(const std::string& closed_id) const {
    for (const auto& c : cells)
      if (c.closed_form && c.closed_form->id == closed_id) return &c;
    return nullptr;
  }
  [[nodiscard]] bool fully_closed() const {
    for (const auto& c : cells)
      if (!c.closed_form) return false;
    return true;
  }
  // The closed-form P-space; only defined when no cell pair is mixed.
  [[nodiscard]] PSpacePtr closed_space() const {
    if (!fully_closed()) throw validation_error("tensor space has mixed free/const cells with no closed form");
    std::vector<Cell> cs;
    for (const auto& c : cells) cs.push_back(*c.closed_form);
    return make_space(std::move(cs));
  }
};

inline TensorSpace tensor_space(const PSpacePtr& d, const PSpacePtr& e) {
  TensorSpace ts{d, e, {}};
  for (const auto& c1 : d->cells())
    for (const auto& c2 : e->cells()) {
      TensorCell tc{c1.id, c2.id, std::nullopt, {}};
      std::vector<std::string> labels;
      for (const auto& u : c1.labels)
        for (const auto& v : c2.labels) {
          tc.label_pairs.emplace_back(u, v);
          labels.push_back(pair_label(u, v));
        }
      if (c1.is_free() && c2.is_free())
        tc.closed_form = Cell::free(pair_cell(c1.id, c2.id), *c1.arity + *c2.arity, std::move(labels));
      else if (!c1.is_free() && !c2.is_free())
        tc.closed_form = Cell::constant(pair_cell(c1.id, c2.id), std::move(labels));
      ts.cells.push_back(std::move(tc));
    }
  return ts;
}

namespace detail {

inline void check_binary_over(const TensorSpace& ts, const TensorClass& c) {
  if (c.arity() != 2 || !same_space(c.factors[0], ts.left) || !same_space(c.factors[1], ts.right))
    throw representative_error("class is not a binary class over this tensor space");
}

}  // namespace detail

// Normal form -> closed-form element; empty for mixed classes.
inline std::optional<Element> to_closed_form(const TensorSpace& ts, const TensorClass& c) {
  detail::check_binary_over(ts, c);
  const auto* tc = ts.find(slot_cell(c.slots[0]), slot_cell(c.slots[1]));
  if (!tc || !tc->closed_form) return std::nullopt;
  const std::string label = pair_label(slot_label(c.slots[0]), slot_label(c.slots[1]));
  if (tc->closed_form->is_free())
    return Element::free(tc->closed_form->id,
                         tensor_map(std::get<FreeSlot>(c.slots[0]).map, std::get<FreeSlot>(c.slots[1]).map), label);
  return Element::constant(tc->closed_form->id, c.length, label);
}

inline TensorClass from_closed_form(const TensorSpace& ts, const Element& x) {
  const auto* tc = ts.find(x.cell);
  if (!tc) throw validation_error("closed form: unknown cell " + x.cell);
  const auto& labels = tc->closed_form->labels;
  auto it = std::find(labels.begin(), labels.end(), x.label);
  if (it == labels.end()) throw validation_error("closed form: label " + x.label + " not in cell " + x.cell);
  const auto& [u, v] = tc->label_pairs[static_cast<std::size_t>(it - labels.begin())];
  std::vector<Slot> slots;
  if (tc->closed_form->is_free()) {
    if (!x.map) throw validation_error("closed form: free cell element needs a map");
    const Length a = *ts.left->find(tc->left_cell)->arity;
    const Length b = *ts.right->find(tc->right_cell)->arity;
    auto [m1, m2] = decompose_map(*x.map, a, b);
    const Rational cut = m1.dom().value();
    slots.push_back(FreeSlot{tc->left_cell, 0, cut, std::move(m1), u});
    slots.push_back(FreeSlot{tc->right_cell, cut, x.length.value(), std::move(m2), v});
  } else {
    slots.push_back(ConstSlot{tc->left_cell, u});
    slots.push_back(ConstSlot{tc->right_cell, v});
  }
  return TensorClass{{ts.left, ts.right}, Grouping::left_nested(2), x.length, std::move(slots)};
}

// Evaluates a morphism D (x) E -> F on a class of (D (x) E)(L).
inline Element apply(const TensorMorphism& m, const TensorClass& c) {
  if (c.arity() != 2 || !same_space(c.factors[0], m.left) || !same_space(c.factors[1], m.right))
    throw morphism_error("apply: class is not over the morphism's source");
  const Generator g1{slot_cell(c.slots[0]), slot_label(c.slots[0])};
  const Generator g2{slot_cell(c.slots[1]), slot_label(c.slots[1])};
  const auto& img = m.assignment.at({g1, g2});
  const auto* f1 = std::get_if<FreeSlot>(&c.slots[0]);
  const auto* f2 = std::get_if<FreeSlot>(&c.slots[1]);
  if (f1 && f2) return restrict(std::get<Element>(img), tensor_map(f1->map, f2->map));
  const auto& t = std::get<ConstTarget>(img);
  return Element::constant(t.cell, c.length, t.label);
}

// ---------------------------------------------------------------------------
// Colimit of a binary tensor and its comparison with the product of colimits.

inline ColimitPoint classify_class(const TensorClass& c) {
  if (c.arity() != 2) throw representative_error("classify_class: binary class expected");
  return {pair_cell(slot_cell(c.slots[0]), slot_cell(c.slots[1])),
          pair_label(slot_label(c.slots[0]), slot_label(c.slots[1]))};
}

struct ColimitTensorWitness {
  std::vector<ColimitPoint> tensor_points;                              // colim(D (x) E)
  std::vector<std::pair<ColimitPoint, ColimitPoint>> product_points;   // aligned images in colim D x colim E
  bool bijective = false;
  std::size_t sampled = 0;
  bool compatible = true;
  std::optional<RawTriple> counterexample;
};

// Builds colim(D (x) E) from the tensor cells, maps it onto colim D x colim E
// and checks that the map is a bijection and that classifying a sampled class
// agrees with classifying its parts.
inline ColimitTensorWitness colimit_tensor_check(const PSpacePtr& d, const PSpacePtr& e,
                                                 std::span<const RawTriple> samples = {}) {
  ColimitTensorWitness w;
  const TensorSpace ts = tensor_space(d, e);
  for (const auto& tc : ts.cells)
    for (const auto& [u, v] : tc.label_pairs) {
      w.tensor_points.push_back({pair_cell(tc.left_cell, tc.right_cell), pair_label(u, v)});
      w.product_points.push_back({{tc.left_cell, u}, {tc.right_cell, v}});
    }
  const Colimit cd = colimit(d);
  const Colimit ce = colimit(e);
  std::set<std::pair<ColimitPoint, ColimitPoint>> product(w.product_points.begin(), w.product_points.end());
  std::set<ColimitPoint> tensor(w.tensor_points.begin(), w.tensor_points.end());
  bool onto = product.size() == cd.points.size() * ce.points.size();
  for (const auto& p : product)
    onto = onto && std::find(cd.points.begin(), cd.points.end(), p.first) != cd.points.end() &&
           std::find(ce.points.begin(), ce.points.end(), p.second) != ce.points.end();
  w.bijective = onto && tensor.size() == w.tensor_points.size() && product.size() == w.product_points.size();

  std::map<ColimitPoint, std::pair<ColimitPoint, ColimitPoint>> to_product;
  for (std::size_t i = 0; i < w.tensor_points.size(); ++i) to_product.emplace(w.tensor_points[i], w.product_points[i]);
  for (const auto& r : samples) {
    ++w.sampled;
    const TensorClass c = canonicalize(r);
    auto it = to_product.find(classify_class(c));
    const bool ok = it != to_product.end() && it->second.first == cd.classify(r.parts[0]) &&
                    it->second.second == ce.classify(r.parts[1]);
    if (!ok && w.compatible) {
      w.compatible = false;
      w.counterexample = r;
    }
  }
  return w;
}

}  // namespace moorecat
