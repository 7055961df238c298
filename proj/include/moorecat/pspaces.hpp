#pragma once

// Finitely presented G-spaces: finite coproducts of free cells G(-, l0) x U
// and constant cells U, their elements, the restriction action, morphisms
// given on generators, colimits, and the transposes of the two internal-hom
// adjunctions.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "moorecat/errors.hpp"
#include "moorecat/gmaps.hpp"

namespace moorecat {

enum class CellKind { Free, Const };

struct Cell {
  std::string id;
  CellKind kind = CellKind::Const;
  std::optional<Length> arity;  // Free cells only
  std::vector<std::string> labels;

  static Cell free(std::string id, Length arity, std::vector<std::string> labels) {
    Cell c{std::move(id), CellKind::Free, std::move(arity), std::move(labels)};
    c.validate();
    return c;
  }
  static Cell constant(std::string id, std::vector<std::string> labels) {
    Cell c{std::move(id), CellKind::Const, std::nullopt, std::move(labels)};
    c.validate();
    return c;
  }

  [[nodiscard]] bool is_free() const noexcept { return kind == CellKind::Free; }
  [[nodiscard]] bool has_label(const std::string& l) const {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
  }

  void validate() const {
    if (id.empty()) throw validation_error("cell: empty id");
    if (labels.empty()) throw validation_error("cell " + id + ": label set must be nonempty");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw validation_error("cell " + id + ": labels must be duplicate-free");
    if (is_free() != arity.has_value())
      throw validation_error("cell " + id + ": arity is required for free cells and forbidden for const cells");
  }

  friend bool operator==(const Cell&, const Cell&) = default;
};

class PSpace {
 public:
  explicit PSpace(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw validation_error("P-space: needs at least one cell");
    std::set<std::string> ids;
    for (const auto& c : cells_) {
      c.validate();
      if (!ids.insert(c.id).second) throw validation_error("P-space: duplicate cell id " + c.id);
    }
  }

  [[nodiscard]] const std::vector<Cell>& cells() const noexcept { return cells_; }

  [[nodiscard]] const Cell* find(const std::string& id) const {
    for (const auto& c : cells_)
      if (c.id == id) return &c;
    return nullptr;
  }

  [[nodiscard]] bool all_free() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_free(); });
  }

  friend bool operator==(const PSpace&, const PSpace&) = default;

 private:
  std::vector<Cell> cells_;
};

using PSpacePtr = std::shared_ptr<const PSpace>;

inline PSpacePtr make_space(std::vector<Cell> cells) { return std::make_shared<const PSpace>(std::move(cells)); }

inline bool same_space(const PSpacePtr& a, const PSpacePtr& b) { return a == b || (a && b && *a == *b); }

// A point of D(L). Free cells carry (map: L -> arity, label); constant cells
// carry only the label.
struct Element {
  std::string cell;
  Length length;
  std::optional<PLMap> map;
  std::string label;

  static Element free(std::string cell, PLMap map, std::string label) {
    Length l = map.dom();
    return Element{std::move(cell), std::move(l), std::move(map), std::move(label)};
  }
  static Element constant(std::string cell, Length length, std::string label) {
    return Element{std::move(cell), std::move(length), std::nullopt, std::move(label)};
  }

  friend bool operator==(const Element&, const Element&) = default;
};

// Checks that x is a point of `space`. Returns an empty string on success,
// otherwise the violated invariant.
inline std::string check_element(const PSpace& space, const Element& x) {
  const Cell* c = space.find(x.cell);
  if (!c) return "unknown cell " + x.cell;
  if (!c->has_label(x.label)) return "label " + x.label + " not in cell " + x.cell;
  if (c->is_free()) {
    if (!x.map) return "free cell " + x.cell + " requires a map";
    if (x.map->dom() != x.length) return "element map dom must equal its length";
    if (x.map->cod() != *c->arity) return "element map cod must equal the cell arity";
  } else if (x.map) {
    return "const cell " + x.cell + " carries no map";
  }
  return {};
}

inline void validate_element(const PSpace& space, const Element& x) {
  if (auto why = check_element(space, x); !why.empty()) throw validation_error("element: " + why);
}

// x.omega := D(omega)(x), for omega : L' -> L with L = x.length.
inline Element restrict(const Element& x, const PLMap& omega) {
  if (omega.cod() != x.length)
    throw action_error("restrict: cod(omega) = " + omega.cod().str() + " but element length = " + x.length.str());
  if (x.map) return Element::free(x.cell, compose(omega, *x.map), x.label);
  return Element::constant(x.cell, omega.dom(), x.label);
}

// ---------------------------------------------------------------------------
// Morphisms on generators

struct ConstTarget {
  std::string cell;
  std::string label;

  friend bool operator==(const ConstTarget&, const ConstTarget&) = default;
  friend auto operator<=>(const ConstTarget&, const ConstTarget&) = default;
};

enum class ShiftSide { Left, Right };

// Target reindexing for morphisms E -> (s_a)^* F: lengths are shifted by
// `amount` on the given side, and maps are transported by s^L_a or s^R_a.
struct Shift {
  ShiftSide side;
  Length amount;

  [[nodiscard]] PLMap transport(const PLMap& f) const {
    return side == ShiftSide::Left ? shift_left(amount, f) : shift_right(amount, f);
  }

  friend bool operator==(const Shift&, const Shift&) = default;
};

using Generator = std::pair<std::string, std::string>;  // (cell id, label)
using GeneratorImage = std::variant<Element, ConstTarget>;

inline std::vector<Generator> generators(const PSpace& space) {
  std::vector<Generator> out;
  for (const auto& c : space.cells())
    for (const auto& l : c.labels) out.emplace_back(c.id, l);
  return out;
}

namespace detail {

// A free generator of arity a must land on an element of target(a + shift);
// a constant generator must land on a label of a constant cell.
inline void check_image(const PSpace& target, const GeneratorImage& img, const std::optional<Length>& expected_length,
                        const std::string& what) {
  if (expected_length) {
    const auto* e = std::get_if<Element>(&img);
    if (!e) throw morphism_error(what + ": free generator must map to an element");
    if (auto why = check_element(target, *e); !why.empty()) throw morphism_error(what + ": " + why);
    if (e->length != *expected_length)
      throw morphism_error(what + ": image has length " + e->length.str() + ", expected " + expected_length->str());
  } else {
    const auto* t = std::get_if<ConstTarget>(&img);
    if (!t) throw morphism_error(what + ": constant generator must map to a constant cell label");
    const Cell* c = target.find(t->cell);
    if (!c || c->is_free()) throw morphism_error(what + ": constant generators map only to constant cells");
    if (!c->has_label(t->label)) throw morphism_error(what + ": label " + t->label + " not in cell " + t->cell);
  }
}

}  // namespace detail

// A natural transformation source -> target (or source -> shift^* target),
// presented by the image of each generator.
struct GenMorphism {
  PSpacePtr source;
  PSpacePtr target;
  std::optional<Shift> shift;
  std::map<Generator, GeneratorImage> assignment;

  static GenMorphism make(PSpacePtr source, PSpacePtr target, std::map<Generator, GeneratorImage> assignment,
                          std::optional<Shift> shift = std::nullopt) {
    GenMorphism m{std::move(source), std::move(target), std::move(shift), std::move(assignment)};
    m.validate();
    return m;
  }

  static GenMorphism identity(const PSpacePtr& d) {
    std::map<Generator, GeneratorImage> a;
    for (const auto& c : d->cells())
      for (const auto& l : c.labels) {
        if (c.is_free())
          a.emplace(Generator{c.id, l}, Element::free(c.id, moorecat::identity(*c.arity), l));
        else
          a.emplace(Generator{c.id, l}, ConstTarget{c.id, l});
      }
    return make(d, d, std::move(a));
  }

  void validate() const {
    if (!source || !target) throw morphism_error("morphism: missing source or target");
    std::size_t expected = 0;
    for (const auto& c : source->cells()) {
      for (const auto& l : c.labels) {
        ++expected;
        auto it = assignment.find({c.id, l});
        if (it == assignment.end()) throw morphism_error("morphism: generator (" + c.id + ", " + l + ") unassigned");
        std::optional<Length> len;
        if (c.is_free()) len = shift ? *c.arity + shift->amount : *c.arity;
        detail::check_image(*target, it->second, len, "morphism generator (" + c.id + ", " + l + ")");
      }
    }
    if (expected != assignment.size()) throw morphism_error("morphism: assignment names generators not in the source");
  }

  friend bool operator==(const GenMorphism& a, const GenMorphism& b) {
    return same_space(a.source, b.source) && same_space(a.target, b.target) && a.shift == b.shift &&
           a.assignment == b.assignment;
  }
};

// Evaluates m at x. For a free generator image y and x = (phi, u) the result
// is y.phi (transported by the shift when present), which makes naturality
// hold by construction.
inline Element apply(const GenMorphism& m, const Element& x) {
  if (auto why = check_element(*m.source, x); !why.empty()) throw morphism_error("apply: element not in source: " + why);
  const auto& img = m.assignment.at({x.cell, x.label});
  if (x.map) {
    const PLMap along = m.shift ? m.shift->transport(*x.map) : *x.map;
    return restrict(std::get<Element>(img), along);
  }
  const auto& t = std::get<ConstTarget>(img);
  return Element::constant(t.cell, m.shift ? x.length + m.shift->amount : x.length, t.label);
}

// ---------------------------------------------------------------------------
// Colimits

struct ColimitPoint {
  std::string cell;
  std::string label;

  friend bool operator==(const ColimitPoint&, const ColimitPoint&) = default;
  friend auto operator<=>(const ColimitPoint&, const ColimitPoint&) = default;
};

// Each cell's colimit collapses to its label set (x ~ x.phi identifies every
// map over a fixed label), so the colimit of a coproduct is the disjoint
// union of label sets.
struct Colimit {
  PSpacePtr space;
  std::vector<ColimitPoint> points;

  [[nodiscard]] ColimitPoint classify(const Element& x) const {
    validate_element(*space, x);
    return {x.cell, x.label};
  }
};

inline Colimit colimit(const PSpacePtr& d) {
  Colimit out{d, {}};
  for (const auto& [cell, label] : generators(*d)) out.points.push_back({cell, label});
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms out of a binary tensor D (x) E, and the adjunction transposes.

// Generator data of a natural map D (x) E -> F. A pair of free generators
// (arities a, b) maps to an element of F(a + b); every other pair maps to a
// constant cell label of F (a map from a tensor with a constant factor into a
// free cell cannot be natural).
struct TensorMorphism {
  PSpacePtr left;
  PSpacePtr right;
  PSpacePtr target;
  std::map<std::pair<Generator, Generator>, GeneratorImage> assignment;

  static TensorMorphism make(PSpacePtr left, PSpacePtr right, PSpacePtr target,
                             std::map<std::pair<Generator, Generator>, GeneratorImage> assignment) {
    TensorMorphism m{std::move(left), std::move(right), std::move(target), std::move(assignment)};
    m.validate();
    return m;
  }

  void validate() const {
    if (!left || !right || !target) throw morphism_error("tensor morphism: missing space");
    std::size_t expected = 0;
    for (const auto& c1 : left->cells())
      for (const auto& c2 : right->cells())
        for (const auto& u : c1.labels)
          for (const auto& v : c2.labels) {
            ++expected;
            auto it = assignment.find({{c1.id, u}, {c2.id, v}});
            const std::string what = "tensor morphism generator ((" + c1.id + ", " + u + "), (" + c2.id + ", " + v + "))";
            if (it == assignment.end()) throw morphism_error(what + " unassigned");
            std::optional<Length> len;
            if (c1.is_free() && c2.is_free()) len = *c1.arity + *c2.arity;
            detail::check_image(*target, it->second, len, what);
          }
    if (expected != assignment.size()) throw morphism_error("tensor morphism: assignment names unknown generators");
  }

  friend bool operator==(const TensorMorphism& a, const TensorMorphism& b) {
    return same_space(a.left, b.left) && same_space(a.right, b.right) && same_space(a.target, b.target) &&
           a.assignment == b.assignment;
  }
};

// Transpose data: one (shifted) morphism per free generator of the curried factor.
using Transpose = std::map<Generator, GenMorphism>;

// D (x) E -> F  |->  D -> {E, F}_L. The generator (c, u) of D with arity a
// goes to a morphism E -> (s^L_a)^* F.
inline Transpose curry_left(const TensorMorphism& m) {
  if (!m.left->all_free())
    throw transpose_error("curry_left: constant generators of the left factor have no finite transpose");
  Transpose out;
  for (const auto& c1 : m.left->cells())
    for (const auto& u : c1.labels) {
      std::map<Generator, GeneratorImage> a;
      for (const auto& [g2, img] : m.assignment)
        if (g2.first == Generator{c1.id, u}) a.emplace(g2.second, img);
      out.emplace(Generator{c1.id, u}, GenMorphism::make(m.right, m.target, std::move(a), Shift{ShiftSide::Left, *c1.arity}));
    }
  return out;
}

inline TensorMorphism uncurry_left(const PSpacePtr& d, const PSpacePtr& e, const PSpacePtr& f, const Transpose& t) {
  if (!d->all_free())
    throw transpose_error("uncurry_left: constant generators of the left factor have no finite transpose");
  std::map<std::pair<Generator, Generator>, GeneratorImage> a;
  for (const auto& c1 : d->cells())
    for (const auto& u : c1.labels) {
      auto it = t.find({c1.id, u});
      if (it == t.end()) throw transpose_error("uncurry_left: no data for generator (" + c1.id + ", " + u + ")");
      const GenMorphism& g = it->second;
      if (!same_space(g.source, e) || !same_space(g.target, f) || g.shift != Shift{ShiftSide::Left, *c1.arity})
        throw transpose_error("uncurry_left: generator (" + c1.id + ", " + u + ") is not a map E -> (s^L_a)^* F");
      for (const auto& [g2, img] : g.assignment) a.emplace(std::pair{Generator{c1.id, u}, g2}, img);
    }
  if (t.size() != generators(*d).size()) throw transpose_error("uncurry_left: data names unknown generators");
  return TensorMorphism::make(d, e, f, std::move(a));
}

// D (x) E -> F  |->  E -> {D, F}_R. The generator (c, v) of E with arity b
// goes to a morphism D -> (s^R_b)^* F.
inline Transpose curry_right(const TensorMorphism& m) {
  if (!m.right->all_free())
    throw transpose_error("curry_right: constant generators of the right factor have no finite transpose");
  Transpose out;
  for (const auto& c2 : m.right->cells())
    for (const auto& v : c2.labels) {
      std::map<Generator, GeneratorImage> a;
      for (const auto& [g2, img] : m.assignment)
        if (g2.second == Generator{c2.id, v}) a.emplace(g2.first, img);
      out.emplace(Generator{c2.id, v}, GenMorphism::make(m.left, m.target, std::move(a), Shift{ShiftSide::Right, *c2.arity}));
    }
  return out;
}

inline TensorMorphism uncurry_right(const PSpacePtr& d, const PSpacePtr& e, const PSpacePtr& f, const Transpose& t) {
  if (!e->all_free())
    throw transpose_error("uncurry_right: constant generators of the right factor have no finite transpose");
  std::map<std::pair<Generator, Generator>, GeneratorImage> a;
  for (const auto& c2 : e->cells())
    for (const auto& v : c2.labels) {
      auto it = t.find({c2.id, v});
      if (it == t.end()) throw transpose_error("uncurry_right: no data for generator (" + c2.id + ", " + v + ")");
      const GenMorphism& g = it->second;
      if (!same_space(g.source, d) || !same_space(g.target, f) || g.shift != Shift{ShiftSide::Right, *c2.arity})
        throw transpose_error("uncurry_right: generator (" + c2.id + ", " + v + ") is not a map D -> (s^R_b)^* F");
      for (const auto& [g1, img] : g.assignment) a.emplace(std::pair{g1, Generator{c2.id, v}}, img);
    }
  if (t.size() != generators(*e).size()) throw transpose_error("uncurry_right: data names unknown generators");
  return TensorMorphism::make(d, e, f, std::move(a));
}

}  // namespace moorecat
