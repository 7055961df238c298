#pragma once

// Random finitely presented spaces, elements, representatives and morphisms
// for the law checks.

#include <map>
#include <string>
#include <vector>

#include "moorecat/pspaces.hpp"
#include "moorecat/random.hpp"
#include "moorecat/tensorcalc.hpp"

namespace moorecat {

enum class CellMix { FreeOnly, ConstOnly, Any };

struct SpaceShape {
  CellMix mix = CellMix::Any;
  int max_cells = 2;
  int max_labels = 2;
};

inline PSpacePtr random_space(Rng& rng, const RandomProfile& p, SpaceShape shape = {}) {
  const int n = static_cast<int>(rng.uniform(1, shape.max_cells));
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(rng.uniform(1, shape.max_labels));
    std::vector<std::string> labels;
    for (int j = 0; j < k; ++j) labels.push_back("u" + std::to_string(j));
    const bool free = shape.mix == CellMix::FreeOnly || (shape.mix == CellMix::Any && rng.coin());
    std::string id = "c" + std::to_string(i + 1);
    if (free)
      cells.push_back(Cell::free(std::move(id), random_length(rng, p), std::move(labels)));
    else
      cells.push_back(Cell::constant(std::move(id), std::move(labels)));
  }
  return make_space(std::move(cells));
}

inline Element random_element_in(Rng& rng, const Cell& c, const Length& len, const RandomProfile& p) {
  const std::string& label = rng.pick(c.labels);
  if (c.is_free()) return Element::free(c.id, random_map(rng, len, *c.arity, p), label);
  return Element::constant(c.id, len, label);
}

inline Element random_element(Rng& rng, const PSpace& d, const RandomProfile& p) {
  return random_element_in(rng, rng.pick(d.cells()), random_length(rng, p), p);
}

inline Element random_element(Rng& rng, const PSpace& d, const Length& len, const RandomProfile& p) {
  return random_element_in(rng, rng.pick(d.cells()), len, p);
}

inline RawTriple random_raw_triple(Rng& rng, const std::vector<PSpacePtr>& factors, const RandomProfile& p) {
  std::vector<Element> parts;
  Rational total = 0;
  for (const auto& d : factors) {
    parts.push_back(random_element(rng, *d, p));
    total += parts.back().length.value();
  }
  return RawTriple{factors, random_map_to(rng, Length(total), p), std::move(parts)};
}

inline std::vector<PSpacePtr> random_factors(Rng& rng, std::size_t n, const RandomProfile& p, SpaceShape shape = {}) {
  std::vector<PSpacePtr> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_space(rng, p, shape));
  return out;
}

// A random image for a generator: an element of target(len) for free
// generators (len set), a constant label otherwise. The target must have a
// constant cell whenever a constant image is requested.
inline GeneratorImage random_image(Rng& rng, const PSpace& target, const std::optional<Length>& len, const RandomProfile& p) {
  if (len) return random_element(rng, target, *len, p);
  std::vector<Cell> consts;
  for (const auto& c : target.cells())
    if (!c.is_free()) consts.push_back(c);
  const Cell& c = rng.pick(consts);
  return ConstTarget{c.id, rng.pick(c.labels)};
}

// Target spaces always get a constant cell so that every generator kind has
// somewhere to go.
inline PSpacePtr random_target_space(Rng& rng, const RandomProfile& p) {
  auto base = random_space(rng, p);
  std::vector<Cell> cells = base->cells();
  cells.push_back(Cell::constant("k", {"w0", "w1"}));
  return make_space(std::move(cells));
}

inline GenMorphism random_gen_morphism(Rng& rng, const PSpacePtr& source, const PSpacePtr& target, const RandomProfile& p,
                                       std::optional<Shift> shift = std::nullopt) {
  std::map<Generator, GeneratorImage> a;
  for (const auto& c : source->cells())
    for (const auto& l : c.labels) {
      std::optional<Length> len;
      if (c.is_free()) len = shift ? *c.arity + shift->amount : *c.arity;
      a.emplace(Generator{c.id, l}, random_image(rng, *target, len, p));
    }
  return GenMorphism::make(source, target, std::move(a), std::move(shift));
}

inline TensorMorphism random_tensor_morphism(Rng& rng, const PSpacePtr& d, const PSpacePtr& e, const PSpacePtr& f,
                                             const RandomProfile& p) {
  std::map<std::pair<Generator, Generator>, GeneratorImage> a;
  for (const auto& c1 : d->cells())
    for (const auto& c2 : e->cells())
      for (const auto& u : c1.labels)
        for (const auto& v : c2.labels) {
          std::optional<Length> len;
          if (c1.is_free() && c2.is_free()) len = *c1.arity + *c2.arity;
          a.emplace(std::pair{Generator{c1.id, u}, Generator{c2.id, v}}, random_image(rng, *f, len, p));
        }
  return TensorMorphism::make(d, e, f, std::move(a));
}

}  // namespace moorecat
