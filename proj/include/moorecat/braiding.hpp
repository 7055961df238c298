#pragma once

// The objectwise braiding of G-spaces. It swaps the two halves of a
// representative after splitting psi at the factor boundary; it is well
// defined on classes but not natural in L.

#include <optional>
#include <utility>
#include <vector>

#include "moorecat/errors.hpp"
#include "moorecat/gmaps.hpp"
#include "moorecat/pspaces.hpp"
#include "moorecat/tensorcalc.hpp"

namespace moorecat {

// B2 on G(2, L'): phi = phi1 (x) phi2 with dom phi_i = 1  |->  phi2 (x) phi1.
inline PLMap braid2(const PLMap& phi) {
  if (phi.dom() != Length(2)) throw braid_error("braid2: domain must be 2, got " + phi.dom().str());
  const Rational mid = eval(phi, 1);
  auto [p1, p2] = decompose_map(phi, Length(mid), Length(phi.cod() - Length(mid)));
  return tensor_map(p2, p1);
}

// B_L^{l1,l2} : G(L, l1 + l2) -> G(L, l2 + l1), psi1 (x) psi2 |-> psi2 (x) psi1.
inline PLMap braid_map(const PLMap& psi, const Length& l1, const Length& l2) {
  if (psi.cod() != l1 + l2)
    throw braid_error("braid_map: cod(psi) = " + psi.cod().str() + " but split sums to " + (l1 + l2).str());
  auto [p1, p2] = decompose_map(psi, l1, l2);
  return tensor_map(p2, p1);
}

// The same map obtained by conjugating B2 with the scalings mu:
//   B(psi) = B2(psi (mu_m1^-1 (x) mu_m2^-1)) (mu_m2 (x) mu_m1),  m1 = psi^-1(l1).
inline PLMap braid_map_via_mu(const PLMap& psi, const Length& l1, const Length& l2) {
  if (psi.cod() != l1 + l2)
    throw braid_error("braid_map_via_mu: cod(psi) = " + psi.cod().str() + " but split sums to " + (l1 + l2).str());
  const Length m1(eval_inverse(psi, l1));
  const Length m2(psi.dom() - m1);
  const PLMap normalized = compose(tensor_map(inverse(mu(m1)), inverse(mu(m2))), psi);
  return compose(tensor_map(mu(m2), mu(m1)), braid2(normalized));
}

// B : (D (x) E)(L) -> (E (x) D)(L) on segment normal forms: the E-content is
// moved to the front and the D-content follows, each keeping its map.
inline TensorClass braid_class(const TensorClass& c) {
  if (c.arity() != 2) throw braid_error("braid_class: binary class expected, got " + std::to_string(c.arity()) + " factors");
  const Rational& len = c.length.value();
  const auto* f1 = std::get_if<FreeSlot>(&c.slots[0]);
  const auto* f2 = std::get_if<FreeSlot>(&c.slots[1]);
  // Width of the first factor's block, when it is determined.
  std::optional<Rational> first_width;
  if (f1) first_width = f1->end;
  else if (f2) first_width = f2->start;

  std::vector<Slot> slots;
  if (!first_width) {
    slots = {c.slots[1], c.slots[0]};
  } else {
    const Rational second_width = len - *first_width;
    Slot s2 = c.slots[1];
    if (auto* f = std::get_if<FreeSlot>(&s2)) {
      f->start = 0;
      f->end = second_width;
    }
    Slot s1 = c.slots[0];
    if (auto* f = std::get_if<FreeSlot>(&s1)) {
      f->start = second_width;
      f->end = len;
    }
    slots = {std::move(s2), std::move(s1)};
  }
  return TensorClass{{c.factors[1], c.factors[0]}, c.grouping, c.length, std::move(slots)};
}

// ---------------------------------------------------------------------------

struct NaturalityWitness {
  TensorClass x;
  PLMap omega;
  TensorClass lhs;  // restrict_class(braid_class(x), omega)
  TensorClass rhs;  // braid_class(restrict_class(x, omega))
  bool equal = true;
};

namespace detail {

inline Element base_point(const PSpacePtr& d) {
  for (const auto& c : d->cells())
    if (c.is_free()) return Element::free(c.id, identity(*c.arity), c.labels.front());
  const auto& c = d->cells().front();
  return Element::constant(c.id, Length(1), c.labels.front());
}

}  // namespace detail

// Compares the two ways around the naturality square of B for a base class
// x = [(id_L, x1, x2)] (x_i the first generator of each factor at identity)
// and omega : L -> L. Without an explicit omega, tries a few nonlinear
// candidates and returns the first that separates the sides.
inline NaturalityWitness naturality_witness(const PSpacePtr& d, const PSpacePtr& e,
                                            const std::optional<PLMap>& omega = std::nullopt) {
  const Element x1 = detail::base_point(d);
  const Element x2 = detail::base_point(e);
  const Length len = x1.length + x2.length;
  const TensorClass x = canonicalize(RawTriple{{d, e}, identity(len), {x1, x2}});

  std::vector<PLMap> candidates;
  if (omega) {
    candidates.push_back(*omega);
  } else {
    const Rational l = len.value();
    candidates.push_back(PLMap::from_breaks({{0, 0}, {l / 4, l / 2}, {l, l}}));
    candidates.push_back(PLMap::from_breaks({{0, 0}, {l / 2, l / 4}, {l, l}}));
    candidates.push_back(PLMap::from_breaks({{0, 0}, {l * Rational(3, 4), l / 4}, {l, l}}));
  }
  std::optional<NaturalityWitness> first;
  for (const auto& w : candidates) {
    NaturalityWitness out{x, w, restrict_class(braid_class(x), w), braid_class(restrict_class(x, w)), true};
    out.equal = out.lhs == out.rhs;
    if (!out.equal) return out;
    if (!first) first = std::move(out);
  }
  return std::move(*first);
}

// ---------------------------------------------------------------------------

struct NaiveSwapReport {
  RawTriple original;
  RawTriple rewritten;       // an equivalent representative
  TensorClass canon1;        // naive swap of original, in E (x) D
  TensorClass canon2;        // naive swap of rewritten, in E (x) D
  bool welldefined = false;  // canon1 == canon2
  bool braid_agrees = false; // braid_class agrees on both representatives
};

// The rewrite pulls each free part's map into psi:
//   (psi, (f1, u), (f2, v)) ~ ((f1 (x) f2) psi, (id, u), (id, v)).
inline RawTriple pull_out_maps(const RawTriple& r) {
  if (r.parts.size() != 2) throw braid_error("naive swap: binary representative expected");
  std::vector<Element> parts;
  std::vector<PLMap> pulled;
  for (const auto& x : r.parts) {
    if (x.map) {
      pulled.push_back(*x.map);
      parts.push_back(Element::free(x.cell, identity(x.map->cod()), x.label));
    } else {
      pulled.push_back(identity(x.length));
      parts.push_back(x);
    }
  }
  return RawTriple{r.factors, compose(r.psi, tensor_map(pulled[0], pulled[1])), std::move(parts)};
}

inline NaiveSwapReport naive_swap_check(const RawTriple& r) {
  RawTriple rewritten = pull_out_maps(r);
  auto swap = [](const RawTriple& t) {
    return RawTriple{{t.factors[1], t.factors[0]}, t.psi, {t.parts[1], t.parts[0]}};
  };
  TensorClass c1 = canonicalize(swap(r));
  TensorClass c2 = canonicalize(swap(rewritten));
  const bool braid_ok = braid_class(canonicalize(r)) == braid_class(canonicalize(rewritten));
  const bool same = c1 == c2;
  return NaiveSwapReport{r, std::move(rewritten), std::move(c1), std::move(c2), same, braid_ok};
}

}  // namespace moorecat
