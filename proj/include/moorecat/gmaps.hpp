#pragma once

// Morphisms of the reparametrization category G, restricted to piecewise
// linear maps with rational breakpoints: monotone bijections [0,l] -> [0,l'].

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "moorecat/errors.hpp"
#include "moorecat/rational.hpp"

namespace moorecat {

struct Breakpoint {
  Rational t;  // input
  Rational v;  // output

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// A nondecreasing PL homeomorphism [0, dom] -> [0, cod].
//
// The break list is kept minimal (no three consecutive collinear points), so
// two maps are equal as functions iff their break lists are identical.
class PLMap {
 public:
  // Validates and canonicalizes. The list must start at (0,0) and be strictly
  // increasing in both coordinates; dom and cod are read off the last point.
  static PLMap from_breaks(std::vector<Breakpoint> pts) {
    if (pts.size() < 2) throw validation_error("PLMap: needs at least two breakpoints");
    if (pts.front().t.sign() != 0 || pts.front().v.sign() != 0)
      throw validation_error("PLMap: first breakpoint must be (0,0)");
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (!(pts[i - 1].t < pts[i].t) || !(pts[i - 1].v < pts[i].v))
        throw validation_error("PLMap: breakpoints must be strictly increasing in both coordinates (monotone bijection)");
    }
    return PLMap(std::move(pts), canonical_tag{});
  }

  [[nodiscard]] Length dom() const { return Length(breaks_.back().t); }
  [[nodiscard]] Length cod() const { return Length(breaks_.back().v); }
  [[nodiscard]] const std::vector<Breakpoint>& breaks() const noexcept { return breaks_; }

  friend bool operator==(const PLMap&, const PLMap&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PLMap& f) {
    os << '[';
    for (std::size_t i = 0; i < f.breaks_.size(); ++i) {
      if (i) os << ',';
      os << '(' << f.breaks_[i].t << ',' << f.breaks_[i].v << ')';
    }
    return os << ']';
  }

 private:
  struct canonical_tag {};

  // pts is assumed strictly increasing; merges collinear interior points.
  PLMap(std::vector<Breakpoint> pts, canonical_tag) {
    breaks_.reserve(pts.size());
    for (auto& p : pts) {
      while (breaks_.size() >= 2) {
        const auto& a = breaks_[breaks_.size() - 2];
        const auto& b = breaks_.back();
        if ((b.v - a.v) * (p.t - b.t) != (p.v - b.v) * (b.t - a.t)) break;
        breaks_.pop_back();
      }
      breaks_.push_back(std::move(p));
    }
  }

  friend PLMap detail_trusted(std::vector<Breakpoint> pts);

  std::vector<Breakpoint> breaks_;
};

// Builds from a list already known to be valid (strictly increasing, starts
// at the origin). Internal operations use this to skip re-validation.
inline PLMap detail_trusted(std::vector<Breakpoint> pts) { return PLMap(std::move(pts), PLMap::canonical_tag{}); }

namespace detail {

inline Rational lerp(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
  return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

inline Rational lerp_inverse(const Breakpoint& a, const Breakpoint& b, const Rational& v) {
  return a.t + (b.t - a.t) * (v - a.v) / (b.v - a.v);
}

}  // namespace detail

inline PLMap identity(const Length& l) { return detail_trusted({{0, 0}, {l.value(), l.value()}}); }

// mu_l : [0,l] -> [0,1], t |-> t/l.
inline PLMap mu(const Length& l) { return detail_trusted({{0, 0}, {l.value(), 1}}); }

inline Rational eval(const PLMap& f, const Rational& t) {
  const auto& b = f.breaks();
  if (t.sign() < 0 || t > b.back().t)
    throw domain_error("eval: t = " + t.str() + " outside [0, " + b.back().t.str() + "]");
  auto it = std::upper_bound(b.begin(), b.end(), t, [](const Rational& x, const Breakpoint& p) { return x < p.t; });
  if (it == b.end()) return b.back().v;
  return detail::lerp(*std::prev(it), *it, t);
}

// f^{-1}(v), without materializing the inverse map.
inline Rational eval_inverse(const PLMap& f, const Rational& v) {
  const auto& b = f.breaks();
  if (v.sign() < 0 || v > b.back().v)
    throw domain_error("eval_inverse: v = " + v.str() + " outside [0, " + b.back().v.str() + "]");
  auto it = std::upper_bound(b.begin(), b.end(), v, [](const Rational& x, const Breakpoint& p) { return x < p.v; });
  if (it == b.end()) return b.back().t;
  return detail::lerp_inverse(*std::prev(it), *it, v);
}

inline PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.breaks().size());
  for (const auto& p : f.breaks()) pts.push_back({p.v, p.t});
  return detail_trusted(std::move(pts));
}

// Diagrammatic order: compose(f, g) = g . f, so f is applied first.
inline PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.cod() != g.dom())
    throw composition_error("compose: cod(f) = " + f.cod().str() + " but dom(g) = " + g.dom().str());
  // Breaks of g . f sit at f's breaks and at preimages of g's breaks; both
  // lists are sorted, so merge them.
  const auto& fb = f.breaks();
  const auto& gb = g.breaks();
  std::vector<Breakpoint> pts;
  pts.reserve(fb.size() + gb.size());
  std::size_t i = 0, j = 0;
  while (i < fb.size() || j < gb.size()) {
    Rational t, mid;
    if (j == gb.size() || (i < fb.size() && fb[i].v < gb[j].t)) {
      t = fb[i].t;
      mid = fb[i].v;
      ++i;
    } else if (i == fb.size() || gb[j].t < fb[i].v) {
      mid = gb[j].t;
      t = eval_inverse(f, mid);
      ++j;
    } else {
      t = fb[i].t;
      mid = fb[i].v;
      ++i;
      ++j;
    }
    pts.push_back({std::move(t), eval(g, mid)});
  }
  return detail_trusted(std::move(pts));
}

// (f1 (x) f2)(t) = f1(t) on [0, dom f1], f2(t - dom f1) + cod f1 beyond.
inline PLMap tensor_map(const PLMap& f1, const PLMap& f2) {
  std::vector<Breakpoint> pts(f1.breaks());
  const Rational dt = f1.dom().value();
  const Rational dv = f1.cod().value();
  for (std::size_t k = 1; k < f2.breaks().size(); ++k) {
    const auto& p = f2.breaks()[k];
    pts.push_back({p.t + dt, p.v + dv});
  }
  return detail_trusted(std::move(pts));
}

// The restriction of f to the domain interval [a, b], translated so that it
// starts at the origin: a map (b - a) -> (f(b) - f(a)).
inline PLMap segment(const PLMap& f, const Rational& a, const Rational& b) {
  if (a.sign() < 0 || !(a < b) || b > f.dom().value())
    throw domain_error("segment: [" + a.str() + ", " + b.str() + "] is not a subinterval of [0, " + f.dom().str() + "]");
  const Rational fa = eval(f, a);
  std::vector<Breakpoint> pts{{0, 0}};
  for (const auto& p : f.breaks())
    if (a < p.t && p.t < b) pts.push_back({p.t - a, p.v - fa});
  pts.push_back({b - a, eval(f, b) - fa});
  return detail_trusted(std::move(pts));
}

// Splits f along a codomain decomposition cod = parts[0] + ... + parts[n-1].
// Returns the unique maps f_i with f = f_0 (x) ... (x) f_{n-1}.
inline std::vector<PLMap> decompose_map(const PLMap& f, std::span<const Length> parts) {
  if (parts.empty()) throw split_error("decompose: empty split");
  Rational total = 0;
  for (const auto& p : parts) total += p.value();
  if (total != f.cod().value())
    throw split_error("decompose: split lengths sum to " + total.str() + " but cod = " + f.cod().str());
  std::vector<PLMap> out;
  out.reserve(parts.size());
  Rational cut_v = 0, cut_t = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    cut_v += parts[k].value();
    const Rational next_t = k + 1 == parts.size() ? f.dom().value() : eval_inverse(f, cut_v);
    out.push_back(segment(f, cut_t, next_t));
    cut_t = next_t;
  }
  return out;
}

inline std::pair<PLMap, PLMap> decompose_map(const PLMap& f, const Length& c1, const Length& c2) {
  const Length parts[] = {c1, c2};
  auto pieces = decompose_map(f, parts);
  return {std::move(pieces[0]), std::move(pieces[1])};
}

// Left shift functor: f |-> id_l (x) f.
inline PLMap shift_left(const Length& l, const PLMap& f) { return tensor_map(identity(l), f); }

// Right shift functor: f |-> f (x) id_l.
inline PLMap shift_right(const Length& l, const PLMap& f) { return tensor_map(f, identity(l)); }

}  // namespace moorecat
