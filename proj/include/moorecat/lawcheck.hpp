#pragma once

// Randomized law suites. Each suite is a list of named checks; a check runs a
// number of independent cases and stops at the first counterexample, which is
// recorded as serialized inputs so it can be replayed through the CLI.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "moorecat/braiding.hpp"
#include "moorecat/gmaps.hpp"
#include "moorecat/json_io.hpp"
#include "moorecat/pspaces.hpp"
#include "moorecat/random.hpp"
#include "moorecat/sampling.hpp"
#include "moorecat/tensorcalc.hpp"

namespace moorecat::lawcheck {

inline constexpr std::string_view report_schema = "moorecat-report/1";

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<json> counterexample;
};

struct Suite {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<std::string> covers;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<Suite> suites;

  [[nodiscard]] bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.passed(); });
  }
};

// A case returns a counterexample, or nothing when the law holds.
using Case = std::function<std::optional<json>(Rng&)>;

struct CheckSpec {
  std::string name;
  Case run;
  bool fixture = false;  // deterministic: run once regardless of the case count
};

struct SuiteSpec {
  std::string name;
  std::size_t default_cases;
  std::vector<std::string> covers;
  std::function<std::vector<CheckSpec>(const RandomProfile&)> checks;
};

// FNV-1a then splitmix64: a portable per-(seed, name) stream seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

inline std::optional<json> unless(bool ok, const std::function<json()>& describe) {
  if (ok) return std::nullopt;
  return describe();
}

inline json maps(std::initializer_list<std::pair<const char*, const PLMap*>> ms) {
  json j = json::object();
  for (const auto& [k, f] : ms) j[k] = to_json(*f);
  return j;
}

inline std::vector<Rational> union_grid(std::initializer_list<const PLMap*> ms) {
  std::vector<Rational> ts;
  for (const auto* f : ms)
    for (const auto& b : f->breaks()) ts.push_back(b.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const std::size_t n = ts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) ts.push_back((ts[i] + ts[i + 1]) / 2);
  return ts;
}

inline Length random_split(Rng& rng, const Length& total, const RandomProfile& p) {
  const std::int64_t b = std::max<std::int64_t>(2, p.denominator_bound);
  return Length(total.value() * Rational(rng.uniform(1, b - 1), b));
}

// A random representative together with an equivalent one obtained by a
// generating identification (psi, x.phi) ~ ((... (x) phi (x) ...)psi, x).
// `only` restricts the rewrite to one slot.
struct RewritePair {
  RawTriple lhs;  // (psi, x1 phi1, ..., xn phin)
  RawTriple rhs;  // ((phi1 (x) ... (x) phin) psi, x1, ..., xn)
};

inline RewritePair random_rewrite(Rng& rng, const std::vector<PSpacePtr>& factors, const RandomProfile& p,
                                  std::optional<std::size_t> only = std::nullopt) {
  std::vector<Element> base, acted;
  std::vector<PLMap> phis;
  Rational total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Element x = random_element(rng, *factors[i], p);
    PLMap phi = (!only || *only == i) ? random_map_to(rng, x.length, p) : identity(x.length);
    acted.push_back(restrict(x, phi));
    total += phi.dom().value();
    base.push_back(std::move(x));
    phis.push_back(std::move(phi));
  }
  PLMap psi = random_map_to(rng, Length(total), p);
  PLMap big = phis[0];
  for (std::size_t i = 1; i < phis.size(); ++i) big = tensor_map(big, phis[i]);
  RawTriple lhs{factors, psi, std::move(acted)};
  RawTriple rhs{factors, compose(psi, big), std::move(base)};
  return {std::move(lhs), std::move(rhs)};
}

inline json pair_json(const RawTriple& a, const RawTriple& b) { return {{"lhs", to_json(a)}, {"rhs", to_json(b)}}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

inline std::vector<CheckSpec> gmaps_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"compose-associative",
       [p](Rng& rng) {
         const Length a = random_length(rng, p), b = random_length(rng, p), c = random_length(rng, p), d = random_length(rng, p);
         const PLMap f = random_map(rng, a, b, p), g = random_map(rng, b, c, p), h = random_map(rng, c, d, p);
         return unless(compose(compose(f, g), h) == compose(f, compose(g, h)),
                       [&] { return detail::maps({{"f", &f}, {"g", &g}, {"h", &h}}); });
       }},
      {"identity-units",
       [p](Rng& rng) {
         const PLMap f = random_map_from(rng, random_length(rng, p), p);
         return unless(compose(identity(f.dom()), f) == f && compose(f, identity(f.cod())) == f,
                       [&] { return detail::maps({{"f", &f}}); });
       }},
      {"compose-pointwise",
       [p](Rng& rng) {
         const Length b = random_length(rng, p);
         const PLMap f = random_map_to(rng, b, p), g = random_map_from(rng, b, p);
         const PLMap gf = compose(f, g);
         const PLMap finv = inverse(f);
         // Oracle grid: f's breaks, preimages of g's breaks, and midpoints.
         auto grid = detail::union_grid({&f, &gf});
         for (const auto& q : g.breaks()) grid.push_back(eval(finv, q.t));
         bool ok = true;
         for (const auto& t : grid) ok = ok && eval(gf, t) == eval(g, eval(f, t));
         return unless(ok, [&] { return detail::maps({{"f", &f}, {"g", &g}}); });
       }},
      {"inverse-laws",
       [p](Rng& rng) {
         const PLMap f = random_map_from(rng, random_length(rng, p), p);
         const PLMap fi = inverse(f);
         return unless(compose(f, fi) == identity(f.dom()) && compose(fi, f) == identity(f.cod()) && inverse(fi) == f,
                       [&] { return detail::maps({{"f", &f}}); });
       }},
      {"tensor-associative",
       [p](Rng& rng) {
         const PLMap f1 = random_map_from(rng, random_length(rng, p), p);
         const PLMap f2 = random_map_from(rng, random_length(rng, p), p);
         const PLMap f3 = random_map_from(rng, random_length(rng, p), p);
         return unless(tensor_map(tensor_map(f1, f2), f3) == tensor_map(f1, tensor_map(f2, f3)),
                       [&] { return detail::maps({{"f1", &f1}, {"f2", &f2}, {"f3", &f3}}); });
       }},
      {"tensor-bifunctorial",
       [p](Rng& rng) {
         const Length b1 = random_length(rng, p), b2 = random_length(rng, p);
         const PLMap g1 = random_map_to(rng, b1, p), f1 = random_map_from(rng, b1, p);
         const PLMap g2 = random_map_to(rng, b2, p), f2 = random_map_from(rng, b2, p);
         return unless(compose(tensor_map(g1, g2), tensor_map(f1, f2)) == tensor_map(compose(g1, f1), compose(g2, f2)),
                       [&] { return detail::maps({{"g1", &g1}, {"f1", &f1}, {"g2", &g2}, {"f2", &f2}}); });
       }},
      {"tensor-identity",
       [p](Rng& rng) {
         const Length a = random_length(rng, p), b = random_length(rng, p);
         return unless(tensor_map(identity(a), identity(b)) == identity(a + b),
                       [&] { return json{{"a", a.str()}, {"b", b.str()}}; });
       }},
      {"decompose-after-tensor",
       [p](Rng& rng) {
         const PLMap f1 = random_map_from(rng, random_length(rng, p), p);
         const PLMap f2 = random_map_from(rng, random_length(rng, p), p);
         const auto [g1, g2] = decompose_map(tensor_map(f1, f2), f1.cod(), f2.cod());
         return unless(g1 == f1 && g2 == f2, [&] { return detail::maps({{"f1", &f1}, {"f2", &f2}}); });
       }},
      {"tensor-after-decompose",
       [p](Rng& rng) {
         const PLMap f = random_map_from(rng, random_length(rng, p), p);
         const Length c1 = detail::random_split(rng, f.cod(), p);
         const Length c2(f.cod() - c1);
         const auto [g1, g2] = decompose_map(f, c1, c2);
         const bool ok = tensor_map(g1, g2) == f && g1.cod() == c1 && g1.dom().value() == eval_inverse(f, c1);
         return unless(ok, [&] {
           json j = detail::maps({{"f", &f}});
           j["split"] = {c1.str(), c2.str()};
           return j;
         });
       }},
      {"eval-strictly-increasing",
       [p](Rng& rng) {
         const PLMap f = random_map_from(rng, random_length(rng, p), p);
         auto grid = detail::union_grid({&f});
         std::sort(grid.begin(), grid.end());
         bool ok = true;
         for (std::size_t i = 0; i + 1 < grid.size(); ++i) ok = ok && eval(f, grid[i]) < eval(f, grid[i + 1]);
         return unless(ok, [&] { return detail::maps({{"f", &f}}); });
       }},
      {"canonical-representation",
       [p](Rng& rng) {
         // Refining f with collinear points yields f again; distinct maps with
         // the same dom/cod differ at some breakpoint of either.
         const PLMap f = random_map_from(rng, random_length(rng, p), p);
         std::vector<Breakpoint> dense;
         for (std::size_t i = 0; i < f.breaks().size(); ++i) {
           if (i > 0) {
             const Rational mid = (f.breaks()[i - 1].t + f.breaks()[i].t) / 2;
             dense.push_back({mid, eval(f, mid)});
           }
           dense.push_back(f.breaks()[i]);
         }
         bool ok = PLMap::from_breaks(dense) == f;
         const PLMap g = random_map(rng, f.dom(), f.cod(), p);
         bool differs_somewhere = false;
         for (const auto& t : detail::union_grid({&f, &g})) differs_somewhere = differs_somewhere || eval(f, t) != eval(g, t);
         ok = ok && (f == g) != differs_somewhere;
         return unless(ok, [&] { return detail::maps({{"f", &f}, {"g", &g}}); });
       }},
  };
}

inline std::vector<CheckSpec> shift_checks(const RandomProfile& p) {
  using detail::unless;
  auto identity_case = [p](ShiftSide side) {
    return [p, side](Rng& rng) {
      const Length l = random_length(rng, p), l2 = random_length(rng, p);
      const PLMap s = side == ShiftSide::Left ? shift_left(l, identity(l2)) : shift_right(l, identity(l2));
      return unless(s == identity(l + l2), [&] { return json{{"l", l.str()}, {"l2", l2.str()}}; });
    };
  };
  auto compose_case = [p](ShiftSide side) {
    return [p, side](Rng& rng) {
      const Length l = random_length(rng, p), b = random_length(rng, p);
      const PLMap f = random_map_to(rng, b, p), g = random_map_from(rng, b, p);
      const Shift s{side, l};
      return unless(s.transport(compose(f, g)) == compose(s.transport(f), s.transport(g)), [&] {
        json j = detail::maps({{"f", &f}, {"g", &g}});
        j["l"] = l.str();
        return j;
      });
    };
  };
  auto formula_case = [p](ShiftSide side) {
    return [p, side](Rng& rng) {
      // Pointwise: s^L_l f (t) = t for t <= l, f(t - l) + l beyond; s^R_l f is f then t - dom + cod.
      const Length l = random_length(rng, p);
      const PLMap f = random_map_from(rng, random_length(rng, p), p);
      const PLMap s = Shift{side, l}.transport(f);
      bool ok = s.dom() == f.dom() + l && s.cod() == f.cod() + l;
      for (const auto& t : detail::union_grid({&s})) {
        Rational expect;
        if (side == ShiftSide::Left) expect = t <= l.value() ? t : eval(f, t - l.value()) + l.value();
        else expect = t <= f.dom().value() ? eval(f, t) : t - f.dom().value() + f.cod().value();
        ok = ok && eval(s, t) == expect;
      }
      return unless(ok, [&] {
        json j = detail::maps({{"f", &f}});
        j["l"] = l.str();
        return j;
      });
    };
  };
  return {
      {"left-preserves-identity", identity_case(ShiftSide::Left)},
      {"left-preserves-composition", compose_case(ShiftSide::Left)},
      {"left-pointwise", formula_case(ShiftSide::Left)},
      {"right-preserves-identity", identity_case(ShiftSide::Right)},
      {"right-preserves-composition", compose_case(ShiftSide::Right)},
      {"right-pointwise", formula_case(ShiftSide::Right)},
  };
}

inline std::vector<CheckSpec> coend_checks(const RandomProfile& p) {
  using detail::unless;
  auto factors = [p](Rng& rng) { return random_factors(rng, static_cast<std::size_t>(rng.uniform(2, 3)), p); };
  return {
      {"relation-invariance",
       [p, factors](Rng& rng) {
         const auto rw = detail::random_rewrite(rng, factors(rng), p);
         return unless(canonicalize(rw.lhs) == canonicalize(rw.rhs), [&] { return detail::pair_json(rw.lhs, rw.rhs); });
       }},
      {"single-slot-invariance",
       [p, factors](Rng& rng) {
         const auto fs = factors(rng);
         const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(fs.size()) - 1));
         const auto rw = detail::random_rewrite(rng, fs, p, slot);
         return unless(canonicalize(rw.lhs) == canonicalize(rw.rhs), [&] { return detail::pair_json(rw.lhs, rw.rhs); });
       }},
      {"idempotent",
       [p, factors](Rng& rng) {
         const RawTriple r = random_raw_triple(rng, factors(rng), p);
         const TensorClass c = canonicalize(r);
         return unless(canonicalize(representative(c)) == c && check_class(c).empty(), [&] { return to_json(r); });
       }},
      {"boundary-invariance",
       [p, factors](Rng& rng) {
         // Free intervals are the psi-preimages of the partial sums of the part lengths.
         const auto rw = detail::random_rewrite(rng, factors(rng), p);
         bool ok = true;
         for (const RawTriple* r : {&rw.lhs, &rw.rhs}) {
           const TensorClass c = canonicalize(*r);
           Rational sum = 0;
           for (std::size_t i = 0; i < r->parts.size(); ++i) {
             const Rational lo = eval_inverse(r->psi, sum);
             sum += r->parts[i].length.value();
             const Rational hi = eval_inverse(r->psi, sum);
             if (const auto* f = std::get_if<FreeSlot>(&c.slots[i])) ok = ok && f->start == lo && f->end == hi;
           }
         }
         return unless(ok, [&] { return detail::pair_json(rw.lhs, rw.rhs); });
       }},
      {"restrict-class-matches-representative",
       [p, factors](Rng& rng) {
         const RawTriple r = random_raw_triple(rng, factors(rng), p);
         const PLMap omega = random_map_to(rng, r.psi.dom(), p);
         RawTriple acted{r.factors, compose(omega, r.psi), r.parts};
         return unless(restrict_class(canonicalize(r), omega) == canonicalize(acted), [&] {
           json j = to_json(r);
           j["omega"] = to_json(omega);
           return j;
         });
       }},
      {"restrict-class-functor",
       [p, factors](Rng& rng) {
         const TensorClass c = canonicalize(random_raw_triple(rng, factors(rng), p));
         const PLMap w = random_map_to(rng, c.length, p);
         const PLMap w2 = random_map_to(rng, w.dom(), p);
         return unless(restrict_class(restrict_class(c, w), w2) == restrict_class(c, compose(w2, w)) &&
                           restrict_class(c, identity(c.length)) == c,
                       [&] {
                         json j = to_json(c);
                         j["omega"] = to_json(w);
                         j["omega2"] = to_json(w2);
                         return j;
                       });
       }},
      {"restrict-functor",
       [p](Rng& rng) {
         const PSpacePtr d = random_space(rng, p);
         const Element x = random_element(rng, *d, p);
         const PLMap w1 = random_map_to(rng, x.length, p);
         const PLMap w2 = random_map_to(rng, w1.dom(), p);
         const PLMap w3 = random_map_to(rng, w2.dom(), p);
         const bool ok = restrict(restrict(restrict(x, w1), w2), w3) == restrict(x, compose(w3, compose(w2, w1))) &&
                         restrict(x, identity(x.length)) == x;
         return unless(ok, [&] {
           json j{{"space", to_json(*d)}, {"x", to_json(x)}};
           j.update(detail::maps({{"w1", &w1}, {"w2", &w2}, {"w3", &w3}}));
           return j;
         });
       }},
      {"apply-naturality",
       [p](Rng& rng) {
         const PSpacePtr d = random_space(rng, p);
         const PSpacePtr f = random_target_space(rng, p);
         std::optional<Shift> shift;
         if (rng.coin()) shift = Shift{rng.coin() ? ShiftSide::Left : ShiftSide::Right, random_length(rng, p)};
         const GenMorphism m = random_gen_morphism(rng, d, f, p, shift);
         const Element x = random_element(rng, *d, p);
         const PLMap w = random_map_to(rng, x.length, p);
         const PLMap ws = shift ? shift->transport(w) : w;
         return unless(apply(m, restrict(x, w)) == restrict(apply(m, x), ws) && apply(GenMorphism::identity(d), x) == x, [&] {
           return json{{"source", to_json(*d)}, {"target", to_json(*f)}, {"x", to_json(x)}, {"omega", to_json(w)}};
         });
       }},
      {"collapse-right-pointwise",
       [p](Rng& rng) {
         const Length l = random_length(rng, p), l1 = random_length(rng, p);
         const PLMap psi = random_map_to(rng, l + l1, p);
         const PLMap phi = random_map_from(rng, l, p);
         const PLMap out = collapse_right(psi, phi);
         bool ok = out.cod() == phi.cod() + l1;
         auto grid = detail::union_grid({&psi, &out});
         for (const auto& b : phi.breaks()) grid.push_back(eval_inverse(psi, b.t));
         for (const auto& t : grid) {
           const Rational v = eval(psi, t);
           const Rational expect = v <= l.value() ? eval(phi, v) : v - l.value() + phi.cod().value();
           ok = ok && eval(out, t) == expect;
         }
         return unless(ok, [&] { return detail::maps({{"psi", &psi}, {"phi", &phi}}); });
       }},
      {"collapse-left-pointwise",
       [p](Rng& rng) {
         const Length l = random_length(rng, p), l1 = random_length(rng, p);
         const PLMap psi = random_map_to(rng, l1 + l, p);
         const PLMap phi = random_map_from(rng, l, p);
         const PLMap out = collapse_left(psi, phi);
         bool ok = out.cod() == l1 + phi.cod();
         auto grid = detail::union_grid({&psi, &out});
         for (const auto& b : phi.breaks()) grid.push_back(eval_inverse(psi, b.t + l1.value()));
         for (const auto& t : grid) {
           const Rational v = eval(psi, t);
           const Rational expect = v <= l1.value() ? v : eval(phi, v - l1.value()) + l1.value();
           ok = ok && eval(out, t) == expect;
         }
         return unless(ok, [&] { return detail::maps({{"psi", &psi}, {"phi", &phi}}); });
       }},
      {"collapse-coend-invariance",
       [p](Rng& rng) {
         // (psi'(chi (x) id), phi) and (psi', phi chi) collapse equally, on both sides.
         const Length k = random_length(rng, p), l = random_length(rng, p), l1 = random_length(rng, p);
         const PLMap chi = random_map(rng, k, l, p);
         const PLMap phi = random_map_from(rng, l, p);
         const PLMap psi_r = random_map_to(rng, k + l1, p);
         const PLMap psi_l = random_map_to(rng, l1 + k, p);
         const bool ok = collapse_right(compose(psi_r, shift_right(l1, chi)), phi) == collapse_right(psi_r, compose(chi, phi)) &&
                         collapse_left(compose(psi_l, shift_left(l1, chi)), phi) == collapse_left(psi_l, compose(chi, phi)) &&
                         collapse_right(psi_r, identity(k)) == psi_r;
         return unless(ok, [&] { return detail::maps({{"chi", &chi}, {"phi", &phi}, {"psi_r", &psi_r}, {"psi_l", &psi_l}}); });
       }},
  };
}

inline std::vector<CheckSpec> pentagon_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"pentagon",
       [p](Rng& rng) {
         const auto fs = random_factors(rng, 4, p);
         const RawTriple r = random_raw_triple(rng, fs, p);
         const TensorClass c = canonicalize(r);  // (((D E) F) G)
         const TensorClass top = associate(associate(c));
         const TensorClass bottom = associate(associate(associate(c, "l")), "r");
         const bool ok = top == bottom && top.grouping == Grouping::parse("(x (x (x x)))") && top.slots == c.slots;
         return unless(ok, [&] { return to_json(r); });
       }},
      {"associator-invertible",
       [p](Rng& rng) {
         const RawTriple r = random_raw_triple(rng, random_factors(rng, 3, p), p);
         const TensorClass c = canonicalize(r);
         const TensorClass c2 = associate(c);
         return unless(associate_inverse(c2) == c && associate(associate_inverse(c2)) == c2, [&] { return to_json(r); });
       }},
      {"associator-chase",
       [p](Rng& rng) {
         // ((psi, (phi, x1, x2), x3)) regrouped equals (id, x1 phi1 psi1, (id, x2 phi2 psi2, x3 psi3)).
         const auto fs = random_factors(rng, 3, p);
         const Element x1 = random_element(rng, *fs[0], p);
         const Element x2 = random_element(rng, *fs[1], p);
         const Element x3 = random_element(rng, *fs[2], p);
         const PLMap phi = random_map_to(rng, x1.length + x2.length, p);
         const PLMap psi = random_map_to(rng, phi.dom() + x3.length, p);
         const TensorClass inner = canonicalize(RawTriple{{fs[0], fs[1]}, phi, {x1, x2}});
         const TensorClass left = canonicalize_nested(psi, inner, LeafPart{fs[2], x3});

         const auto [phi1, phi2] = decompose_map(phi, x1.length, x2.length);
         const Length parts[] = {phi1.dom(), phi2.dom(), x3.length};
         const auto psis = decompose_map(psi, parts);
         const Element y1 = restrict(restrict(x1, phi1), psis[0]);
         const Element y2 = restrict(restrict(x2, phi2), psis[1]);
         const Element y3 = restrict(x3, psis[2]);
         const TensorClass inner2 = canonicalize(RawTriple{{fs[1], fs[2]}, identity(y2.length + y3.length), {y2, y3}});
         const TensorClass right = canonicalize_nested(identity(psi.dom()), LeafPart{fs[0], y1}, inner2);
         return unless(associate(left) == right, [&] {
           return json{{"factors", {to_json(*fs[0]), to_json(*fs[1]), to_json(*fs[2])}},
                       {"x", {to_json(x1), to_json(x2), to_json(x3)}},
                       {"phi", to_json(phi)},
                       {"psi", to_json(psi)}};
         });
       }},
  };
}

inline std::vector<CheckSpec> closed_form_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"free-closed-form-bijection",
       [p](Rng& rng) {
         const auto fs = random_factors(rng, 2, p, {CellMix::FreeOnly, 2, 2});
         const TensorSpace ts = tensor_space(fs[0], fs[1]);
         const RawTriple r = random_raw_triple(rng, fs, p);
         const TensorClass c = canonicalize(r);
         const auto x = to_closed_form(ts, c);
         bool ok = x.has_value() && ts.fully_closed();
         if (ok) {
           const PSpacePtr closed = ts.closed_space();
           const Cell* cell = closed->find(x->cell);
           const Cell& c1 = *fs[0]->find(r.parts[0].cell);
           const Cell& c2 = *fs[1]->find(r.parts[1].cell);
           ok = cell && cell->is_free() && *cell->arity == *c1.arity + *c2.arity &&
                cell->labels.size() == c1.labels.size() * c2.labels.size() && from_closed_form(ts, *x) == c;
           const PLMap w = random_map_to(rng, c.length, p);
           ok = ok && to_closed_form(ts, restrict_class(c, w)) == restrict(*x, w);
         }
         return unless(ok, [&] { return to_json(r); });
       }},
      {"free-closed-form-surjective",
       [p](Rng& rng) {
         const auto fs = random_factors(rng, 2, p, {CellMix::FreeOnly, 2, 2});
         const TensorSpace ts = tensor_space(fs[0], fs[1]);
         const PSpacePtr closed = ts.closed_space();
         const Element x = random_element(rng, *closed, p);
         return unless(to_closed_form(ts, from_closed_form(ts, x)) == x,
                       [&] { return json{{"factors", {to_json(*fs[0]), to_json(*fs[1])}}, {"x", to_json(x)}}; });
       }},
      {"const-collapse",
       [p](Rng& rng) {
         // Every representative over Const (x) Const is the class of id_L.
         const auto fs = random_factors(rng, 2, p, {CellMix::ConstOnly, 2, 2});
         const RawTriple r = random_raw_triple(rng, fs, p);
         const Length half(r.psi.dom().value() / 2);
         const RawTriple at_id{fs, identity(r.psi.dom()),
                               {Element::constant(r.parts[0].cell, half, r.parts[0].label),
                                Element::constant(r.parts[1].cell, half, r.parts[1].label)}};
         const TensorSpace ts = tensor_space(fs[0], fs[1]);
         const TensorClass c = canonicalize(r);
         const auto x = to_closed_form(ts, c);
         const bool ok = c == canonicalize(at_id) && x && !x->map &&
                         x->label == pair_label(r.parts[0].label, r.parts[1].label) && from_closed_form(ts, *x) == c;
         return unless(ok, [&] { return to_json(r); });
       }},
      {"const-collapse-fixture",
       [](Rng&) {
         const PSpacePtr d = make_space({Cell::constant("c1", {"u"})});
         const PSpacePtr e = make_space({Cell::constant("c2", {"v"})});
         const PLMap psi = PLMap::from_breaks({{0, 0}, {1, 2}, {3, 3}});
         const RawTriple r{{d, e}, psi, {Element::constant("c1", 1, "u"), Element::constant("c2", 2, "v")}};
         const RawTriple id{{d, e}, identity(3), {Element::constant("c1", 1, "u"), Element::constant("c2", 2, "v")}};
         return unless(psi.breaks().size() == 3 && canonicalize(r) == canonicalize(id),
                       [&] { return detail::pair_json(r, id); });
       },
       true},
  };
}

inline std::vector<CheckSpec> colimit_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"colimit-bijection",
       [p](Rng& rng) {
         const auto fs = random_factors(rng, 2, p);
         std::vector<RawTriple> samples;
         for (int i = 0; i < 10; ++i) samples.push_back(random_raw_triple(rng, fs, p));
         const auto w = colimit_tensor_check(fs[0], fs[1], samples);
         bool ok = w.bijective && w.compatible && w.sampled == 10;
         for (const auto& r : samples) {
           const TensorClass c = canonicalize(r);
           ok = ok && classify_class(restrict_class(c, random_map_to(rng, c.length, p))) == classify_class(c);
         }
         return unless(ok, [&] {
           json j{{"factors", {to_json(*fs[0]), to_json(*fs[1])}}};
           if (w.counterexample) j["sample"] = to_json(*w.counterexample);
           return j;
         });
       }},
      {"colimit-classify-restriction-invariant",
       [p](Rng& rng) {
         const PSpacePtr d = random_space(rng, p);
         const Element x = random_element(rng, *d, p);
         const PLMap w = random_map_to(rng, x.length, p);
         const Colimit c = colimit(d);
         return unless(c.classify(restrict(x, w)) == c.classify(x),
                       [&] { return json{{"space", to_json(*d)}, {"x", to_json(x)}, {"omega", to_json(w)}}; });
       }},
  };
}

inline std::vector<CheckSpec> adjunction_checks(const RandomProfile& p) {
  using detail::unless;
  auto setup = [p](Rng& rng, bool left) {
    const SpaceShape free_only{CellMix::FreeOnly, 2, 2};
    PSpacePtr d = left ? random_space(rng, p, free_only) : random_space(rng, p);
    PSpacePtr e = left ? random_space(rng, p) : random_space(rng, p, free_only);
    PSpacePtr f = random_target_space(rng, p);
    TensorMorphism m = random_tensor_morphism(rng, d, e, f, p);
    return m;
  };
  return {
      {"left-roundtrip",
       [p, setup](Rng& rng) {
         const TensorMorphism m = setup(rng, true);
         const Transpose t = curry_left(m);
         const TensorMorphism back = uncurry_left(m.left, m.right, m.target, t);
         return unless(back == m && curry_left(back) == t, [&] { return to_json(m); });
       }},
      {"right-roundtrip",
       [p, setup](Rng& rng) {
         const TensorMorphism m = setup(rng, false);
         const Transpose t = curry_right(m);
         const TensorMorphism back = uncurry_right(m.left, m.right, m.target, t);
         return unless(back == m && curry_right(back) == t, [&] { return to_json(m); });
       }},
      {"left-evaluation",
       [p, setup](Rng& rng) {
         // m[(id, d, e)] = curry_left(m)(u)(e) . (phi (x) id) for d = (phi, u).
         const TensorMorphism m = setup(rng, true);
         const Element d = random_element(rng, *m.left, p);
         const Element e = random_element(rng, *m.right, p);
         const TensorClass c = canonicalize(RawTriple{{m.left, m.right}, identity(d.length + e.length), {d, e}});
         const Transpose t = curry_left(m);
         const Element via = restrict(apply(t.at({d.cell, d.label}), e), shift_right(e.length, *d.map));
         return unless(apply(m, c) == via, [&] { return json{{"m", to_json(m)}, {"d", to_json(d)}, {"e", to_json(e)}}; });
       }},
      {"right-evaluation",
       [p, setup](Rng& rng) {
         const TensorMorphism m = setup(rng, false);
         const Element d = random_element(rng, *m.left, p);
         const Element e = random_element(rng, *m.right, p);
         const TensorClass c = canonicalize(RawTriple{{m.left, m.right}, identity(d.length + e.length), {d, e}});
         const Transpose t = curry_right(m);
         const Element via = restrict(apply(t.at({e.cell, e.label}), d), shift_left(d.length, *e.map));
         return unless(apply(m, c) == via, [&] { return json{{"m", to_json(m)}, {"d", to_json(d)}, {"e", to_json(e)}}; });
       }},
  };
}

inline std::vector<CheckSpec> braiding_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"braid2-involution",
       [p](Rng& rng) {
         const PLMap phi = random_map_from(rng, Length(2), p);
         return unless(braid2(braid2(phi)) == phi, [&] { return detail::maps({{"phi", &phi}}); });
       }},
      {"braid-map-involution",
       [p](Rng& rng) {
         const Length l1 = random_length(rng, p), l2 = random_length(rng, p);
         const PLMap psi = random_map_to(rng, l1 + l2, p);
         return unless(braid_map(braid_map(psi, l1, l2), l2, l1) == psi, [&] {
           json j = detail::maps({{"psi", &psi}});
           j["split"] = {l1.str(), l2.str()};
           return j;
         });
       }},
      {"braid-map-mu-formula",
       [p](Rng& rng) {
         const Length l1 = random_length(rng, p), l2 = random_length(rng, p);
         const PLMap psi = random_map_to(rng, l1 + l2, p);
         return unless(braid_map(psi, l1, l2) == braid_map_via_mu(psi, l1, l2), [&] {
           json j = detail::maps({{"psi", &psi}});
           j["split"] = {l1.str(), l2.str()};
           return j;
         });
       }},
      {"braid-class-well-defined",
       [p](Rng& rng) {
         const auto rw = detail::random_rewrite(rng, random_factors(rng, 2, p), p);
         return unless(braid_class(canonicalize(rw.lhs)) == braid_class(canonicalize(rw.rhs)),
                       [&] { return detail::pair_json(rw.lhs, rw.rhs); });
       }},
      {"braid-class-matches-construction",
       [p](Rng& rng) {
         // [(psi, x1, x2)] |-> [(B(psi), x2, x1)].
         const RawTriple r = random_raw_triple(rng, random_factors(rng, 2, p), p);
         const RawTriple swapped{{r.factors[1], r.factors[0]},
                                 braid_map(r.psi, r.parts[0].length, r.parts[1].length),
                                 {r.parts[1], r.parts[0]}};
         return unless(braid_class(canonicalize(r)) == canonicalize(swapped), [&] { return to_json(r); });
       }},
      {"braid-class-involution",
       [p](Rng& rng) {
         const RawTriple r = random_raw_triple(rng, random_factors(rng, 2, p), p);
         const TensorClass c = canonicalize(r);
         const TensorClass b = braid_class(c);
         return unless(braid_class(b) == c && check_class(b).empty(), [&] { return to_json(r); });
       }},
  };
}

inline PSpacePtr unit_free_space() { return make_space({Cell::free("c1", 1, {"u"})}); }

// The fixture omega : 2 -> 2 with breaks (0,0), (1/2,1), (2,2).
inline PLMap fixture_omega() { return PLMap::from_breaks({{0, 0}, {Rational(1, 2), 1}, {2, 2}}); }

inline std::vector<CheckSpec> non_naturality_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"fixture-witness",
       [](Rng&) {
         const PSpacePtr d = unit_free_space();
         const NaturalityWitness w = naturality_witness(d, d, fixture_omega());
         const TensorSpace ts = tensor_space(d, d);
         const auto [w1, w2] = decompose_map(fixture_omega(), 1, 1);
         const auto lhs = to_closed_form(ts, w.lhs);
         const auto rhs = to_closed_form(ts, w.rhs);
         const bool ok = !w.equal && w.lhs != w.rhs && lhs && rhs && lhs->map == tensor_map(w1, w2) &&
                         rhs->map == tensor_map(w2, w1) && tensor_map(w1, w2) != tensor_map(w2, w1);
         return unless(ok, [&] { return to_json(w); });
       },
       true},
      {"default-search-finds-witness",
       [](Rng&) {
         const PSpacePtr d = unit_free_space();
         const NaturalityWitness w = naturality_witness(d, d);
         return unless(!w.equal, [&] { return to_json(w); });
       },
       true},
      {"identity-omega-commutes",
       [p](Rng& rng) {
         const PSpacePtr d = random_space(rng, p, {CellMix::FreeOnly, 1, 2});
         const PSpacePtr e = random_space(rng, p);
         const NaturalityWitness w0 = naturality_witness(d, e);
         const NaturalityWitness w = naturality_witness(d, e, identity(w0.x.length));
         return unless(w.equal, [&] { return to_json(w); });
       }},
      {"split-symmetric-omega-commutes",
       [p](Rng& rng) {
         // x splits L = 2 at 1; omega = tau (x) tau is fixed by the braid, so both sides agree.
         const PSpacePtr d = unit_free_space();
         const PLMap tau = random_map(rng, 1, 1, p);
         const NaturalityWitness w = naturality_witness(d, d, tensor_map(tau, tau));
         return unless(w.equal, [&] { return to_json(w); });
       }},
      {"const-const-has-no-witness",
       [p](Rng& rng) {
         const auto fs = random_factors(rng, 2, p, {CellMix::ConstOnly, 2, 2});
         const NaturalityWitness w = naturality_witness(fs[0], fs[1]);
         return unless(w.equal, [&] { return to_json(w); });
       }},
  };
}

// phi2 : 1 -> 1 with breaks (0,0), (1/2,1/4), (1,1).
inline PLMap fixture_phi2() { return PLMap::from_breaks({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {1, 1}}); }

inline RawTriple naive_swap_fixture() {
  const PSpacePtr d = unit_free_space();
  return RawTriple{{d, d}, identity(2), {Element::free("c1", identity(1), "u"), Element::free("c1", fixture_phi2(), "u")}};
}

inline std::vector<CheckSpec> naive_swap_checks(const RandomProfile& p) {
  using detail::unless;
  return {
      {"fixture-disagrees",
       [](Rng&) {
         const NaiveSwapReport r = naive_swap_check(naive_swap_fixture());
         return unless(!r.welldefined && r.braid_agrees, [&] { return to_json(r); });
       },
       true},
      {"trivial-rewrite-consistent",
       [](Rng&) {
         const PSpacePtr d = unit_free_space();
         const RawTriple t{{d, d}, identity(2), {Element::free("c1", identity(1), "u"), Element::free("c1", identity(1), "u")}};
         const NaiveSwapReport r = naive_swap_check(t);
         return unless(r.welldefined && r.braid_agrees, [&] { return to_json(r); });
       },
       true},
      {"braid-positive-control",
       [p](Rng& rng) {
         const RawTriple t = random_raw_triple(rng, random_factors(rng, 2, p), p);
         const NaiveSwapReport r = naive_swap_check(t);
         return unless(r.braid_agrees, [&] { return to_json(r); });
       }},
  };
}

inline const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> suites = {
      {"gmaps-laws", 500, {"reparametrization-category-axioms", "pl-hom-sets", "decomposition-bijection"}, gmaps_checks},
      {"shift-functors", 500, {"left-shift-functor", "right-shift-functor"}, shift_checks},
      {"coend-normalform", 500, {"restriction-action", "tensor-surjection", "right-collapse-lemma", "left-collapse-lemma"},
       coend_checks},
      {"associator-pentagon", 200, {"associator-pentagon"}, pentagon_checks},
      {"ftenseur-ptenseur", 300, {"free-tensor-closed-form", "constant-tensor-closed-form"}, closed_form_checks},
      {"colimit-product", 50, {"colimit-of-tensor"}, colimit_checks},
      {"adjunction-roundtrip", 200, {"biclosed-adjunctions"}, adjunction_checks},
      {"braiding-laws", 300, {"braid-two-involution", "braid-general-formula", "objectwise-braiding"}, braiding_checks},
      {"non-naturality", 1, {"braiding-non-naturality"}, non_naturality_checks},
      {"naive-swap-negative", 1, {"naive-swap-ill-defined"}, naive_swap_checks},
  };
  return suites;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

inline CheckResult run_check(const CheckSpec& spec, std::uint64_t seed, std::size_t cases) {
  CheckResult res{spec.name, true, 0, std::nullopt};
  Rng rng(seed);
  const std::size_t n = spec.fixture ? 1 : cases;
  for (std::size_t i = 0; i < n; ++i) {
    ++res.cases;
    try {
      if (auto cx = spec.run(rng)) {
        res.passed = false;
        res.counterexample = std::move(cx);
        break;
      }
    } catch (const std::exception& ex) {
      res.passed = false;
      res.counterexample = json{{"exception", ex.what()}, {"case", i}};
      break;
    }
  }
  return res;
}

// `cases` overrides the suite's default case count when set.
inline Suite run_suite(std::string_view name, std::uint64_t seed, std::optional<std::size_t> cases = std::nullopt,
                       const RandomProfile& profile = {}) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const SuiteSpec& s) { return s.name == name; });
  if (it == reg.end()) throw usage_error("unknown suite \"" + std::string(name) + "\"");
  Suite s{it->name, seed, cases.value_or(it->default_cases), it->covers, {}};
  const std::uint64_t suite_seed = derive_seed(seed, it->name);
  for (const auto& check : it->checks(profile))
    s.checks.push_back(run_check(check, derive_seed(suite_seed, check.name), s.cases));
  return s;
}

// "all" runs every registered suite, concurrently; results keep registry order.
inline Report run(std::string_view name, std::uint64_t seed, std::optional<std::size_t> cases = std::nullopt,
                  const RandomProfile& profile = {}) {
  Report r{seed, {}};
  if (name != "all") {
    r.suites.push_back(run_suite(name, seed, cases, profile));
    return r;
  }
  std::vector<std::future<Suite>> jobs;
  for (const auto& s : registry())
    jobs.push_back(std::async(std::launch::async, [&s, seed, cases, profile] { return run_suite(s.name, seed, cases, profile); }));
  for (auto& j : jobs) r.suites.push_back(j.get());
  return r;
}

inline json to_json(const Suite& s) {
  json checks = json::array();
  for (const auto& c : s.checks) {
    json jc{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (c.counterexample) jc["counterexample"] = *c.counterexample;
    checks.push_back(std::move(jc));
  }
  return {{"name", s.name}, {"seed", s.seed}, {"cases", s.cases}, {"covers", s.covers}, {"passed", s.passed()},
          {"checks", std::move(checks)}};
}

inline json to_json(const Report& r) {
  json suites = json::array();
  std::size_t checks = 0, failed = 0;
  for (const auto& s : r.suites) {
    suites.push_back(to_json(s));
    for (const auto& c : s.checks) {
      ++checks;
      if (!c.passed) ++failed;
    }
  }
  return {{"schema", report_schema},
          {"seed", r.seed},
          {"suites", std::move(suites)},
          {"totals", {{"suites", r.suites.size()}, {"checks", checks}, {"failed", failed}}},
          {"passed", r.passed()}};
}

}  // namespace moorecat::lawcheck
