#pragma once

// Seeded generators for lengths and PL maps. Draws are built from raw
// mt19937_64 output (not std distributions) so a seed replays identically
// across standard library implementations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "moorecat/gmaps.hpp"

namespace moorecat {

struct RandomProfile {
  int max_breaks = 6;              // interior breakpoints per map, drawn in [0, max_breaks]
  std::int64_t denominator_bound = 64;
  std::int64_t max_length = 8;     // lengths drawn in (0, max_length]
  std::int64_t length_denominator = 4;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline Length random_length(Rng& rng, const RandomProfile& p = {}) {
  const std::int64_t den = rng.uniform(1, p.length_denominator);
  return Length(rng.uniform(1, p.max_length * den), den);
}

// k distinct values a_i/B in (0, 1), sorted.
inline std::vector<Rational> detail_random_fractions(Rng& rng, int k, std::int64_t bound) {
  k = std::min<int>(k, static_cast<int>(bound - 1));
  std::set<std::int64_t> picks;
  while (static_cast<int>(picks.size()) < k) picks.insert(rng.uniform(1, bound - 1));
  std::vector<Rational> out;
  for (auto a : picks) out.emplace_back(a, bound);
  return out;
}

// A random monotone PL bijection dom -> cod with up to max_breaks interior
// breakpoints on the grid (dom/B)Z x (cod/B)Z.
inline PLMap random_map(Rng& rng, const Length& dom, const Length& cod, const RandomProfile& p = {}) {
  const int k = static_cast<int>(rng.uniform(0, p.max_breaks));
  const std::int64_t bound = std::max<std::int64_t>(2, p.denominator_bound);
  auto ts = detail_random_fractions(rng, k, bound);
  auto vs = detail_random_fractions(rng, k, bound);
  std::vector<Breakpoint> pts{{0, 0}};
  for (std::size_t i = 0; i < ts.size(); ++i) pts.push_back({ts[i] * dom.value(), vs[i] * cod.value()});
  pts.push_back({dom.value(), cod.value()});
  return PLMap::from_breaks(std::move(pts));
}

inline PLMap random_map_from(Rng& rng, const Length& dom, const RandomProfile& p = {}) {
  return random_map(rng, dom, random_length(rng, p), p);
}

inline PLMap random_map_to(Rng& rng, const Length& cod, const RandomProfile& p = {}) {
  return random_map(rng, random_length(rng, p), cod, p);
}

}  // namespace moorecat
