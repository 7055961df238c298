#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "moorecat/moorecat.hpp"

namespace mc_test {

using moorecat::Rational;

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// pl({{0,0},{q(1,2),1},{2,2}})
inline moorecat::PLMap pl(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<moorecat::Breakpoint> bs;
  for (const auto& [t, v] : pts) bs.push_back({t, v});
  return moorecat::PLMap::from_breaks(std::move(bs));
}

}  // namespace mc_test
