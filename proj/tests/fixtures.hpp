#pragma once

#include <vector>

#include "iex/core.hpp"

namespace fixtures {

/// Three sets with regions {1},{2},{3},{1,2},{2,3},{1,2,3} (0-based below).
inline iex::SetSystem three_sets() {
  return iex::SetSystem(3, {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
}

inline iex::VennDiagram three_sets_venn() {
  return iex::VennDiagram(3, {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
}

/// Coefficients (-1)^{|I|+1} on every nonempty I of [n].
inline iex::IEVector standard_vector(std::size_t n) {
  iex::IEVector x(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    x.set(iex::IndexSet::from_mask(mask), __builtin_popcountll(mask) % 2 == 1 ? 1 : -1);
  return x;
}

}  // namespace fixtures
