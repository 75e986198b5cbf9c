#pragma once

/**
 * @file mobius.hpp
 * @brief The unique IE-vector supported on the Venn diagram.
 *
 * Let B be the m x m incidence matrix with B[j][i] = 1 iff region i is a
 * subset of region j.  In canonical region order B is lower unitriangular,
 * so B * alpha = 1 has exactly one integral solution, obtained by forward
 * substitution:
 *
 *     alpha_j = 1 - sum { alpha_i : region i is a proper subset of region j }
 *
 * The dense matrix is never built; each row is recovered by a subset scan
 * over the earlier regions.
 */

#include <cstddef>
#include <vector>

#include "iex/core.hpp"

namespace iex {

/// alpha_j for every region j, zeros included ("support in V" is all m regions).
inline std::vector<BigInt> mobius_coefficients(const VennDiagram& venn) {
  const std::size_t m = venn.size();
  std::vector<BigInt> alpha(m);
  std::vector<std::size_t> nonzero;  // earlier regions with alpha != 0
  nonzero.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    BigInt below = 0;
    const IndexSet& region = venn[j];
    const std::size_t card = region.size();
    for (std::size_t i : nonzero)
      if (venn[i].size() < card && venn[i].is_subset_of(region)) below += alpha[i];
    alpha[j] = 1 - below;
    if (alpha[j] != 0) nonzero.push_back(j);
  }
  return alpha;
}

/// The Möbius IE-vector; zero coefficients are dropped from the sparse map.
inline IEVector mobius_ie_vector(const VennDiagram& venn) {
  std::vector<BigInt> alpha = mobius_coefficients(venn);
  IEVector x(venn.set_count());
  for (std::size_t j = 0; j < venn.size(); ++j)
    if (alpha[j] != 0) x.set(venn[j], std::move(alpha[j]));
  return x;
}

}  // namespace iex
