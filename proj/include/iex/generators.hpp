#pragma once

/**
 * @file generators.hpp
 * @brief Named families: the uniqueness family, the exponential-coefficient
 *        family, random families, plus the column-duplication test for
 *        l1-minimality.  Projective families live in projective.hpp.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "iex/core.hpp"
#include "iex/projective.hpp"
#include "iex/q_binomial.hpp"
#include "iex/standardize.hpp"

namespace iex {

/**
 * Ground set: the proper subsets T of [n]; point T lies in F_i iff i is not
 * in T.  Points are ordered by the bitmask of T, so point 0 is T = {}.
 * Every nonempty I <= [n] is a region, the nerve equals the Venn diagram and
 * the standard signs are the only IE-vector.
 */
inline SetSystem gen_uniqueness(std::size_t n) {
  if (n < 1 || n > 20) throw input_error("uniqueness family needs 1 <= n <= 20");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<IndexSet> points;
  points.reserve(full);
  for (std::uint64_t t = 0; t < full; ++t) points.push_back(IndexSet::from_mask(full & ~t));
  return SetSystem(n, std::move(points));
}

/**
 * n = y * ell sets on ground set [n]: F_i = {i} u {g(i)+1, ..., n} with
 * g(i) = y * ceil(i / y) (1-based).  Point j lies in F_i iff i = j or j > g(i).
 */
inline SetSystem gen_exponential(std::size_t ell, std::size_t y = 5) {
  if (ell < 1) throw input_error("exponential family needs ell >= 1");
  if (y < 2) throw input_error("exponential family needs y >= 2");
  const std::size_t n = y * ell;
  auto g = [y](std::size_t i) { return y * ((i + y - 1) / y); };
  std::vector<IndexSet> points;
  points.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    IndexSet p;
    for (std::size_t i = 1; i <= n; ++i)
      if (i == j || j > g(i)) p.insert(i - 1);
    points.push_back(std::move(p));
  }
  return SetSystem(n, std::move(points));
}

/// m_target distinct random nonempty subsets of [n], one point each.
inline SetSystem gen_random(std::size_t n, std::size_t m_target, std::uint64_t seed) {
  if (n < 1) throw input_error("random family needs n >= 1");
  const bool small = n < 63;
  const std::uint64_t available = small ? (std::uint64_t{1} << n) - 1 : ~std::uint64_t{0};
  if (m_target < 1 || m_target > available)
    throw input_error("random family: m must lie in [1, 2^n - 1]");
  std::mt19937_64 rng(seed);
  std::vector<IndexSet> regions;
  regions.reserve(m_target);

  if (small && n <= 20 && 2 * m_target > available) {
    // Dense request: partial Fisher-Yates over all nonempty masks.
    std::vector<std::uint64_t> masks(available);
    for (std::uint64_t k = 0; k < available; ++k) masks[k] = k + 1;
    for (std::size_t k = 0; k < m_target; ++k) {
      std::uniform_int_distribution<std::uint64_t> pick(k, available - 1);
      std::swap(masks[k], masks[pick(rng)]);
      regions.push_back(IndexSet::from_mask(masks[k]));
    }
  } else {
    std::unordered_set<IndexSet, IndexSetHash> seen;
    std::bernoulli_distribution coin(0.5);
    while (regions.size() < m_target) {
      IndexSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (coin(rng)) s.insert(i);
      if (!s.empty() && seen.insert(s).second) regions.push_back(std::move(s));
    }
  }
  // Two labels that no drawn region separates give identical sets.
  return SetSystem(n, std::move(regions), DuplicateSets::allow);
}

/**
 * True iff every column of the nerve incidence matrix duplicates a column of
 * the Venn incidence matrix: each nerve face sigma has a region nu with
 * {tau : sigma <= tau} == {tau : nu <= tau}.  When it holds the Möbius
 * vector has minimal l1-norm among all IE-vectors.
 *
 * Faces are grouped by their up-set signature (sorted containing-region
 * indices); each signature must be realized by a region.
 */
inline bool check_lattice_column_property(const VennDiagram& venn,
                                          std::size_t face_budget = default_face_budget) {
  if (venn.set_count() > 20)
    throw resource_error("column property check limited to n <= 20 sets");
  const SimplicialComplex nerve = compute_nerve(venn, face_budget);

  auto signature = [&](const IndexSet& s) {
    std::vector<std::uint32_t> sig;
    for (std::size_t j = 0; j < venn.size(); ++j)
      if (s.is_subset_of(venn[j])) sig.push_back(static_cast<std::uint32_t>(j));
    return sig;
  };

  std::map<std::vector<std::uint32_t>, bool> realized;
  for (const IndexSet& f : nerve.faces()) realized.emplace(signature(f), false);
  for (const IndexSet& region : venn.regions()) realized[signature(region)] = true;
  return std::ranges::all_of(realized, [](const auto& kv) { return kv.second; });
}

}  // namespace iex
