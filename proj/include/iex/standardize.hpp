#pragma once

// Region contraction (SetSystem -> VennDiagram) and the nerve.

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "iex/core.hpp"

namespace iex {

inline constexpr std::size_t default_face_budget = std::size_t{1} << 22;

/// Membership IndexSet of a point; empty for points outside every set.
inline const IndexSet& region_of(const SetSystem& fs, std::size_t point) {
  return fs.membership(point);
}

/// Distinct nonempty point memberships, in canonical order.
inline VennDiagram compute_venn(const SetSystem& fs) {
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<IndexSet> regions;
  for (const IndexSet& p : fs.points())
    if (!p.empty() && seen.insert(p).second) regions.push_back(p);
  if (regions.empty()) throw empty_union_error();
  return VennDiagram(fs.set_count(), std::move(regions));
}

/// Region index of every point (npos for points outside the union).
inline std::vector<std::size_t> region_indices(const SetSystem& fs, const VennDiagram& venn) {
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> index;
  for (std::size_t j = 0; j < venn.size(); ++j) index.emplace(venn[j], j);
  std::vector<std::size_t> out;
  out.reserve(fs.ground_size());
  for (const IndexSet& p : fs.points()) {
    auto it = index.find(p);
    out.push_back(it == index.end() ? IndexSet::npos : it->second);
  }
  return out;
}

/// One point per region: the standardized family with the same Venn diagram.
inline SetSystem standardized_system(const VennDiagram& venn) {
  return SetSystem(venn.set_count(), venn.regions(), DuplicateSets::allow);
}

/// Sets with a nonempty common intersection: the downward closure of the regions.
inline SimplicialComplex compute_nerve(const VennDiagram& venn,
                                       std::size_t face_budget = default_face_budget) {
  try {
    return SimplicialComplex::closure(venn.set_count(), venn.regions(), face_budget);
  } catch (const resource_error&) {
    throw resource_error("nerve too large (budget " + std::to_string(face_budget) + " faces)");
  }
}

}  // namespace iex
