#pragma once

/**
 * @file core.hpp
 * @brief Domain types shared by every module, and exact evaluation of both
 *        sides of an inclusion-exclusion formula.
 *
 * A family F_1, ..., F_n over a finite ground set is described point by
 * point: each point carries the IndexSet of sets it belongs to.  The Venn
 * diagram keeps only the distinct nonempty memberships ("regions"), sorted in
 * canonical order, which puts every region after all of its proper subsets.
 *
 * Coefficients and measure values are arbitrary-precision integers.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "iex/errors.hpp"
#include "iex/index_set.hpp"

namespace iex {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::string label_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  });
  return out + "}";
}

inline void check_labels(const IndexSet& s, std::size_t n, const char* what) {
  if (s.extent() > n)
    throw input_error(std::string(what) + " " + label_string(s) + " uses a label above n = " +
                      std::to_string(n));
}

}  // namespace detail

enum class DuplicateSets { reject, allow };

/// A family of n sets, given by the membership of each point.
///
/// Sets must be pairwise distinct unless DuplicateSets::allow is passed;
/// random families routinely contain labels that no region separates.
class SetSystem {
 public:
  SetSystem(std::size_t n, std::vector<IndexSet> memberships,
            DuplicateSets policy = DuplicateSets::reject)
      : n_(n), points_(std::move(memberships)) {
    for (const IndexSet& p : points_) detail::check_labels(p, n_, "point membership");
    if (policy == DuplicateSets::reject) reject_duplicate_sets();
  }

  std::size_t set_count() const noexcept { return n_; }
  std::size_t ground_size() const noexcept { return points_.size(); }

  const IndexSet& membership(std::size_t point) const {
    if (point >= points_.size())
      throw input_error("unknown point id " + std::to_string(point) + " (ground set has " +
                        std::to_string(points_.size()) + " points)");
    return points_[point];
  }

  const std::vector<IndexSet>& points() const noexcept { return points_; }

 private:
  void reject_duplicate_sets() const {
    if (n_ < 2) return;
    // Column i of the point/set incidence is the set F_i itself.
    std::vector<std::vector<IndexSet::word_type>> columns(n_);
    const std::size_t words = (points_.size() + 63) / 64;
    for (auto& c : columns) c.assign(words, 0);
    for (std::size_t p = 0; p < points_.size(); ++p)
      points_[p].for_each([&](std::size_t i) { columns[i][p / 64] |= std::uint64_t{1} << (p % 64); });
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
      return columns[a] != columns[b] ? columns[a] < columns[b] : a < b;
    });
    for (std::size_t k = 1; k < n_; ++k)
      if (columns[order[k - 1]] == columns[order[k]])
        throw input_error("sets F_" + std::to_string(order[k - 1] + 1) + " and F_" +
                          std::to_string(order[k] + 1) + " are identical");
  }

  std::size_t n_;
  std::vector<IndexSet> points_;
};

/// The m distinct nonempty regions of a family, in canonical order.
class VennDiagram {
 public:
  VennDiagram(std::size_t n, std::vector<IndexSet> regions) : n_(n), regions_(std::move(regions)) {
    if (regions_.empty()) throw input_error("a Venn diagram needs at least one region");
    for (const IndexSet& r : regions_) {
      if (r.empty()) throw input_error("Venn regions must be nonempty");
      detail::check_labels(r, n_, "region");
    }
    std::ranges::sort(regions_);
    if (auto dup = std::ranges::adjacent_find(regions_); dup != regions_.end())
      throw input_error("duplicate region " + detail::label_string(*dup));
  }

  std::size_t set_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return regions_.size(); }
  const IndexSet& operator[](std::size_t j) const { return regions_[j]; }
  const std::vector<IndexSet>& regions() const noexcept { return regions_; }

  /// Largest region cardinality.
  std::size_t max_region_size() const noexcept { return regions_.back().size(); }

  friend bool operator==(const VennDiagram&, const VennDiagram&) = default;

 private:
  std::size_t n_;
  std::vector<IndexSet> regions_;
};

/// Sparse coefficient vector indexed by nonempty IndexSets; zeros are never stored.
class IEVector {
 public:
  using map_type = std::map<IndexSet, BigInt>;

  explicit IEVector(std::size_t n) : n_(n) {}

  IEVector(std::size_t n, map_type coeffs) : n_(n) {
    for (auto& [s, c] : coeffs) set(s, std::move(c));
  }

  std::size_t set_count() const noexcept { return n_; }

  void set(const IndexSet& s, BigInt c) {
    if (s.empty()) throw input_error("IE-vector keys must be nonempty");
    detail::check_labels(s, n_, "IE-vector key");
    if (c == 0)
      coeffs_.erase(s);
    else
      coeffs_.insert_or_assign(s, std::move(c));
  }

  BigInt coefficient(const IndexSet& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? BigInt{0} : it->second;
  }

  const map_type& terms() const noexcept { return coeffs_; }
  std::size_t support_size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  BigInt max_abs_coefficient() const {
    BigInt best = 0;
    for (const auto& [s, c] : coeffs_) best = std::max<BigInt>(best, abs(c));
    return best;
  }

  std::size_t max_term_size() const noexcept {
    std::size_t best = 0;
    for (const auto& [s, c] : coeffs_) best = std::max(best, s.size());
    return best;
  }

  friend bool operator==(const IEVector&, const IEVector&) = default;

 private:
  std::size_t n_;
  map_type coeffs_;
};

/// Sum of absolute values of the coefficients.
inline BigInt l1_norm(const IEVector& x) {
  BigInt total = 0;
  for (const auto& [s, c] : x.terms()) total += abs(c);
  return total;
}

/// Nonnegative integer weights, one per Venn region (by region index).
class Measure {
 public:
  explicit Measure(std::vector<BigInt> weights) : weights_(std::move(weights)) {
    for (std::size_t j = 0; j < weights_.size(); ++j)
      if (weights_[j] < 0)
        throw input_error("negative weight on region index " + std::to_string(j));
  }

  static Measure uniform(std::size_t m, const BigInt& w = 1) {
    return Measure(std::vector<BigInt>(m, w));
  }

  /// Weight 1 on region j, 0 elsewhere.
  static Measure indicator(std::size_t m, std::size_t j) {
    std::vector<BigInt> w(m, 0);
    w.at(j) = 1;
    return Measure(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  const BigInt& operator[](std::size_t j) const { return weights_[j]; }
  const std::vector<BigInt>& weights() const noexcept { return weights_; }

 private:
  std::vector<BigInt> weights_;
};

/// Hereditary family of nonempty IndexSets (the empty face is implicit).
class SimplicialComplex {
 public:
  using face_set = std::unordered_set<IndexSet, IndexSetHash>;

  explicit SimplicialComplex(std::size_t n) : n_(n) {}

  /// Takes the faces as given; heredity is checked separately by is_hereditary().
  SimplicialComplex(std::size_t n, face_set faces) : n_(n), faces_(std::move(faces)) {
    for (const IndexSet& f : faces_) {
      if (f.empty()) throw input_error("the empty set is not stored as a face");
      detail::check_labels(f, n_, "face");
    }
  }

  /// Every nonempty subset of one of `generators`.
  static SimplicialComplex closure(std::size_t n, const std::vector<IndexSet>& generators,
                                   std::size_t budget) {
    face_set faces;
    std::vector<IndexSet> work;
    for (const IndexSet& g : generators)
      if (!g.empty() && faces.insert(g).second) work.push_back(g);
    while (!work.empty()) {
      IndexSet f = std::move(work.back());
      work.pop_back();
      if (faces.size() > budget) throw resource_error("complex too large");
      if (f.size() == 1) continue;
      f.for_each([&](std::size_t i) {
        IndexSet facet = f.without(i);
        if (faces.insert(facet).second) work.push_back(std::move(facet));
      });
    }
    if (faces.size() > budget) throw resource_error("complex too large");
    return SimplicialComplex(n, std::move(faces));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return faces_.size(); }
  bool contains(const IndexSet& s) const { return faces_.contains(s); }
  const face_set& faces() const noexcept { return faces_; }

  std::vector<IndexSet> sorted_faces() const {
    std::vector<IndexSet> out(faces_.begin(), faces_.end());
    std::ranges::sort(out);
    return out;
  }

  std::size_t dimension_bound() const noexcept {
    std::size_t best = 0;
    for (const IndexSet& f : faces_) best = std::max(best, f.size());
    return best;
  }

  /// True iff every facet of every face of size >= 2 is itself a face.
  bool is_hereditary() const {
    for (const IndexSet& f : faces_) {
      if (f.size() < 2) continue;
      bool ok = true;
      f.for_each([&](std::size_t i) { ok = ok && faces_.contains(f.without(i)); });
      if (!ok) return false;
    }
    return true;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  std::size_t n_;
  face_set faces_;
};

/// Measure of the union: the sum of all region weights.
inline BigInt evaluate_union(const VennDiagram& venn, const Measure& mu) {
  if (mu.size() < venn.size())
    throw input_error("missing weight for region " + detail::label_string(venn[mu.size()]) +
                      " (index " + std::to_string(mu.size()) + ")");
  BigInt total = 0;
  for (std::size_t j = 0; j < venn.size(); ++j) total += mu[j];
  return total;
}

/// Measure of the intersection of the sets in `sigma`.
inline BigInt intersection_measure(const VennDiagram& venn, const Measure& mu,
                                   const IndexSet& sigma) {
  BigInt total = 0;
  for (std::size_t j = 0; j < venn.size(); ++j)
    if (sigma.is_subset_of(venn[j])) total += mu[j];
  return total;
}

/// Right-hand side of the formula: sum over the support of x_s * mu(cap_{i in s} F_i).
inline BigInt evaluate_formula(const VennDiagram& venn, const IEVector& x, const Measure& mu) {
  if (x.set_count() != venn.set_count())
    throw input_error("IE-vector is over " + std::to_string(x.set_count()) +
                      " sets but the Venn diagram has " + std::to_string(venn.set_count()));
  if (mu.size() < venn.size()) evaluate_union(venn, mu);  // raises the missing-weight error
  BigInt total = 0;
  for (const auto& [sigma, c] : x.terms()) {
    BigInt part = intersection_measure(venn, mu, sigma);
    if (part != 0) total += c * part;
  }
  return total;
}

}  // namespace iex
