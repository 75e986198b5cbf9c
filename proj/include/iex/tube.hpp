#pragma once

/**
 * @file tube.hpp
 * @brief Randomized abstract tubes with +-1 coefficients.
 *
 * A permutation rho of the set labels defines a selector: every region picks
 * its rho-smallest label.  The complex K_rho consists of the sets sigma such
 * that every nonempty theta in sigma has a witness region tau with
 * theta <= tau and select(tau) in theta.  Every induced subcomplex
 * K_rho[tau] is a cone with apex select(tau), so (F, K_rho) is an abstract
 * tube and
 *
 *     mu(F_1 u ... u F_n) = sum_{I in K_rho} (-1)^{|I|+1} mu(cap_{i in I} F_i).
 *
 * For a uniformly random rho, K_rho has no face larger than d_bound(n, m)
 * with probability at least 1/2, so build_tube redraws until it finds one.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "iex/core.hpp"

namespace iex {

/// Linear order on the labels; select(tau) is the earliest label of tau.
class Selector {
 public:
  /// `order` lists the labels from first to last (rho(1), rho(2), ...), 0-based.
  explicit Selector(std::vector<std::size_t> order) : order_(std::move(order)) {
    rank_.assign(order_.size(), IndexSet::npos);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const std::size_t label = order_[pos];
      if (label >= order_.size() || rank_[label] != IndexSet::npos)
        throw input_error("selector order is not a permutation of the " +
                          std::to_string(order_.size()) + " set labels");
      rank_[label] = pos;
    }
  }

  static Selector identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return Selector(std::move(order));
  }

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::size_t rank(std::size_t label) const { return rank_.at(label); }

  /// The rho-minimal member of a nonempty set.
  std::size_t select(const IndexSet& tau) const {
    std::size_t best = IndexSet::npos;
    std::size_t best_rank = IndexSet::npos;
    tau.for_each([&](std::size_t i) {
      if (rank_.at(i) < best_rank) {
        best_rank = rank_[i];
        best = i;
      }
    });
    if (best == IndexSet::npos) throw contract_error("select() on an empty set");
    return best;
  }

  friend bool operator==(const Selector&, const Selector&) = default;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

inline Selector selector_from_permutation(const VennDiagram& venn, std::vector<std::size_t> rho) {
  if (rho.size() != venn.set_count())
    throw input_error("permutation has " + std::to_string(rho.size()) + " entries, expected " +
                      std::to_string(venn.set_count()));
  return Selector(std::move(rho));
}

/// ceil(2e ln m) * ceil(2 + ln(n / ln m)), capped at n.
inline std::size_t d_bound(std::size_t n, std::size_t m) {
  if (n < 1) throw contract_error("d_bound needs n >= 1");
  if (m < 2) throw contract_error("d_bound needs m >= 2");
  const double ln_m = std::log(static_cast<double>(m));
  const double first = std::ceil(2.0 * std::numbers::e * ln_m);
  const double second = std::ceil(2.0 + std::log(static_cast<double>(n) / ln_m));
  const double raw = first * second;
  return raw >= static_cast<double>(n) ? n : static_cast<std::size_t>(raw);
}

/// Brute-force predicate: some region tau has theta <= tau and select(tau) in theta.
inline bool face_condition(const VennDiagram& venn, const Selector& sel, const IndexSet& theta) {
  if (theta.empty()) throw contract_error("face_condition on the empty set");
  for (const IndexSet& tau : venn.regions())
    if (theta.is_subset_of(tau) && theta.contains(sel.select(tau))) return true;
  return false;
}

namespace detail {

// select(tau) in theta <= tau forces select(tau) = select(theta), so only the
// regions whose apex is theta's earliest label can witness theta.
class ApexIndex {
 public:
  ApexIndex(const VennDiagram& venn, const Selector& sel)
      : sel_(sel), by_apex_(venn.set_count()) {
    for (const IndexSet& tau : venn.regions()) by_apex_[sel.select(tau)].push_back(&tau);
  }

  bool witnessed(const IndexSet& theta) const {
    for (const IndexSet* tau : by_apex_[sel_.select(theta)])
      if (theta.is_subset_of(*tau)) return true;
    return false;
  }

 private:
  const Selector& sel_;
  std::vector<std::vector<const IndexSet*>> by_apex_;
};

}  // namespace detail

/**
 * K_rho, built level by level.  A candidate sigma + {i} is generated only from
 * sigma = candidate minus its largest label, and accepted iff all of its
 * facets were accepted one level down and the candidate itself is witnessed.
 * By induction on size this is exactly the defining condition.
 *
 * Returns nullopt as soon as a face larger than max_size is accepted.
 */
inline std::optional<SimplicialComplex> build_complex(const VennDiagram& venn, const Selector& sel,
                                                      std::size_t max_size) {
  if (max_size < 1) throw contract_error("build_complex needs max_size >= 1");
  if (sel.size() != venn.set_count())
    throw input_error("selector size does not match the number of sets");
  const std::size_t n = venn.set_count();
  const detail::ApexIndex index(venn, sel);

  SimplicialComplex::face_set accepted;
  std::vector<IndexSet> level;
  for (std::size_t i = 0; i < n; ++i) {
    IndexSet v{i};
    if (index.witnessed(v)) level.push_back(std::move(v));
  }
  accepted.insert(level.begin(), level.end());

  std::vector<IndexSet> next;
  while (!level.empty()) {
    next.clear();
    for (const IndexSet& sigma : level) {
      for (std::size_t i = sigma.back() + 1; i < n; ++i) {
        IndexSet cand = sigma.with(i);
        bool facets_ok = true;
        sigma.for_each([&](std::size_t j) {
          facets_ok = facets_ok && accepted.contains(cand.without(j));
        });
        if (!facets_ok || !index.witnessed(cand)) continue;
        if (cand.size() > max_size) return std::nullopt;
        next.push_back(std::move(cand));
      }
    }
    accepted.insert(next.begin(), next.end());
    level.swap(next);
  }
  return SimplicialComplex(n, std::move(accepted));
}

/// The +-1 vector of an abstract tube: (-1)^{|I|+1} on every face I.
inline IEVector tube_ie_vector(const SimplicialComplex& k) {
  IEVector x(k.vertex_count());
  for (const IndexSet& f : k.faces()) x.set(f, f.size() % 2 == 1 ? 1 : -1);
  return x;
}

struct TubeResult {
  SimplicialComplex complex;
  IEVector ie;
  Selector permutation;
  std::size_t restarts = 0;
  std::size_t d_bound = 0;
};

inline constexpr std::size_t default_max_restarts = 64;

/// Uniform random order of n labels (Fisher-Yates).
inline std::vector<std::size_t> random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  return order;
}

/**
 * Draws permutations until K_rho has no face larger than `face_cap`.
 * `max_restarts` bounds the number of permutations tried.
 *
 * With a single region the formula is the one term +1 on that region; the
 * complex reported alongside it is the full simplex on the region.
 */
inline TubeResult build_tube_with_cap(const VennDiagram& venn, std::uint64_t seed,
                                      std::size_t max_restarts, std::size_t face_cap) {
  if (max_restarts < 1) throw contract_error("build_tube needs max_restarts >= 1");
  const std::size_t n = venn.set_count();

  if (venn.size() == 1) {
    IEVector ie(n);
    ie.set(venn[0], 1);
    return TubeResult{SimplicialComplex::closure(n, venn.regions(), std::size_t{1} << 22),
                      std::move(ie), Selector::identity(n), 0, n};
  }

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_restarts; ++attempt) {
    Selector sel(random_order(n, rng));
    if (auto k = build_complex(venn, sel, face_cap)) {
      IEVector ie = tube_ie_vector(*k);
      return TubeResult{std::move(*k), std::move(ie), std::move(sel), attempt, face_cap};
    }
  }
  throw restarts_exhausted(max_restarts);
}

/// The randomized construction with the face-size bound d_bound(n, m).
inline TubeResult build_tube(const VennDiagram& venn, std::uint64_t seed,
                             std::size_t max_restarts = default_max_restarts) {
  const std::size_t cap = venn.size() >= 2 ? d_bound(venn.set_count(), venn.size()) : venn.set_count();
  return build_tube_with_cap(venn, seed, max_restarts, cap);
}

/// Keeps the terms on sets of size <= r (Bonferroni-style truncation).
inline IEVector truncate(const IEVector& ie, std::size_t r) {
  if (r < 1) throw contract_error("truncate needs r >= 1");
  IEVector out(ie.set_count());
  for (const auto& [s, c] : ie.terms())
    if (s.size() <= r) out.set(s, c);
  return out;
}

}  // namespace iex
