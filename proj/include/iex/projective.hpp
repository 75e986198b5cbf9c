#pragma once

/**
 * @file projective.hpp
 * @brief The subspace lattice of PG(d, q) over a prime field, and the set
 *        system F(L) it induces.
 *
 * Subspaces of F_q^{d+1} are stored by their reduced row-echelon basis, rows
 * ordered by pivot column, which is a canonical form.  Projective dimension
 * is rank - 1; the zero subspace has dimension -1.
 *
 * F(L) has one set per point a (F_a = subspaces containing a) and one ground
 * point per nonzero subspace x, whose membership is the set of points of x.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iex/core.hpp"
#include "iex/q_binomial.hpp"

namespace iex {

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

/// Subspace of F_q^{width} in reduced row-echelon form.
class Subspace {
 public:
  Subspace(std::size_t width, std::vector<std::vector<std::uint32_t>> rows)
      : width_(width), rows_(std::move(rows)) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Projective dimension (rank - 1); -1 for the zero subspace.
  long dimension() const noexcept { return static_cast<long>(rows_.size()) - 1; }
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

namespace detail {

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^{p-2}
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

/// Gauss-Jordan elimination mod p; returns the nonzero rows in RREF.
inline std::vector<std::vector<std::uint32_t>> rref(std::vector<std::vector<std::uint32_t>> rows,
                                                    std::size_t width, std::uint32_t p) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const std::uint64_t inv = mod_inverse(rows[lead][col], p);
    for (auto& v : rows[lead]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < width; ++c)
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + (p - f) * rows[lead][c]) % p);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

}  // namespace detail

class ProjectiveLattice {
 public:
  /// Enumerates every subspace of F_q^{d+1}, grade by grade.
  ProjectiveLattice(std::size_t d, std::uint32_t q, std::size_t element_budget = 1'000'000)
      : d_(d), q_(q) {
    if (d < 1) throw input_error("projective dimension d must be >= 1");
    if (!is_prime(q)) throw input_error("q must be prime (got " + std::to_string(q) + ")");
    if (projective_region_count(d, q) + 1 > element_budget)
      throw resource_error("PG(" + std::to_string(d) + "," + std::to_string(q) +
                           ") exceeds the element budget of " + std::to_string(element_budget));
    const std::size_t width = d + 1;
    for (std::size_t r = 0; r <= width; ++r) enumerate_rank(r);

    for (std::size_t e = 0; e < elements_.size(); ++e)
      if (elements_[e].rank() == 1) point_elements_.push_back(e);
    atoms_.reserve(elements_.size());
    for (const Subspace& x : elements_) {
      IndexSet at;
      for (std::size_t a = 0; a < point_elements_.size(); ++a)
        if (contains_vector(x, elements_[point_elements_[a]].rows()[0])) at.insert(a);
      atoms_.push_back(std::move(at));
    }
  }

  std::size_t dimension() const noexcept { return d_; }
  std::uint32_t field_order() const noexcept { return q_; }
  std::size_t vector_width() const noexcept { return d_ + 1; }

  /// All subspaces including {0}, ordered by rank.
  const std::vector<Subspace>& elements() const noexcept { return elements_; }
  std::size_t point_count() const noexcept { return point_elements_.size(); }

  /// Element index of the point with 0-based atom label a.
  std::size_t point_element(std::size_t a) const { return point_elements_.at(a); }

  /// Labels of the points lying in element e.
  const IndexSet& atoms_below(std::size_t e) const { return atoms_.at(e); }

  /// Number of subspaces of projective dimension k (-1 <= k <= d).
  std::size_t grade_size(long k) const {
    std::size_t c = 0;
    for (const Subspace& x : elements_)
      if (x.dimension() == k) ++c;
    return c;
  }

  bool contains_vector(const Subspace& x, std::vector<std::uint32_t> v) const {
    for (const auto& row : x.rows()) {
      std::size_t pivot = 0;
      while (row[pivot] == 0) ++pivot;
      const std::uint64_t f = v[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = static_cast<std::uint32_t>((v[c] + (q_ - f) * row[c]) % q_);
    }
    for (std::uint32_t c : v)
      if (c != 0) return false;
    return true;
  }

  /// x <= y in the lattice (x is a subspace of y), by a rank test.
  bool leq(std::size_t x, std::size_t y) const {
    for (const auto& row : elements_.at(x).rows())
      if (!contains_vector(elements_.at(y), row)) return false;
    return true;
  }

  /// Span of a set of points.
  Subspace span(const IndexSet& points) const {
    std::vector<std::vector<std::uint32_t>> rows;
    points.for_each([&](std::size_t a) { rows.push_back(elements_[point_elements_.at(a)].rows()[0]); });
    return Subspace(vector_width(), detail::rref(std::move(rows), vector_width(), q_));
  }

  /// Every element equals the span of the points below it.
  bool is_atomistic() const {
    for (std::size_t e = 0; e < elements_.size(); ++e)
      if (!(span(atoms_[e]) == elements_[e])) return false;
    return true;
  }

 private:
  void enumerate_rank(std::size_t r) {
    const std::size_t width = d_ + 1;
    if (r == 0) {
      elements_.emplace_back(width, std::vector<std::vector<std::uint32_t>>{});
      return;
    }
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
      enumerate_free_entries(pivots);
      // next r-combination of {0..width-1}
      std::size_t i = r;
      while (i > 0 && pivots[i - 1] == width - r + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }

  void enumerate_free_entries(const std::vector<std::size_t>& pivots) {
    const std::size_t width = d_ + 1;
    const std::size_t r = pivots.size();
    std::vector<bool> is_pivot(width, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = pivots[i] + 1; c < width; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);

    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      std::vector<std::vector<std::uint32_t>> rows(r, std::vector<std::uint32_t>(width, 0));
      for (std::size_t i = 0; i < r; ++i) rows[i][pivots[i]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
      elements_.emplace_back(width, std::move(rows));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == q_) digits[f++] = 0;
      if (f == digits.size()) break;
    }
  }

  std::size_t d_;
  std::uint32_t q_;
  std::vector<Subspace> elements_;
  std::vector<std::size_t> point_elements_;
  std::vector<IndexSet> atoms_;
};

/// F(L) for the subspace lattice of PG(d, q), along with the lattice itself.
inline std::pair<SetSystem, ProjectiveLattice> gen_projective(std::size_t d, std::uint32_t q,
                                                              std::size_t element_budget = 1'000'000) {
  ProjectiveLattice lattice(d, q, element_budget);
  std::vector<IndexSet> points;
  for (std::size_t e = 0; e < lattice.elements().size(); ++e)
    if (lattice.elements()[e].rank() > 0) points.push_back(lattice.atoms_below(e));
  SetSystem fs(lattice.point_count(), std::move(points));
  return {std::move(fs), std::move(lattice)};
}

}  // namespace iex
