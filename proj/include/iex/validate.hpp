#pragma once

/**
 * @file validate.hpp
 * @brief Certificates for IE-vectors and abstract tubes.
 *
 * x is an IE-vector iff for every region tau the coefficients of the support
 * sets contained in tau sum to 1 (A x = 1).  check_ie_vector decides that
 * exactly; measure_oracle_check cross-checks it by evaluating both sides of
 * the formula on concrete measures.
 *
 * Contractibility of an induced subcomplex is certified by two decidable
 * surrogates: Euler characteristic 1 (necessary) and the cone property
 * around select(tau) (sufficient).
 *
 * Every check returns a structured report rather than a bool.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "iex/core.hpp"
#include "iex/tube.hpp"

namespace iex {

inline constexpr std::uint64_t max_random_weight = 1'000'000;

namespace detail {

/// Containing-region lists for each support term, reused across measures.
class FormulaEvaluator {
 public:
  FormulaEvaluator(const VennDiagram& venn, const IEVector& x) : venn_(venn) {
    if (x.set_count() != venn.set_count())
      throw input_error("IE-vector is over " + std::to_string(x.set_count()) +
                        " sets but the Venn diagram has " + std::to_string(venn.set_count()));
    for (const auto& [sigma, c] : x.terms()) {
      Term t{sigma.size(), c, {}};
      for (std::size_t j = 0; j < venn.size(); ++j)
        if (sigma.is_subset_of(venn[j])) t.regions.push_back(j);
      terms_.push_back(std::move(t));
      max_size_ = std::max(max_size_, sigma.size());
    }
  }

  std::size_t max_term_size() const noexcept { return max_size_; }

  /// Contribution of the terms of each size; index 0 is unused.
  std::vector<BigInt> by_size(const Measure& mu) const {
    evaluate_union(venn_, mu);  // weight-count check
    std::vector<BigInt> out(max_size_ + 1, 0);
    for (const Term& t : terms_) {
      BigInt part = 0;
      for (std::size_t j : t.regions) part += mu[j];
      if (part != 0) out[t.size] += t.coeff * part;
    }
    return out;
  }

  BigInt evaluate(const Measure& mu) const {
    BigInt total = 0;
    for (const BigInt& v : by_size(mu)) total += v;
    return total;
  }

 private:
  struct Term {
    std::size_t size;
    BigInt coeff;
    std::vector<std::size_t> regions;
  };

  const VennDiagram& venn_;
  std::vector<Term> terms_;
  std::size_t max_size_ = 0;
};

inline Measure random_measure(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> weight(0, max_random_weight);
  std::vector<BigInt> w;
  w.reserve(m);
  for (std::size_t j = 0; j < m; ++j) w.emplace_back(weight(rng));
  return Measure(std::move(w));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// A x = 1
// ---------------------------------------------------------------------------

struct RegionViolation {
  std::size_t region;  // index into the Venn diagram
  IndexSet tau;
  BigInt sum;  // expected 1
};

struct IeCheckReport {
  bool pass = true;
  std::vector<RegionViolation> violations;
  /// Support sets contained in no region: harmless, but their coefficient
  /// could be zero.
  std::vector<IndexSet> uncovered_terms;
};

inline IeCheckReport check_ie_vector(const VennDiagram& venn, const IEVector& x) {
  if (x.set_count() != venn.set_count())
    throw input_error("IE-vector is over " + std::to_string(x.set_count()) +
                      " sets but the Venn diagram has " + std::to_string(venn.set_count()));
  IeCheckReport report;
  std::vector<BigInt> sums(venn.size(), 0);
  for (const auto& [sigma, c] : x.terms()) {
    bool covered = false;
    for (std::size_t j = 0; j < venn.size(); ++j) {
      if (sigma.is_subset_of(venn[j])) {
        sums[j] += c;
        covered = true;
      }
    }
    if (!covered) report.uncovered_terms.push_back(sigma);
  }
  for (std::size_t j = 0; j < venn.size(); ++j)
    if (sums[j] != 1) report.violations.push_back({j, venn[j], sums[j]});
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Both sides of the formula on concrete measures
// ---------------------------------------------------------------------------

struct MeasureMismatch {
  std::string kind;  // "ones", "zero", "indicator", "random"
  std::vector<BigInt> weights;
  BigInt formula;
  BigInt union_measure;
};

struct MeasureCheckReport {
  bool pass = true;
  std::size_t measures_checked = 0;
  std::vector<MeasureMismatch> mismatches;  // at most max_reported
  static constexpr std::size_t max_reported = 8;
};

/**
 * Compares evaluate_formula with evaluate_union on the all-ones measure, the
 * zero measure, the indicator of every region, and `trials` random measures
 * with weights uniform in [0, 10^6].
 */
inline MeasureCheckReport measure_oracle_check(const VennDiagram& venn, const IEVector& x,
                                               std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw contract_error("measure_oracle_check needs trials >= 1");
  const detail::FormulaEvaluator eval(venn, x);
  MeasureCheckReport report;
  auto check = [&](const char* kind, const Measure& mu) {
    ++report.measures_checked;
    BigInt lhs = evaluate_union(venn, mu);
    BigInt rhs = eval.evaluate(mu);
    if (lhs != rhs) {
      report.pass = false;
      if (report.mismatches.size() < MeasureCheckReport::max_reported)
        report.mismatches.push_back({kind, mu.weights(), rhs, lhs});
    }
  };
  const std::size_t m = venn.size();
  check("ones", Measure::uniform(m, 1));
  check("zero", Measure::uniform(m, 0));
  for (std::size_t j = 0; j < m; ++j) check("indicator", Measure::indicator(m, j));
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) check("random", detail::random_measure(m, rng));
  return report;
}

// ---------------------------------------------------------------------------
// Abstract tubes
// ---------------------------------------------------------------------------

enum class TubeDefect { not_hereditary, empty_induced, euler, not_cone };

inline const char* to_string(TubeDefect d) {
  switch (d) {
    case TubeDefect::not_hereditary: return "not_hereditary";
    case TubeDefect::empty_induced: return "empty_induced";
    case TubeDefect::euler: return "euler";
    case TubeDefect::not_cone: return "not_cone";
  }
  return "unknown";
}

struct TubeViolation {
  TubeDefect defect;
  std::size_t region;  // meaningless for not_hereditary
  IndexSet tau;
  long long euler = 0;
};

struct TubeCheckReport {
  bool pass = true;
  bool hereditary = true;
  std::vector<TubeViolation> violations;
};

/// Euler characteristic of the subcomplex induced on tau.
inline long long induced_euler_characteristic(const SimplicialComplex& k, const IndexSet& tau) {
  long long chi = 0;
  for (const IndexSet& f : k.faces())
    if (f.is_subset_of(tau)) chi += f.size() % 2 == 1 ? 1 : -1;
  return chi;
}

/// Every face of k[tau], and the empty face, stays in k[tau] after adding apex.
inline bool induced_is_cone(const SimplicialComplex& k, const IndexSet& tau, std::size_t apex) {
  if (!tau.contains(apex) || !k.contains(IndexSet{apex})) return false;
  for (const IndexSet& f : k.faces())
    if (f.is_subset_of(tau) && !k.contains(f.with(apex))) return false;
  return true;
}

inline TubeCheckReport check_abstract_tube(const VennDiagram& venn, const SimplicialComplex& k,
                                           const std::optional<Selector>& sel = std::nullopt) {
  TubeCheckReport report;
  if (!k.is_hereditary()) {
    report.pass = false;
    report.hereditary = false;
    report.violations.push_back({TubeDefect::not_hereditary, 0, {}, 0});
    return report;
  }
  for (std::size_t j = 0; j < venn.size(); ++j) {
    const IndexSet& tau = venn[j];
    bool nonempty = false;
    for (const IndexSet& f : k.faces())
      if (f.is_subset_of(tau)) {
        nonempty = true;
        break;
      }
    if (!nonempty) {
      report.violations.push_back({TubeDefect::empty_induced, j, tau, 0});
      continue;
    }
    const long long chi = induced_euler_characteristic(k, tau);
    if (chi != 1) report.violations.push_back({TubeDefect::euler, j, tau, chi});
    if (sel && !induced_is_cone(k, tau, sel->select(tau)))
      report.violations.push_back({TubeDefect::not_cone, j, tau, chi});
  }
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Bonferroni-style truncation bounds
// ---------------------------------------------------------------------------

struct BonferroniViolation {
  std::size_t r;
  std::vector<BigInt> weights;
  BigInt truncated;
  BigInt union_measure;
};

struct BonferroniReport {
  bool pass = true;
  std::size_t max_r = 0;
  std::size_t measures_checked = 0;
  std::optional<BonferroniViolation> first_violation;
};

/**
 * For r = 1 .. max term size, the formula truncated to terms of size <= r
 * must be >= the union for odd r and <= for even r.  Checked on the all-ones
 * measure and `trials` random measures.
 */
inline BonferroniReport bonferroni_check(const VennDiagram& venn, const IEVector& ie,
                                         std::size_t trials, std::uint64_t seed) {
  const detail::FormulaEvaluator eval(venn, ie);
  BonferroniReport report;
  report.max_r = eval.max_term_size();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t <= trials && report.pass; ++t) {
    const Measure mu = t == 0 ? Measure::uniform(venn.size(), 1) : detail::random_measure(venn.size(), rng);
    ++report.measures_checked;
    const BigInt target = evaluate_union(venn, mu);
    const std::vector<BigInt> parts = eval.by_size(mu);
    BigInt partial = 0;
    for (std::size_t r = 1; r <= report.max_r; ++r) {
      partial += parts[r];
      const bool ok = r % 2 == 1 ? partial >= target : partial <= target;
      if (!ok) {
        report.pass = false;
        report.first_violation = BonferroniViolation{r, mu.weights(), partial, target};
        break;
      }
    }
  }
  return report;
}

}  // namespace iex
