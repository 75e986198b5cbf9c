// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "iex/iex.hpp"
#include "oracles.hpp"

using namespace iex;

namespace {

struct CorpusEntry {
  std::string name;
  std::string gen_args;  // arguments for `iex gen`
  SetSystem system;
  VennDiagram venn;
};

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&](std::string name, std::string args, SetSystem fs) {
    VennDiagram venn = compute_venn(fs);
    corpus.push_back({std::move(name), std::move(args), std::move(fs), std::move(venn)});
  };
  for (std::size_t n = 1; n <= 8; ++n)
    add("uniqueness n=" + std::to_string(n), "uniqueness --n " + std::to_string(n), gen_uniqueness(n));
  for (std::size_t y : {2, 5})
    for (std::size_t ell = 1; ell <= 6; ++ell)
      add("exponential ell=" + std::to_string(ell) + " y=" + std::to_string(y),
          "exponential --ell " + std::to_string(ell) + " --y " + std::to_string(y),
          gen_exponential(ell, y));
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::uint32_t q : {2U, 3U})
      add("projective d=" + std::to_string(d) + " q=" + std::to_string(q),
          "projective --d " + std::to_string(d) + " --q " + std::to_string(q),
          gen_projective(d, q).first);
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 180; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k) % 15;  // 2..16
    const std::size_t cap = std::min<std::size_t>(200, (std::size_t{1} << n) - 1);
    const std::size_t m = 1 + rng() % cap;
    const std::uint64_t seed = rng() % 1000000;
    const std::string args =
        "random --n " + std::to_string(n) + " --m " + std::to_string(m) + " --seed " + std::to_string(seed);
    add("random " + args.substr(7), args, gen_random(n, m, seed));
  }
  return corpus;
}

constexpr std::uint64_t kTubeSeeds = 10;

struct Suite {
  int failures = 0;

  void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("AC%-2d [%s] %s -- %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  Suite suite;
  const std::vector<CorpusEntry> corpus = build_corpus();

  // Tube runs shared by criteria 1, 4, 5 and 9.
  std::vector<std::vector<TubeResult>> tubes(corpus.size());
  std::size_t tube_errors = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    for (std::uint64_t seed = 0; seed < kTubeSeeds; ++seed) {
      try {
        tubes[c].push_back(build_tube(corpus[c].venn, seed));
      } catch (const restarts_exhausted& e) {
        ++tube_errors;
        std::cerr << corpus[c].name << " seed " << seed << ": " << e.what() << '\n';
      }
    }
  }

  // 1. Exactness of both constructions.
  {
    std::size_t checked = 0;
    std::size_t bad = tube_errors;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      const VennDiagram& venn = corpus[c].venn;
      if (!check_ie_vector(venn, mobius_ie_vector(venn)).pass) {
        ++bad;
        std::cerr << "AC1 mobius: " << corpus[c].name << '\n';
      }
      ++checked;
      for (const TubeResult& t : tubes[c]) {
        ++checked;
        if (!check_ie_vector(venn, t.ie).pass) {
          ++bad;
          std::cerr << "AC1 tube: " << corpus[c].name << '\n';
        }
      }
    }
    suite.report(1, "A x = 1 for Möbius and tube vectors", bad == 0 && corpus.size() >= 200,
                 std::to_string(corpus.size()) + " systems, " + std::to_string(checked) +
                     " vectors, " + std::to_string(bad) + " failures");
  }

  // 2. Exponential family coefficients.
  {
    bool ok = true;
    BigInt max_at_6 = 0;
    for (std::size_t ell = 1; ell <= 6; ++ell) {
      const SetSystem fs = gen_exponential(ell);
      const IEVector x = mobius_ie_vector(compute_venn(fs));
      for (std::size_t i = 1; i <= 5 * ell; ++i) {
        const std::uint64_t block = (i + 4) / 5;  // g(i) / 5
        BigInt expected = int_pow(4, block - 1);
        if (block % 2 == 0) expected = -expected;
        ok = ok && x.coefficient(fs.membership(i - 1)) == expected;
      }
      ok = ok && x.support_size() == 5 * ell;
      if (ell == 6) max_at_6 = x.max_abs_coefficient();
    }
    ok = ok && max_at_6 == 1024;
    suite.report(2, "exponential family coefficients (-4)^(g(i)/5-1)", ok,
                 "ell = 1..6, max |coeff| at ell = 6: " + max_at_6.str());
  }

  // 3. Uniqueness family gives the standard signs.
  {
    bool ok = true;
    for (std::size_t n = 1; n <= 8; ++n) {
      const IEVector x = mobius_ie_vector(compute_venn(gen_uniqueness(n)));
      ok = ok && x.support_size() == (std::size_t{1} << n) - 1;
      for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s)
        ok = ok && x.coefficient(IndexSet::from_mask(s)) == oracle::parity_sign(s);
    }
    suite.report(3, "uniqueness family: standard signs on all 2^n - 1 subsets", ok, "n = 1..8");
  }

  // 4. Structure of every tube.
  {
    std::size_t runs = 0;
    std::size_t bad = tube_errors;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      for (const TubeResult& t : tubes[c]) {
        ++runs;
        bool ok = true;
        for (const auto& [s, coeff] : t.ie.terms()) ok = ok && (coeff == 1 || coeff == -1);
        ok = ok && t.complex.dimension_bound() <= t.d_bound;
        const bool single = corpus[c].venn.size() == 1;
        ok = ok && check_abstract_tube(corpus[c].venn, t.complex,
                                       single ? std::nullopt : std::optional<Selector>(t.permutation))
                       .pass;
        if (!ok) {
          ++bad;
          std::cerr << "AC4: " << corpus[c].name << '\n';
        }
      }
    }
    suite.report(4, "tube vectors are +-1, within D, Euler 1 and cones", bad == 0,
                 std::to_string(runs) + " runs, " + std::to_string(bad) + " failures");
  }

  // 5. Restart statistics over 200 runs (system c, seed 0).
  {
    std::size_t runs = 0;
    std::size_t total = 0;
    std::size_t worst = 0;
    for (std::size_t c = 0; c < corpus.size() && runs < 200; ++c) {
      if (tubes[c].empty()) continue;
      ++runs;
      total += tubes[c][0].restarts;
      worst = std::max(worst, tubes[c][0].restarts);
    }
    std::size_t all_total = 0, all_runs = 0;
    for (const auto& ts : tubes)
      for (const TubeResult& t : ts) all_total += t.restarts, ++all_runs;
    const double mean = runs ? static_cast<double>(total) / static_cast<double>(runs) : 1e9;
    suite.report(5, "restart statistics", runs == 200 && mean <= 1.0 && worst <= 20 && tube_errors == 0,
                 "200 runs: mean " + fmt(mean) + ", max " + std::to_string(worst) + "; all " +
                     std::to_string(all_runs) + " runs: total restarts " + std::to_string(all_total));
  }

  // 6. Projective certification.
  {
    bool ok = true;
    std::string detail;
    for (auto [d, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
      const auto [fs, lattice] = gen_projective(d, q);
      const VennDiagram venn = compute_venn(fs);
      const bool m_ok = venn.size() == projective_region_count(d, q);
      const std::vector<BigInt> alpha = mobius_coefficients(venn);
      bool coeff_ok = true;
      for (std::size_t e = 1; e < lattice.elements().size(); ++e) {
        const auto it = std::ranges::lower_bound(venn.regions(), lattice.atoms_below(e));
        const auto j = static_cast<std::size_t>(it - venn.regions().begin());
        coeff_ok = coeff_ok && it != venn.regions().end() && *it == lattice.atoms_below(e) &&
                   alpha[j] == projective_coefficient(static_cast<std::uint64_t>(lattice.elements()[e].dimension()), q);
      }
      const BigInt l1 = l1_norm(mobius_ie_vector(venn));
      const bool l1_ok = l1 == projective_expected_l1(d, q);
      const bool col_ok = check_lattice_column_property(venn);
      ok = ok && m_ok && coeff_ok && l1_ok && col_ok;
      detail += "(" + std::to_string(d) + "," + std::to_string(q) + "): m=" + std::to_string(venn.size()) +
                " l1=" + l1.str() + (m_ok && coeff_ok && l1_ok && col_ok ? "" : " BAD") + "; ";
    }
    ok = ok && projective_expected_l1(2, 2) == 29 && projective_expected_l1(3, 2) == 269;
    suite.report(6, "projective lattices: m, coefficients, l1, column property", ok, detail);
  }

  // 7. Finite witness of the lower-bound order.
  {
    bool ok = true;
    std::string detail;
    for (std::uint32_t q : {2U, 3U}) {
      const VennDiagram venn = compute_venn(gen_projective(3, q).first);
      const BigInt l1 = l1_norm(mobius_ie_vector(venn));
      const double ratio = l1.convert_to<double>() / std::pow(static_cast<double>(venn.size()), 1.5);
      ok = ok && ratio >= 0.5 && ratio <= 4.0;
      detail += "q=" + std::to_string(q) + ": l1/m^1.5 = " + l1.str() + "/" + std::to_string(venn.size()) +
                "^1.5 = " + fmt(ratio) + "; ";
    }
    suite.report(7, "l1 / m^(3/2) in [0.5, 4] for d = 3", ok, detail);
  }

  // 8. Definition fidelity against exhaustive enumeration.
  {
    std::mt19937_64 rng(8);
    std::size_t bad = 0;
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k) % 11;  // 2..12
      const std::size_t m = 1 + rng() % std::min<std::size_t>(300, (std::size_t{1} << n) - 1);
      const VennDiagram venn = compute_venn(gen_random(n, m, rng()));
      const Selector sel(random_order(n, rng));
      std::vector<std::size_t> rank(n);
      for (std::size_t i = 0; i < n; ++i) rank[i] = sel.rank(i);
      const auto expected = oracle::brute_force_complex(oracle::region_masks(venn), n, rank);
      const auto built = build_complex(venn, sel, n);
      std::set<oracle::Mask> got;
      if (built)
        for (const IndexSet& f : built->faces()) got.insert(f.low_word());
      if (!built || got != expected) ++bad;
    }
    suite.report(8, "build_complex equals brute-force K_rho", bad == 0,
                 "50 systems with n <= 12, " + std::to_string(bad) + " mismatches");
  }

  // 9. Bonferroni truncation bounds.
  {
    std::size_t bad = 0;
    std::size_t measures = 0;
    std::size_t single = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      if (tubes[c].empty()) continue;
      // one region: the formula is the single term +1, not a sum over a complex
      if (corpus[c].venn.size() == 1) {
        ++single;
        continue;
      }
      const BonferroniReport r = bonferroni_check(corpus[c].venn, tubes[c][0].ie, 100, 1000 + c);
      measures += r.measures_checked;
      if (!r.pass) {
        ++bad;
        std::cerr << "AC9: " << corpus[c].name << " r=" << r.first_violation->r << '\n';
      }
    }
    suite.report(9, "truncated tube formulas alternate around the union", bad == 0,
                 std::to_string(measures) + " measures, " + std::to_string(bad) + " systems with violations, " +
                     std::to_string(single) + " single-region systems skipped");
  }

  // 10. q-binomial suite.
  {
    bool ok = true;
    for (std::uint64_t q : {2, 3, 5}) {
      for (std::uint64_t k = 0; k <= 8; ++k)
        for (const Rational& t : {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)})
          ok = ok && cauchy_identity_check(k, q, t);
      for (std::uint64_t n = 0; n <= 20; ++n)
        for (std::uint64_t k = 0; k <= n; ++k) {
          try {
            ok = ok && gauss_binomial(n, k, q) == gauss_binomial(n, n - k, q);
          } catch (const iex::error&) {
            ok = false;  // inexact division
          }
        }
    }
    suite.report(10, "Cauchy identity, symmetry and exact division", ok,
                 "k <= 8 and n <= 20, q in {2,3,5}");
  }

  // 11. CLI pipelines and determinism.
  {
    const std::filesystem::path dir = cli::scratch_dir("acceptance");
    std::size_t bad = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      const std::string sys = (dir / "sys.json").string();
      const std::string mob = (dir / "mob.json").string();
      const std::string t0 = (dir / "t0.json").string();
      const std::string t1 = (dir / "t1.json").string();
      bool ok = cli::run("gen " + corpus[c].gen_args + " --out " + sys).exit_code == 0;
      ok = ok && cli::run("mobius " + sys + " --out " + mob).exit_code == 0;
      ok = ok && cli::run("validate " + sys + " " + mob + " --trials 4").exit_code == 0;
      const std::string seed = std::to_string(c);
      ok = ok && cli::run("tube " + sys + " --seed " + seed + " --out " + t0).exit_code == 0;
      ok = ok && cli::run("tube " + sys + " --seed " + seed + " --out " + t1).exit_code == 0;
      ok = ok && cli::slurp(t0) == cli::slurp(t1);
      ok = ok && cli::run("validate " + sys + " " + t0 + " --trials 4").exit_code == 0;
      // the file written by gen is the library's system, byte for byte
      ok = ok && cli::slurp(sys) == dump_canonical(to_json(corpus[c].system));
      if (!ok) {
        ++bad;
        std::cerr << "AC11: " << corpus[c].name << '\n';
      }
    }
    std::filesystem::remove_all(dir);
    suite.report(11, "CLI gen -> mobius/tube -> validate, deterministic output", bad == 0,
                 std::to_string(corpus.size()) + " systems, " + std::to_string(bad) + " failures");
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed; %.1f s\n", suite.failures, secs);
  return suite.failures == 0 ? 0 : 1;
}
