// Acceptance gate: one criterion per line, PASS or FAIL (criterion seven may
// print WARN -- its tolerances are empirical expectations, and missing them
// produces a comparison report instead of a hard failure). The process exits
// nonzero iff any criterion printed FAIL.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "surface_census/enumerate.hpp"
#include "surface_census/errors.hpp"
#include "surface_census/exact.hpp"
#include "surface_census/io.hpp"
#include "surface_census/montecarlo.hpp"
#include "surface_census/permutation.hpp"
#include "surface_census/rng.hpp"
#include "surface_census/stats.hpp"
#include "surface_census/surface.hpp"

using namespace surface_census;
namespace oracle = surface_census::testing;

namespace {

// ---- pinned sizes, seeds and tolerances ------------------------------------

constexpr int kBruteForceMaxN = 8;       // criteria 1-2: sweep S_n / A_n up to here
constexpr int kMomentOrder = 4;          // criteria 1-2: factorial moments 1..4
constexpr int kIdentityMaxN = 200;       // criterion 3: evaluate both laws at x = 2
constexpr int kGlueRunsPerCombo = 2500;  // criterion 5: 4 combos = 10^4 runs
constexpr std::uint64_t kChiSquareSamples = 200000;   // criterion 6
constexpr std::uint64_t kChiSquareSeed = 20240817;    // criterion 6
constexpr double kChiSquareMinP = 1e-3;               // criterion 6
constexpr int kLargeN = 6000;                         // criterion 7
constexpr std::uint64_t kLargeSamples = 200000;       // criterion 7
constexpr std::uint64_t kLargeSeed = 11;              // criterion 7
constexpr int kLargeThreads = 4;                      // criterion 7
constexpr double kMeanTolerance = 0.05;               // criterion 7
constexpr double kVarianceTolerance = 0.10;           // criterion 7
constexpr int kConjugations = 3;                      // criterion 8
constexpr std::uint64_t kConjugationSeed = 424242;    // criterion 8
constexpr std::uint64_t kCliSamples = 20000;          // criterion 10
constexpr int kCliThreads = 3;                        // criterion 10

struct Outcome {
  bool pass = false;
  bool warn = false;
  std::string detail;
  std::vector<std::string> report;  // extra lines, printed under the status line
};

std::string rat(const Rational& q) { return rational_to_string(q); }

// ---- criterion 1: symmetric-group factorial moments vs exhaustive sweep ----

Outcome criterion_sigma_moments() {
  for (int n = 1; n <= kBruteForceMaxN; ++n) {
    const std::map<int, Int> hist = oracle::group_cycle_histogram(n, 0);
    const std::vector<Rational> moments = factorial_moments_sigma(n, kMomentOrder);
    for (int m = 1; m <= kMomentOrder; ++m) {
      const Rational expected =
          oracle::histogram_factorial_moment(hist, factorial(n), m);
      if (moments[m - 1] != expected)
        return {false, false,
                "order-" + std::to_string(m) + " mismatch at n=" + std::to_string(n) +
                    ": formula " + rat(moments[m - 1]) + ", sweep " + rat(expected)};
    }
  }
  return {true, false,
          "orders 1-4 equal the full-group sweep for n=1.." +
              std::to_string(kBruteForceMaxN)};
}

// ---- criterion 2: alternating-group factorial moments vs exhaustive sweep --

Outcome criterion_tau_moments() {
  for (int n = 3; n <= kBruteForceMaxN; ++n) {
    const std::map<int, Int> hist = oracle::group_cycle_histogram(n, +1);
    const std::vector<Rational> moments = factorial_moments_tau(n, kMomentOrder);
    for (int m = 1; m <= kMomentOrder; ++m) {
      const Rational expected =
          oracle::histogram_factorial_moment(hist, factorial(n) / 2, m);
      if (moments[m - 1] != expected)
        return {false, false,
                "order-" + std::to_string(m) + " mismatch at n=" + std::to_string(n) +
                    ": formula " + rat(moments[m - 1]) + ", sweep " + rat(expected)};
    }
  }
  return {true, false,
          "orders 1-4 equal the even-permutation sweep for n=3.." +
              std::to_string(kBruteForceMaxN)};
}

// ---- criterion 3: both generating functions evaluate to n + 1 at x = 2 -----

Outcome criterion_gf_identities() {
  for (int n = 3; n <= kIdentityMaxN; ++n) {
    if (g_sigma(n)(Rational(2)) != n + 1)
      return {false, false, "full-group law fails at n=" + std::to_string(n)};
    if (g_tau(n)(Rational(2)) != n + 1)
      return {false, false, "alternating law fails at n=" + std::to_string(n)};
  }
  return {true, false,
          "value at 2 is n+1 for both laws, n=3.." + std::to_string(kIdentityMaxN)};
}

// ---- criterion 4: exact tails never exceed the closed-form bound -----------

Outcome criterion_tail_dominance() {
  for (const auto& [n, k] : {std::pair{6, 3}, std::pair{12, 3}, std::pair{8, 4},
                             std::pair{12, 6}}) {
    const CycleDistribution dist = exact_ab_distribution(n, k).cycles;
    for (int t = 1; t <= n; ++t) {
      const Rational tail = dist.tail(t);
      const Rational bound = tail_bound_ab(n, t);
      if (tail > bound)
        return {false, false,
                "tail " + rat(tail) + " exceeds bound " + rat(bound) + " at n=" +
                    std::to_string(n) + ", k=" + std::to_string(k) +
                    ", t=" + std::to_string(t)};
    }
  }
  return {true, false, "exact tails dominated at (6,3), (12,3), (8,4), (12,6)"};
}

// ---- criterion 5: glue-trace invariants over 10^4 instrumented runs --------

Outcome criterion_glue_invariants() {
  int runs = 0;
  for (const int n : {60, 600}) {
    for (const int k : {3, 4}) {
      Rng rng(1000 + static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k));
      for (int run = 0; run < kGlueRunsPerCombo; ++run) {
        const HeadRule rule =
            (run % 2 == 0) ? HeadRule::kLowestLabel : HeadRule::kRandom;
        try {
          // finish() recomputes the cycle count from the built matching and
          // cross-checks it, then validates all four count relations.
          const GlueTrace trace = instrumented_glue(n, k, rng, rule);
          trace.check();
        } catch (const InternalInconsistency& e) {
          return {false, false,
                  "violation at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ", run " + std::to_string(run) + ": " + e.what()};
        }
        ++runs;
      }
    }
  }
  return {true, false,
          std::to_string(runs) + " instrumented runs, zero invariant violations"};
}

// ---- criterion 6: sampled law passes chi-square against the exact law ------

Outcome criterion_distribution_match() {
  RunConfig config;
  config.n = 12;
  config.k = 3;
  config.samples = kChiSquareSamples;
  config.seed = kChiSquareSeed;
  config.threads = 4;
  const McResult result = run_mc(config);
  const CycleDistribution exact = exact_ab_distribution(12, 3).cycles;
  const ChiSquareResult chi = chi_square_vs_exact(result.histogram, exact);

  std::ostringstream detail;
  detail << "chi-square " << chi.statistic << " on " << chi.dof
         << " dof, p = " << chi.p_value;
  if (chi.p_value <= kChiSquareMinP) return {false, false, detail.str()};
  return {true, false, detail.str()};
}

// ---- criterion 7: large-run moments vs the closed-form asymptotics ---------

Outcome criterion_large_run() {
  RunConfig config;
  config.n = kLargeN;
  config.k = 3;
  config.samples = kLargeSamples;
  config.seed = kLargeSeed;
  config.threads = kLargeThreads;
  const McResult result = run_mc(config);

  const double mean_target = std::log(static_cast<double>(kLargeN)) + kEulerGamma;
  const double var_target = mean_target - kPi * kPi / 6.0;
  const double mean_diff = std::abs(result.moments.mean - mean_target);
  const double var_diff = std::abs(result.moments.central2 - var_target);

  std::ostringstream detail;
  detail << "mean off by " << mean_diff << " (tolerance " << kMeanTolerance
         << "), variance off by " << var_diff << " (tolerance " << kVarianceTolerance
         << ")";

  if (mean_diff <= kMeanTolerance && var_diff <= kVarianceTolerance)
    return {true, false, detail.str()};

  // Out of tolerance: not a hard failure (the finite-size error constants are
  // unknown); report how the closed forms track the exact laws instead.
  Outcome out{true, true, detail.str()};
  out.report.push_back("closed-form check against exact enumerable sizes:");
  for (const int n : {6, 12}) {
    const MomentSet exact =
        brute_moments(exact_ab_distribution(n, 3).cycles, 2);
    const AsymptoticMoments asym = asymptotic_moments(n, 2);
    std::ostringstream line;
    line << "  n=" << n << ": exact mean " << to_double(exact.raw[0])
         << " vs closed form " << asym.entries[0].value << " (error scale "
         << asym.entries[0].error_scale << "), exact variance "
         << to_double(exact.central[1]) << " vs " << asym.entries[1].value;
    out.report.push_back(line.str());
  }
  std::ostringstream line;
  line << "  n=" << kLargeN << ": sampled mean " << result.moments.mean
       << " vs closed form " << mean_target << ", sampled variance "
       << result.moments.central2 << " vs " << var_target;
  out.report.push_back(line.str());
  return out;
}

// ---- criterion 8: the glued law is invariant under conjugating the base ----

Outcome criterion_conjugacy_invariance() {
  Rng rng(kConjugationSeed);
  for (const auto& [n, k] : {std::pair{6, 3}, std::pair{12, 3}}) {
    const DistributionPair canonical = exact_ab_distribution(n, k);
    for (int trial = 0; trial < kConjugations; ++trial) {
      const Permutation by = random_permutation(n, rng);
      const Permutation twisted = conjugate(make_beta(n, k), by);
      const DistributionPair same = exact_ab_distribution_with_beta(twisted, k);
      if (same.cycles.probs != canonical.cycles.probs ||
          same.classes.probs != canonical.classes.probs)
        return {false, false,
                "law changed under conjugation " + std::to_string(trial + 1) +
                    " at n=" + std::to_string(n) + ", k=" + std::to_string(k)};
    }
  }
  return {true, false,
          "cycle and class laws unchanged under 3 random conjugations at (6,3) and (12,3)"};
}

// ---- criterion 9: total-variation value and regime guard --------------------

Outcome criterion_tv() {
  const Rational tv = tv_distance(12, 3);
  if (tv < 0 || tv > 1)
    return {false, false, "tv_distance(12,3) = " + rat(tv) + " is outside [0,1]"};
  const Rational frozen(Int(89869709), Int(239500800));
  if (tv != frozen)
    return {false, false,
            "tv_distance(12,3) = " + rat(tv) + " deviates from the frozen baseline " +
                rat(frozen)};
  try {
    (void)tv_distance(6, 3);
    return {false, false, "tv_distance(6,3) did not raise the regime mismatch"};
  } catch (const RegimeMismatch&) {
    // expected: at (6,3) the glued law lives on the odd coset
  }
  return {true, false, "tv_distance(12,3) = " + rat(tv) + ", (6,3) correctly rejected"};
}

// ---- criterion 10: byte-identical CLI reruns, multi-threaded ---------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome criterion_cli_determinism() {
  const std::string cli = SURFACE_CENSUS_CLI_PATH;
  const std::filesystem::path dir = std::filesystem::temp_directory_path();

  for (const std::string format : {"json", "csv"}) {
    std::vector<std::string> contents;
    for (int run = 1; run <= 2; ++run) {
      const std::filesystem::path out =
          dir / ("surface_census_acceptance_" + format + "_" + std::to_string(run) +
                 (format == "json" ? ".json" : ".csv"));
      std::ostringstream command;
      command << '"' << cli << '"' << " sample --n 12 --k 3 --samples " << kCliSamples
              << " --seed 5 --threads " << kCliThreads << " --format " << format
              << " --out " << '"' << out.string() << '"';
      const int status = std::system(command.str().c_str());
      if (status != 0)
        return {false, false,
                "CLI exited with status " + std::to_string(status) + " for " + format};
      contents.push_back(read_file(out));
      std::filesystem::remove(out);
    }
    if (contents[0].empty())
      return {false, false, "CLI produced an empty " + format + " report"};
    if (contents[0] != contents[1])
      return {false, false, "two identical " + format + " runs differ byte-wise"};
  }
  return {true, false,
          "json and csv reports byte-identical across reruns with threads = " +
              std::to_string(kCliThreads)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"full-group factorial moments equal the exhaustive sweep", criterion_sigma_moments},
      {"alternating-group factorial moments equal the exhaustive sweep", criterion_tau_moments},
      {"both cycle-count laws evaluate to n+1 at x=2", criterion_gf_identities},
      {"exact glued tails never exceed the closed-form bound", criterion_tail_dominance},
      {"glue-trace invariants hold over ten thousand instrumented runs", criterion_glue_invariants},
      {"sampled law at (12,3) passes chi-square against the exact law", criterion_distribution_match},
      {"large-run sampled moments near the closed-form asymptotics", criterion_large_run},
      {"glued law invariant under conjugating the base permutation", criterion_conjugacy_invariance},
      {"total-variation distance in range, frozen baseline, regime guard", criterion_tv},
      {"CLI sample reruns are byte-identical with multiple threads", criterion_cli_determinism},
  };

  int failures = 0;
  for (std::size_t index = 0; index < criteria.size(); ++index) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[index].run();
    } catch (const std::exception& e) {
      outcome = {false, false, std::string("unexpected exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const char* status = outcome.pass ? (outcome.warn ? "WARN" : "PASS") : "FAIL";
    std::printf("[%2zu/%zu] %s  %s  (%.2fs)%s%s\n", index + 1, criteria.size(), status,
                criteria[index].name, seconds, outcome.detail.empty() ? "" : "  -- ",
                outcome.detail.c_str());
    for (const std::string& line : outcome.report) std::printf("        %s\n", line.c_str());
    if (!outcome.pass) ++failures;
  }

  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
