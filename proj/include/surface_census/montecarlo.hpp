#ifndef SURFACE_CENSUS_MONTECARLO_HPP
#define SURFACE_CENSUS_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "surface_census/exact.hpp"
#include "surface_census/permutation.hpp"
#include "surface_census/rng.hpp"
#include "surface_census/surface.hpp"

namespace surface_census {

struct RunConfig {
  int n = 0;
  int k = 3;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<int> tail_thresholds;  // empty -> default_tail_thresholds(n)
};

// ceil(log n) + 5j for j = 0..5.
std::vector<int> default_tail_thresholds(int n);

// Reusable buffers for drawing cycle counts of compose(matching, beta).
// One instance per thread; not shareable.
class CycleSampler {
 public:
  CycleSampler(int n, int k);

  // Draws a matching by sequential lowest-label pairing and counts the
  // cycles of i -> beta(alpha(i)) in place, without materializing the
  // composed permutation.
  int sample(Rng& rng);

 private:
  int n_;
  int k_;
  std::vector<int> alpha_;
  std::vector<int> pool_;
  std::vector<int> pos_;
  std::vector<int> stamp_;
  int epoch_ = 0;
};

int sample_cycles(int n, int k, Rng& rng);

// Per-run record of the edge-glueing process.
struct GlueTrace {
  int n = 0;
  int k = 0;
  int simple_closures = 0;
  int quasi_cycle_creations = 0;
  int double_closures = 0;
  int interesting_steps = 0;
  int final_cycles = 0;
  // The matching built by the run: (i, j) per step.
  std::vector<std::pair<int, int>> pairs;

  // Throws InternalInconsistency if any of the four count relations fail.
  void check() const;
};

enum class HeadRule { kLowestLabel, kRandom };

// The n/2-step glueing process. At each step a head i is chosen (lowest
// label by default), a second head j uniformly among the others, and the
// pairs (i, beta(j)), (j, beta(i)) are added to the evolving path forest.
// The process tracks simple and double closures, quasi-cycle creations
// (paths whose tail equals beta(head)) and interesting steps.
//
// The class exposes single-stepping so tests can drive every branch
// exhaustively; instrumented_glue() is the run-to-completion wrapper.
class GlueProcess {
 public:
  GlueProcess(int n, int k);

  bool finished() const { return step_ == n_ / 2; }
  int steps_done() const { return step_; }
  // Heads (unmatched labels) remaining; unordered.
  const std::vector<int>& heads() const { return heads_; }
  int lowest_head() const;

  // Performs one step with explicit choices; i and j must be distinct heads.
  void step(int i, int j);
  // Chooses i by rule, j uniformly among the other heads.
  void step_random(Rng& rng, HeadRule rule = HeadRule::kLowestLabel);

  // Would step(i, j) be interesting? Pure query, no state change.
  bool step_would_be_interesting(int i, int j) const;

  // Completed-run trace; callable only when finished. Verifies that
  // final_cycles matches the cycle count of compose(alpha, beta) for the
  // matching the run built, then checks the count relations.
  GlueTrace finish() const;

  int simple_closures() const { return simple_closures_; }
  int double_closures() const { return double_closures_; }
  int quasi_cycle_creations() const { return quasi_creations_; }
  int interesting_steps() const { return interesting_steps_; }
  int closed_cycles() const { return closed_cycles_; }

 private:
  int beta_of(int x) const;
  void remove_head(int x);

  int n_;
  int k_;
  int step_ = 0;
  std::vector<std::uint8_t> matched_;
  std::vector<int> head_of_;  // valid at path tails
  std::vector<int> tail_of_;  // valid at path heads
  std::vector<int> heads_;
  std::vector<int> head_pos_;
  mutable int min_cursor_ = 1;
  int simple_closures_ = 0;
  int double_closures_ = 0;
  int quasi_creations_ = 0;
  int interesting_steps_ = 0;
  int closed_cycles_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

GlueTrace instrumented_glue(int n, int k, Rng& rng,
                            HeadRule rule = HeadRule::kLowestLabel);

// Streaming single-pass accumulator for mean and central moments up to
// order 4 (Pebay updates), with an order-fixed combine for merging
// per-thread partials deterministically.
class MomentAccumulator {
 public:
  void add(double x);
  void combine(const MomentAccumulator& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return static_cast<double>(mean_); }
  double central2() const;
  double central3() const;
  double central4() const;

 private:
  std::uint64_t count_ = 0;
  long double mean_ = 0.0L;
  long double m2_ = 0.0L;
  long double m3_ = 0.0L;
  long double m4_ = 0.0L;
};

struct MomentReport {
  std::uint64_t samples = 0;
  double mean = 0.0;
  double central2 = 0.0;
  double central3 = 0.0;
  double central4 = 0.0;
  double standard_error_mean = 0.0;
  std::optional<MomentSet> exact_reference;
  AsymptoticMoments asymptotic_reference;
};

struct TailReport {
  std::vector<int> thresholds;
  std::map<int, double> empirical;    // t -> fraction of samples with C >= t
  std::map<int, Rational> bound;      // t -> tail_bound_ab(n, t)
};

struct McResult {
  MomentReport moments;
  TailReport tails;
  std::map<int, std::uint64_t> histogram;  // t -> draw count
};

// Deterministic for a fixed (seed, threads): per-thread streams are split
// from the seed by thread index and partials are merged in index order.
McResult run_mc(const RunConfig& config);

}  // namespace surface_census

#endif
