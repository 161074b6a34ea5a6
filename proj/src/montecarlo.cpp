#include "surface_census/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "surface_census/enumerate.hpp"
#include "surface_census/errors.hpp"

namespace surface_census {

std::vector<int> default_tail_thresholds(int n) {
  if (n < 2) throw InvalidParams("default_tail_thresholds: n must be at least 2");
  const int base = static_cast<int>(std::ceil(std::log(static_cast<double>(n))));
  std::vector<int> thresholds(6);
  for (int j = 0; j < 6; ++j) thresholds[j] = base + 5 * j;
  return thresholds;
}

CycleSampler::CycleSampler(int n, int k) : n_(n), k_(k) {
  validate_params(n, k);
  alpha_.assign(static_cast<std::size_t>(n), 0);
  pool_.reserve(static_cast<std::size_t>(n));
  pos_.assign(static_cast<std::size_t>(n) + 1, 0);
  stamp_.assign(static_cast<std::size_t>(n) + 1, 0);
}

int CycleSampler::sample(Rng& rng) {
  const int n = n_;
  pool_.resize(static_cast<std::size_t>(n));
  std::iota(pool_.begin(), pool_.end(), 1);
  for (int i = 0; i < n; ++i) pos_[pool_[i]] = i;
  std::fill(alpha_.begin(), alpha_.end(), 0);

  auto remove_at = [&](int index) {
    const int last = pool_.back();
    pool_[index] = last;
    pos_[last] = index;
    pool_.pop_back();
  };

  for (int low = 1; low <= n; ++low) {
    if (alpha_[low - 1] != 0) continue;
    remove_at(pos_[low]);
    const auto pick = static_cast<std::size_t>(rng.below(pool_.size()));
    const int partner = pool_[pick];
    remove_at(static_cast<int>(pick));
    alpha_[low - 1] = partner;
    alpha_[partner - 1] = low;
  }

  // Count cycles of i -> beta(alpha(i)) with an epoch stamp so the visited
  // buffer never needs clearing.
  ++epoch_;
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (stamp_[i] == epoch_) continue;
    ++cycles;
    int j = i;
    while (stamp_[j] != epoch_) {
      stamp_[j] = epoch_;
      const int a = alpha_[j - 1];
      j = (a % k_ == 0) ? a - k_ + 1 : a + 1;
    }
  }
  return cycles;
}

int sample_cycles(int n, int k, Rng& rng) {
  CycleSampler sampler(n, k);
  return sampler.sample(rng);
}

void GlueTrace::check() const {
  if (final_cycles != simple_closures + double_closures)
    throw InternalInconsistency(
        "glue trace: cycle count is not simple plus double closures");
  if (interesting_steps > simple_closures + quasi_cycle_creations)
    throw InternalInconsistency(
        "glue trace: more interesting steps than closures and creations");
  if (2 * double_closures > quasi_cycle_creations)
    throw InternalInconsistency(
        "glue trace: double closures not covered by quasi-cycle creations");
  if (final_cycles > 2 * interesting_steps)
    throw InternalInconsistency(
        "glue trace: cycle count exceeds twice the interesting steps");
}

GlueProcess::GlueProcess(int n, int k) : n_(n), k_(k) {
  validate_params(n, k);
  matched_.assign(static_cast<std::size_t>(n) + 1, 0);
  head_of_.resize(static_cast<std::size_t>(n) + 1);
  tail_of_.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) {
    head_of_[x] = x;
    tail_of_[x] = x;
  }
  heads_.resize(static_cast<std::size_t>(n));
  std::iota(heads_.begin(), heads_.end(), 1);
  head_pos_.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) head_pos_[x] = x - 1;
  pairs_.reserve(static_cast<std::size_t>(n) / 2);
}

int GlueProcess::beta_of(int x) const {
  return (x % k_ == 0) ? x - k_ + 1 : x + 1;
}

void GlueProcess::remove_head(int x) {
  const int index = head_pos_[x];
  const int last = heads_.back();
  heads_[index] = last;
  head_pos_[last] = index;
  heads_.pop_back();
}

int GlueProcess::lowest_head() const {
  if (heads_.empty())
    throw InvalidParams("glue process: no heads remain");
  while (min_cursor_ <= n_ && matched_[min_cursor_]) ++min_cursor_;
  return min_cursor_;
}

bool GlueProcess::step_would_be_interesting(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_ || matched_[i] || matched_[j])
    throw InvalidParams("glue step: i and j must be distinct unmatched labels");
  const int bi = beta_of(i);
  const int bj = beta_of(j);
  const int ti = tail_of_[i];
  const int tj = tail_of_[j];
  if (ti == bj || tj == bi) return true;  // a simple closure
  if (ti == bi && tj == bj) return false;  // double closure, no new path
  const int h1 = head_of_[bj];
  const int h2 = head_of_[bi];
  if (h1 == j)  // the two merges chain into one path (ti .. i bj .. j bi .. h2)
    return ti == beta_of(h2);
  if (h2 == i)  // chain the other way round: (tj .. j bi .. i bj .. h1)
    return tj == beta_of(h1);
  // Two separate merges: (ti .. h1) and (tj .. h2).
  return ti == beta_of(h1) || tj == beta_of(h2);
}

void GlueProcess::step(int i, int j) {
  if (finished()) throw InvalidParams("glue process: already finished");
  const bool predicted_interesting = step_would_be_interesting(i, j);

  const int bi = beta_of(i);
  const int bj = beta_of(j);
  const bool s1 = tail_of_[i] == bj;
  const bool s2 = tail_of_[j] == bi;
  const bool dbl = tail_of_[i] == bi && tail_of_[j] == bj;
  const int predicted_closed =
      dbl ? 1 : static_cast<int>(s1) + static_cast<int>(s2);

  remove_head(i);
  remove_head(j);
  matched_[i] = 1;
  matched_[j] = 1;
  pairs_.emplace_back(i, j);

  // Mechanical arc additions; track the paths formed this step so that
  // quasi-cycle creation is read off the final state, independently of the
  // pre-state analysis above.
  struct Formed {
    int tail = 0;
    int head = 0;
    bool alive = false;
  };
  std::array<Formed, 2> formed;
  int formed_count = 0;
  int closed = 0;
  auto add_arc = [&](int from_head, int to_tail) {
    for (int r = 0; r < formed_count; ++r) {
      if (formed[r].alive &&
          (formed[r].head == from_head || formed[r].tail == to_tail))
        formed[r].alive = false;
    }
    if (head_of_[to_tail] == from_head) {
      ++closed;
      return;
    }
    const int new_tail = tail_of_[from_head];
    const int new_head = head_of_[to_tail];
    tail_of_[new_head] = new_tail;
    head_of_[new_tail] = new_head;
    formed[formed_count].tail = new_tail;
    formed[formed_count].head = new_head;
    formed[formed_count].alive = true;
    ++formed_count;
  };
  add_arc(i, bj);
  add_arc(j, bi);

  if (closed != predicted_closed)
    throw InternalInconsistency(
        "glue step: mechanical closure count disagrees with pre-state analysis");

  int quasi = 0;
  for (int r = 0; r < formed_count; ++r) {
    if (formed[r].alive && formed[r].tail == beta_of(formed[r].head)) ++quasi;
  }

  const int simples = dbl ? 0 : static_cast<int>(s1) + static_cast<int>(s2);
  simple_closures_ += simples;
  if (dbl) ++double_closures_;
  quasi_creations_ += quasi;
  closed_cycles_ += closed;
  const bool interesting = simples > 0 || quasi > 0;
  if (interesting != predicted_interesting)
    throw InternalInconsistency(
        "glue step: interest prediction disagrees with the step outcome");
  if (interesting) ++interesting_steps_;
  ++step_;
}

void GlueProcess::step_random(Rng& rng, HeadRule rule) {
  if (finished()) throw InvalidParams("glue process: already finished");
  const int i = rule == HeadRule::kLowestLabel
                    ? lowest_head()
                    : heads_[static_cast<std::size_t>(rng.below(heads_.size()))];
  // Remove i before drawing so the draw sequence matches sample_matching's;
  // step() re-removes it from the back, leaving the layout untouched.
  remove_head(i);
  const auto pick = static_cast<std::size_t>(rng.below(heads_.size()));
  const int j = heads_[pick];
  heads_.push_back(i);
  head_pos_[i] = static_cast<int>(heads_.size()) - 1;
  step(i, j);
}

GlueTrace GlueProcess::finish() const {
  if (!finished())
    throw InvalidParams("glue process: run has not completed");
  std::vector<int> image(static_cast<std::size_t>(n_), 0);
  for (const auto& [i, j] : pairs_) {
    image[i - 1] = j;
    image[j - 1] = i;
  }
  const Permutation alpha = Permutation::unchecked(std::move(image));
  const int reference = cycle_count(compose(alpha, make_beta(n_, k_)));
  if (reference != closed_cycles_)
    throw InternalInconsistency(
        "glue process: closure count disagrees with the composed permutation");

  GlueTrace trace;
  trace.n = n_;
  trace.k = k_;
  trace.simple_closures = simple_closures_;
  trace.quasi_cycle_creations = quasi_creations_;
  trace.double_closures = double_closures_;
  trace.interesting_steps = interesting_steps_;
  trace.final_cycles = closed_cycles_;
  trace.pairs = pairs_;
  trace.check();
  return trace;
}

GlueTrace instrumented_glue(int n, int k, Rng& rng, HeadRule rule) {
  GlueProcess process(n, k);
  while (!process.finished()) process.step_random(rng, rule);
  return process.finish();
}

void MomentAccumulator::add(double x) {
  const auto n1 = static_cast<long double>(count_);
  ++count_;
  const auto n = static_cast<long double>(count_);
  const long double delta = static_cast<long double>(x) - mean_;
  const long double delta_n = delta / n;
  const long double delta_n2 = delta_n * delta_n;
  const long double term1 = delta * delta_n * n1;
  m4_ += term1 * delta_n2 * (n * n - 3.0L * n + 3.0L) + 6.0L * delta_n2 * m2_ -
         4.0L * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2.0L) - 3.0L * delta_n * m2_;
  m2_ += term1;
  mean_ += delta_n;
}

void MomentAccumulator::combine(const MomentAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<long double>(count_);
  const auto nb = static_cast<long double>(other.count_);
  const long double n = na + nb;
  const long double delta = other.mean_ - mean_;
  const long double d2 = delta * delta;
  const long double m2 = m2_ + other.m2_ + d2 * na * nb / n;
  const long double m3 = m3_ + other.m3_ +
                         delta * d2 * na * nb * (na - nb) / (n * n) +
                         3.0L * delta * (na * other.m2_ - nb * m2_) / n;
  const long double m4 =
      m4_ + other.m4_ +
      d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
      6.0L * d2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
      4.0L * delta * (na * other.m3_ - nb * m3_) / n;
  mean_ += delta * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  count_ += other.count_;
}

double MomentAccumulator::central2() const {
  return count_ == 0 ? 0.0 : static_cast<double>(m2_ / static_cast<long double>(count_));
}

double MomentAccumulator::central3() const {
  return count_ == 0 ? 0.0 : static_cast<double>(m3_ / static_cast<long double>(count_));
}

double MomentAccumulator::central4() const {
  return count_ == 0 ? 0.0 : static_cast<double>(m4_ / static_cast<long double>(count_));
}

McResult run_mc(const RunConfig& config) {
  const SurfaceParams params = validate_params(config.n, config.k);
  if (config.samples == 0) throw InvalidParams("run_mc: samples must be positive");
  if (config.threads < 1) throw InvalidParams("run_mc: threads must be positive");

  const auto thread_count = static_cast<int>(
      std::min<std::uint64_t>(config.samples, static_cast<std::uint64_t>(config.threads)));
  const Rng root(config.seed);

  std::vector<MomentAccumulator> accumulators(thread_count);
  std::vector<std::map<int, std::uint64_t>> histograms(thread_count);

  auto worker = [&](int index, std::uint64_t draws) {
    Rng rng = root.split(static_cast<std::uint64_t>(index));
    CycleSampler sampler(config.n, config.k);
    MomentAccumulator& acc = accumulators[index];
    auto& hist = histograms[index];
    for (std::uint64_t s = 0; s < draws; ++s) {
      const int cycles = sampler.sample(rng);
      acc.add(static_cast<double>(cycles));
      ++hist[cycles];
    }
  };

  const std::uint64_t per_thread = config.samples / thread_count;
  const std::uint64_t extra = config.samples % thread_count;
  auto share = [&](int index) {
    return per_thread + (static_cast<std::uint64_t>(index) < extra ? 1 : 0);
  };

  if (thread_count == 1) {
    worker(0, config.samples);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (int index = 0; index < thread_count; ++index)
      threads.emplace_back(worker, index, share(index));
    for (auto& thread : threads) thread.join();
  }

  // Merge in index order so results depend only on (seed, threads).
  MomentAccumulator total;
  std::map<int, std::uint64_t> histogram;
  for (int index = 0; index < thread_count; ++index) {
    total.combine(accumulators[index]);
    for (const auto& [cycles, count] : histograms[index])
      histogram[cycles] += count;
  }

  McResult result;
  result.histogram = std::move(histogram);

  result.moments.samples = total.count();
  result.moments.mean = total.mean();
  result.moments.central2 = total.central2();
  result.moments.central3 = total.central3();
  result.moments.central4 = total.central4();
  result.moments.standard_error_mean =
      std::sqrt(total.central2() / static_cast<double>(total.count()));
  if (config.n <= kDefaultMatchingCap) {
    result.moments.exact_reference =
        brute_moments(exact_ab_distribution(config.n, config.k).cycles, 4);
  }
  result.moments.asymptotic_reference =
      asymptotic_moments(static_cast<double>(config.n));

  result.tails.thresholds = config.tail_thresholds.empty()
                                ? default_tail_thresholds(config.n)
                                : config.tail_thresholds;
  for (int t : result.tails.thresholds) {
    std::uint64_t at_least = 0;
    for (const auto& [cycles, count] : result.histogram) {
      if (cycles >= t) at_least += count;
    }
    result.tails.empirical[t] =
        static_cast<double>(at_least) / static_cast<double>(total.count());
    if (params.n >= 6) result.tails.bound[t] = tail_bound_ab(params.n, t);
  }
  return result;
}

}  // namespace surface_census
