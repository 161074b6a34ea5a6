#include "surface_census/enumerate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "surface_census/errors.hpp"
#include "surface_census/surface.hpp"

namespace surface_census {

Rational CycleDistribution::prob(int t) const {
  auto it = probs.find(t);
  return it == probs.end() ? Rational(0) : it->second;
}

Rational CycleDistribution::tail(int t) const {
  Rational total = 0;
  for (auto it = probs.lower_bound(t); it != probs.end(); ++it)
    total += it->second;
  return total;
}

CycleDistribution ClassDistribution::cycle_marginal() const {
  CycleDistribution dist;
  dist.n = n;
  for (const auto& [type, p] : probs) dist.probs[type.count()] += p;
  return dist;
}

Int matchings_count(int n) {
  if (n < 2 || n % 2 != 0)
    throw InvalidParams("matchings_count: n must be even and positive");
  return double_factorial(n - 1);
}

namespace {

void matchings_rec(std::vector<int>& image, int low,
                   const std::function<void(const Permutation&)>& visit) {
  const int n = static_cast<int>(image.size());
  while (low <= n && image[low - 1] != 0) ++low;
  if (low > n) {
    visit(Permutation::unchecked(image));
    return;
  }
  for (int j = low + 1; j <= n; ++j) {
    if (image[j - 1] != 0) continue;
    image[low - 1] = j;
    image[j - 1] = low;
    matchings_rec(image, low + 1, visit);
    image[low - 1] = 0;
    image[j - 1] = 0;
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    partitions_rec(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

Int partition_count(int n) {
  std::vector<Int> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total)
      table[total] += table[total - part];
  return table[n];
}

// |class of lambda| = n! / prod_j (j^{m_j} m_j!), with m_j the multiplicity
// of part size j; `parts` must be sorted (either direction).
Int class_size(int n, const std::vector<int>& parts) {
  Int denom = 1;
  int run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    denom *= parts[i];
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    denom *= run;
  }
  return factorial(n) / denom;
}

}  // namespace

void enumerate_matchings(int n, const std::function<void(const Permutation&)>& visit,
                         int cap) {
  if (n < 2 || n % 2 != 0)
    throw InvalidParams("enumerate_matchings: n must be even and positive");
  if (n > cap)
    throw CapExceeded("enumerate_matchings: n = " + std::to_string(n) +
                          " exceeds the enumeration cap " + std::to_string(cap),
                      matchings_count(n));
  std::vector<int> image(n, 0);
  matchings_rec(image, 1, visit);
}

void enumerate_partitions(int n,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1) throw InvalidParams("enumerate_partitions: n must be positive");
  std::vector<int> parts;
  partitions_rec(n, n, parts, visit);
}

DistributionPair exact_ab_distribution_with_beta(const Permutation& beta, int k,
                                                 int cap) {
  const int n = beta.n();
  validate_params(n, k);
  for (int part : cycle_census(beta).parts) {
    if (part != k)
      throw InvalidParams("exact_ab_distribution_with_beta: beta must consist of "
                          "k-cycles only");
  }
  const Rational weight(Int(1), matchings_count(n));
  DistributionPair pair;
  pair.cycles.n = n;
  pair.classes.n = n;
  enumerate_matchings(
      n,
      [&](const Permutation& alpha) {
        const CycleType lambda = cycle_census(compose(alpha, beta));
        pair.classes.probs[lambda] += weight;
        pair.cycles.probs[lambda.count()] += weight;
      },
      cap);
  return pair;
}

DistributionPair exact_ab_distribution(int n, int k, int cap) {
  validate_params(n, k);
  return exact_ab_distribution_with_beta(make_beta(n, k), k, cap);
}

DistributionPair exact_tau_distribution(int n, int partition_cap) {
  if (n < 3)
    throw InvalidParams("exact_tau_distribution: n must be at least 3");
  if (n > partition_cap)
    throw CapExceeded("exact_tau_distribution: n = " + std::to_string(n) +
                          " exceeds the partition cap " +
                          std::to_string(partition_cap),
                      partition_count(n));
  DistributionPair pair;
  pair.cycles.n = n;
  pair.classes.n = n;
  const Int half_order = factorial(n) / 2;
  enumerate_partitions(n, [&](const std::vector<int>& parts) {
    const int count = static_cast<int>(parts.size());
    if ((n - count) % 2 != 0) return;  // class lies in the odd coset
    const Rational p(class_size(n, parts), half_order);
    pair.classes.probs[CycleType{parts}] = p;
    pair.cycles.probs[count] += p;
  });
  return pair;
}

Rational tv_distance(int n, int k, int cap) {
  const SurfaceParams params = validate_params(n, k);
  if (!params.gamburd_regime)
    throw RegimeMismatch(
        "tv_distance: the glued law lives on the odd coset of the alternating "
        "group for these parameters; comparison needs 2*lcm(2,k) | n");
  const DistributionPair glued = exact_ab_distribution(n, k, cap);
  const DistributionPair uniform = exact_tau_distribution(n);
  std::map<CycleType, Rational> diff = uniform.classes.probs;
  for (const auto& [type, p] : glued.classes.probs) diff[type] -= p;
  Rational total = 0;
  for (const auto& [type, d] : diff) total += d < 0 ? -d : d;
  return total / 2;
}

MomentSet brute_moments(const CycleDistribution& dist, int l) {
  if (l < 1) throw InvalidParams("brute_moments: l must be positive");
  std::vector<Rational> fm(l, Rational(0));
  for (const auto& [t, p] : dist.probs) {
    for (int m = 1; m <= l && m <= t; ++m)
      fm[m - 1] += Rational(falling_power(t, m)) * p;
  }
  return moment_set_from_factorial(std::move(fm));
}

}  // namespace surface_census
