#ifndef SURFACE_CENSUS_ENUMERATE_HPP
#define SURFACE_CENSUS_ENUMERATE_HPP

#include <functional>
#include <map>

#include "surface_census/exact.hpp"
#include "surface_census/numeric.hpp"
#include "surface_census/permutation.hpp"

namespace surface_census {

inline constexpr int kDefaultMatchingCap = 14;   // 13!! = 135135 matchings
inline constexpr int kDefaultPartitionCap = 40;  // p(40) = 37338 partitions

// Exact law of a cycle count: probs[t] = Pr[C = t], rationals summing to 1.
struct CycleDistribution {
  int n = 0;
  std::map<int, Rational> probs;

  Rational prob(int t) const;
  // Pr[C >= t]
  Rational tail(int t) const;
};

// Exact law over conjugacy classes, keyed by cycle type; probs[lambda] is
// the total probability of the class.
struct ClassDistribution {
  int n = 0;
  std::map<CycleType, Rational> probs;

  // Marginal by cycle count; must agree with the paired CycleDistribution.
  CycleDistribution cycle_marginal() const;
};

struct DistributionPair {
  CycleDistribution cycles;
  ClassDistribution classes;
};

Int matchings_count(int n);  // (n-1)!!

// Visits every fixed-point-free involution of {1..n} exactly once, in the
// canonical order that always pairs the lowest free label first. Throws
// CapExceeded (carrying (n-1)!!) when n > cap.
void enumerate_matchings(int n, const std::function<void(const Permutation&)>& visit,
                         int cap = kDefaultMatchingCap);

// Visits partitions of n as descending part lists.
void enumerate_partitions(int n, const std::function<void(const std::vector<int>&)>& visit);

// Exact law of compose(alpha, beta) over all (n-1)!! matchings alpha, for
// the canonical beta = make_beta(n, k).
DistributionPair exact_ab_distribution(int n, int k, int cap = kDefaultMatchingCap);

// Same, for an arbitrary fixed beta in [k^{n/k}].
DistributionPair exact_ab_distribution_with_beta(const Permutation& beta, int k,
                                                 int cap = kDefaultMatchingCap);

// Exact law of the cycle count / conjugacy class of a uniform element of
// A_n: cycle marginal from g_tau, class probabilities |class| / (n!/2).
DistributionPair exact_tau_distribution(int n, int partition_cap = kDefaultPartitionCap);

// Exact total-variation distance between the glued law and uniform A_n,
// as (1/2) sum over classes |P_ab - P_tau|; both laws are constant on
// conjugacy classes. Requires the 2*lcm(2,k) | n regime (else the glued law
// lives on the odd coset and RegimeMismatch is thrown).
Rational tv_distance(int n, int k, int cap = kDefaultMatchingCap);

// Moments computed directly from an exact distribution; ground truth for
// both the formula engine and the Monte Carlo estimates.
MomentSet brute_moments(const CycleDistribution& dist, int l);

}  // namespace surface_census

#endif
