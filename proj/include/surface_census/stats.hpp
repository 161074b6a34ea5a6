#ifndef SURFACE_CENSUS_STATS_HPP
#define SURFACE_CENSUS_STATS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "surface_census/enumerate.hpp"

namespace surface_census {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson chi-square of observed counts against expected probabilities.
// Bins with expected count below min_expected are pooled into the previous
// kept bin. Observed mass on zero-probability categories makes the test
// fail outright (p = 0).
ChiSquareResult chi_square(const std::vector<std::uint64_t>& observed,
                           const std::vector<double>& expected_probs,
                           double min_expected = 5.0);

// Convenience wrapper: empirical cycle-count histogram vs an exact law.
ChiSquareResult chi_square_vs_exact(const std::map<int, std::uint64_t>& observed,
                                    const CycleDistribution& exact,
                                    double min_expected = 5.0);

// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi_square_p_value(double statistic, int dof);

}  // namespace surface_census

#endif
