#include "surface_census/stats.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "surface_census/errors.hpp"

namespace surface_census {

double chi_square_p_value(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  if (statistic <= 0.0) return 1.0;
  if (std::isinf(statistic)) return 0.0;
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square(const std::vector<std::uint64_t>& observed,
                           const std::vector<double>& expected_probs,
                           double min_expected) {
  if (observed.size() != expected_probs.size())
    throw InvalidParams("chi_square: observed and expected sizes differ");
  if (observed.empty()) throw InvalidParams("chi_square: no categories");

  std::uint64_t total = 0;
  for (auto count : observed) total += count;
  if (total == 0) throw InvalidParams("chi_square: no observations");

  // Mass on a zero-probability category can never be explained by the
  // null, whatever the sample size.
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected_probs[i] <= 0.0 && observed[i] > 0) {
      ChiSquareResult result;
      result.statistic = std::numeric_limits<double>::infinity();
      result.dof = 1;
      result.p_value = 0.0;
      return result;
    }
  }

  // Pool adjacent bins until each kept bin expects at least min_expected.
  std::vector<double> kept_observed;
  std::vector<double> kept_expected;
  double pool_obs = 0.0;
  double pool_exp = 0.0;
  const double scale = static_cast<double>(total);
  for (std::size_t i = 0; i < observed.size(); ++i) {
    pool_obs += static_cast<double>(observed[i]);
    pool_exp += scale * expected_probs[i];
    if (pool_exp >= min_expected) {
      kept_observed.push_back(pool_obs);
      kept_expected.push_back(pool_exp);
      pool_obs = 0.0;
      pool_exp = 0.0;
    }
  }
  if (pool_exp > 0.0 || pool_obs > 0.0) {
    if (kept_expected.empty()) {
      kept_observed.push_back(pool_obs);
      kept_expected.push_back(pool_exp);
    } else {
      kept_observed.back() += pool_obs;
      kept_expected.back() += pool_exp;
    }
  }

  ChiSquareResult result;
  result.dof = static_cast<int>(kept_observed.size()) - 1;
  for (std::size_t i = 0; i < kept_observed.size(); ++i) {
    const double diff = kept_observed[i] - kept_expected[i];
    result.statistic += diff * diff / kept_expected[i];
  }
  result.p_value = chi_square_p_value(result.statistic, result.dof);
  return result;
}

ChiSquareResult chi_square_vs_exact(const std::map<int, std::uint64_t>& observed,
                                    const CycleDistribution& exact,
                                    double min_expected) {
  // Categories: the union of observed and expected supports, in order.
  std::map<int, std::pair<std::uint64_t, double>> bins;
  for (const auto& [t, p] : exact.probs) bins[t] = {0, to_double(p)};
  for (const auto& [t, count] : observed) bins[t].first += count;

  std::vector<std::uint64_t> counts;
  std::vector<double> probs;
  counts.reserve(bins.size());
  probs.reserve(bins.size());
  for (const auto& [t, bin] : bins) {
    counts.push_back(bin.first);
    probs.push_back(bin.second);
  }
  return chi_square(counts, probs, min_expected);
}

}  // namespace surface_census
