#ifndef SURFACE_CENSUS_EXACT_HPP
#define SURFACE_CENSUS_EXACT_HPP

#include <span>
#include <vector>

#include "surface_census/numeric.hpp"
#include "surface_census/polynomial.hpp"

namespace surface_census {

// Partial zeta sums zeta_n(m) = sum_{j=1..n} 1/j^m, precomputed for
// m = 1..max_order. Built once, shared read-only.
class ZetaCache {
 public:
  ZetaCache(int n, int max_order);

  int n() const { return n_; }
  int max_order() const { return static_cast<int>(values_.size()); }
  const Rational& value(int m) const;

 private:
  int n_;
  std::vector<Rational> values_;  // [m-1] = zeta_n(m)
};

Rational zeta_n(int n, int m);

// Stirling numbers of the second kind, S2(l, m).
Int stirling_second(int l, int m);

// Cycle indicator Z_l of S_l evaluated at g = (g_1..g_l): the sum over
// n_1 + 2 n_2 + ... + l n_l = l of l! prod_j g_j^{n_j} / (n_j! j^{n_j}),
// by direct partition enumeration.
Rational cycle_indicator(int l, std::span<const Rational> g);

// Generating function of the cycle count of a uniform element of S_n:
// x(x+1)...(x+n-1)/n!. Coefficient of x^t = (unsigned Stirling first
// kind c(n,t)) / n!.
UnivariatePolynomial g_sigma(int n);

// Generating function of the cycle count of a uniform element of A_n,
// n >= 3: the bisection of g_sigma onto cycle counts t with n - t even,
// renormalized (coefficients doubled on the surviving parity).
UnivariatePolynomial g_tau(int n);

// Dominating polynomial for the glueing process, n >= 6 even:
// 3 x^2 (1+4x)(3+4x)...(n-5+4x) / (n-1)!!. F(1) = 1.
UnivariatePolynomial f_bound(int n);

// F(3/2) in closed form: 9(n+1)/20.
Rational f_at_three_halves(int n);

// Upper bound B(n,t) >= Pr[C_{alpha beta} >= t], kept rational:
// F(3/2) * (2/3)^floor(t/2). For even t this is the Chernoff value at
// x = sqrt(3/2) exactly; odd t is bracketed by the adjacent even values.
Rational tail_bound_ab(int n, int t);

// Exact squared contract: B(n,t)^2 = F(3/2)^2 * (2/3)^t, valid for all t.
Rational tail_bound_ab_squared(int n, int t);

// Factorial moments Ex[C^{(m)}], m = 1..l, of the S_n cycle count,
// via (-1)^m Z_m(-zeta_n(1), ..., -zeta_n(m)).
std::vector<Rational> factorial_moments_sigma(int n, int l);

// Exact factorial moments of the A_n cycle count (n >= 3), computed as
// finite sums over the g_tau coefficients.
std::vector<Rational> factorial_moments_tau(int n, int l);

// sum_t t^{(m)} * coeff[t] for m = 1..l; works for any cycle-count
// generating function.
std::vector<Rational> factorial_moments_from_gf(const UnivariatePolynomial& gf,
                                                int l);

struct MomentSet {
  int order = 0;
  std::vector<Rational> factorial;  // [m-1] = Ex[C^{(m)}]
  std::vector<Rational> raw;        // [m-1] = Ex[C^m]
  std::vector<Rational> central;    // [m-1] = Ex[(C - Ex C)^m]
};

// Raw moments via the Stirling-second-kind transform, central moments via
// the binomial transform about the mean.
MomentSet moment_set_from_factorial(std::vector<Rational> factorial_moments);

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kZeta3 = 1.202056903159594285399738161511449991;

struct AsymptoticMoment {
  double value = 0.0;
  // The error term is O((log n)^log_power / n^(1/12)).
  int log_power = 0;
  double error_scale = 0.0;  // (log n)^log_power / n^(1/12)
};

// Closed-form large-n values for mean and central moments 2..order of the
// glued-surface cycle count; entries[0] is the mean, entries[l-1] the l-th
// central moment. order <= 4.
struct AsymptoticMoments {
  double n = 0.0;
  std::vector<AsymptoticMoment> entries;
};

AsymptoticMoments asymptotic_moments(double n, int order = 4);

}  // namespace surface_census

#endif
