#include "surface_census/exact.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "surface_census/errors.hpp"

namespace surface_census {

ZetaCache::ZetaCache(int n, int max_order) : n_(n) {
  if (n < 1) throw InvalidParams("ZetaCache: n must be positive");
  if (max_order < 1) throw InvalidParams("ZetaCache: max_order must be positive");
  values_.assign(max_order, Rational(0));
  for (int j = 1; j <= n; ++j) {
    Rational inv(1, j);
    Rational power = inv;
    for (int m = 1; m <= max_order; ++m) {
      values_[m - 1] += power;
      power *= inv;
    }
  }
}

const Rational& ZetaCache::value(int m) const {
  if (m < 1 || m > max_order())
    throw InvalidParams("ZetaCache: order out of range");
  return values_[m - 1];
}

Rational zeta_n(int n, int m) {
  if (n < 1 || m < 1) throw InvalidParams("zeta_n: n and m must be positive");
  Rational total = 0;
  for (int j = 1; j <= n; ++j) {
    Rational term(1, j);
    total += rational_pow(term, m);
  }
  return total;
}

Int stirling_second(int l, int m) {
  if (l < 0 || m < 0) throw InvalidParams("stirling_second: negative argument");
  if (m > l) return 0;
  if (l == 0) return 1;  // m == 0 here
  if (m == 0) return 0;
  // Row recurrence S2(i, j) = j S2(i-1, j) + S2(i-1, j-1).
  std::vector<Int> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= l; ++i) {
    int top = std::min(i, m);
    for (int j = top; j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[m];
}

namespace {

// Sum over partitions of `remaining` into parts of size <= max_part of
// prod_j g_j^{n_j} / (n_j! j^{n_j}); `weight` carries the factor built so
// far. Skipping zero g_j prunes most of the tree.
Rational indicator_sum(int remaining, int max_part, const Rational& weight,
                       std::span<const Rational> g) {
  if (remaining == 0) return weight;
  Rational total = 0;
  for (int j = std::min(remaining, max_part); j >= 1; --j) {
    if (g[j - 1] == 0) continue;
    Rational factor = weight;
    for (int count = 1; count * j <= remaining; ++count) {
      factor *= g[j - 1];
      factor /= count * j;
      total += indicator_sum(remaining - count * j, j - 1, factor, g);
    }
  }
  return total;
}

}  // namespace

Rational cycle_indicator(int l, std::span<const Rational> g) {
  if (l < 0) throw InvalidParams("cycle_indicator: l must be nonnegative");
  if (static_cast<int>(g.size()) < l)
    throw InvalidParams("cycle_indicator: need g_1..g_l");
  if (l == 0) return 1;
  return Rational(factorial(l)) * indicator_sum(l, l, Rational(1), g);
}

UnivariatePolynomial g_sigma(int n) {
  if (n < 1) throw InvalidParams("g_sigma: n must be positive");
  // x(x+1)...(x+n-1) accumulated over integers (every intermediate
  // coefficient is one), divided by n! only at the end.
  std::vector<Int> integer_coeffs = {0, 1};
  for (int j = 1; j < n; ++j) {
    integer_coeffs.push_back(0);
    for (std::size_t i = integer_coeffs.size() - 1; i > 0; --i)
      integer_coeffs[i] = integer_coeffs[i] * j + integer_coeffs[i - 1];
    integer_coeffs[0] *= j;
  }
  const Int denom = factorial(n);
  std::vector<Rational> coeffs(integer_coeffs.size());
  for (std::size_t i = 0; i < integer_coeffs.size(); ++i)
    coeffs[i] = Rational(integer_coeffs[i], denom);
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial g_tau(int n) {
  if (n < 3) throw InvalidParams("g_tau: n must be at least 3");
  UnivariatePolynomial sigma = g_sigma(n);
  // Keep cycle counts t with n - t even (the alternating-group support)
  // and double them; the opposite parity cancels.
  std::vector<Rational> coeffs(static_cast<std::size_t>(sigma.degree()) + 1, 0);
  for (int t = 0; t <= sigma.degree(); ++t) {
    if ((n - t) % 2 == 0) coeffs[t] = 2 * sigma.coefficient(t);
  }
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial f_bound(int n) {
  if (n < 6 || n % 2 != 0)
    throw InvalidParams("f_bound: n must be even and at least 6");
  // 3 x^2 (1+4x)(3+4x)...(n-5+4x) / (n-1)!!
  UnivariatePolynomial poly(std::vector<Rational>{0, 0, 3});
  for (int j = 1; j <= n - 5; j += 2) poly.multiply_linear(j, 4);
  poly.scale(Rational(1, double_factorial(n - 1)));
  return poly;
}

Rational f_at_three_halves(int n) {
  if (n < 6 || n % 2 != 0)
    throw InvalidParams("f_at_three_halves: n must be even and at least 6");
  return Rational(Int(9) * (n + 1), 20);
}

Rational tail_bound_ab(int n, int t) {
  if (t < 0) throw InvalidParams("tail_bound_ab: t must be nonnegative");
  return f_at_three_halves(n) * rational_pow(Rational(2, 3), t / 2);
}

Rational tail_bound_ab_squared(int n, int t) {
  if (t < 0) throw InvalidParams("tail_bound_ab_squared: t must be nonnegative");
  Rational f = f_at_three_halves(n);
  return f * f * rational_pow(Rational(2, 3), t);
}

std::vector<Rational> factorial_moments_sigma(int n, int l) {
  if (l < 1) throw InvalidParams("factorial_moments_sigma: l must be positive");
  ZetaCache zetas(n, l);
  std::vector<Rational> negated(l);
  for (int m = 1; m <= l; ++m) negated[m - 1] = -zetas.value(m);
  std::vector<Rational> moments(l);
  for (int m = 1; m <= l; ++m) {
    Rational value = cycle_indicator(m, negated);
    moments[m - 1] = (m % 2 == 0) ? value : -value;
  }
  return moments;
}

std::vector<Rational> factorial_moments_from_gf(const UnivariatePolynomial& gf,
                                                int l) {
  if (l < 1)
    throw InvalidParams("factorial_moments_from_gf: l must be positive");
  std::vector<Rational> moments(l, Rational(0));
  for (int t = 0; t <= gf.degree(); ++t) {
    const Rational& p = gf.coefficient(t);
    if (p == 0) continue;
    for (int m = 1; m <= l; ++m) {
      if (m > t) break;
      moments[m - 1] += Rational(falling_power(t, m)) * p;
    }
  }
  return moments;
}

std::vector<Rational> factorial_moments_tau(int n, int l) {
  return factorial_moments_from_gf(g_tau(n), l);
}

MomentSet moment_set_from_factorial(std::vector<Rational> factorial_moments) {
  MomentSet set;
  set.order = static_cast<int>(factorial_moments.size());
  set.factorial = std::move(factorial_moments);

  // Ex[C^m] = sum_j S2(m, j) Ex[C^(j)], with the j = 0 term equal to 1
  // only for m = 0 (not used here).
  set.raw.assign(set.order, Rational(0));
  for (int m = 1; m <= set.order; ++m) {
    Rational total = 0;
    for (int j = 1; j <= m; ++j)
      total += Rational(stirling_second(m, j)) * set.factorial[j - 1];
    set.raw[m - 1] = total;
  }

  // Ex[(C - mu)^m] = sum_j (m choose j) Ex[C^j] (-mu)^(m-j).
  set.central.assign(set.order, Rational(0));
  if (set.order >= 1) {
    const Rational& mu = set.raw[0];
    for (int m = 1; m <= set.order; ++m) {
      Rational total = rational_pow(-mu, m);  // j = 0 term
      for (int j = 1; j <= m; ++j) {
        total += Rational(binomial(m, j)) * set.raw[j - 1] *
                 rational_pow(-mu, m - j);
      }
      set.central[m - 1] = total;
    }
  }
  return set;
}

AsymptoticMoments asymptotic_moments(double n, int order) {
  if (n <= 1.0) throw InvalidParams("asymptotic_moments: n must exceed 1");
  if (order < 1 || order > 4)
    throw InvalidParams("asymptotic_moments: order must be 1..4");
  const double log_n = std::log(n);
  const double g = kEulerGamma;
  const double pi2 = kPi * kPi;
  const double zeta2 = pi2 / 6.0;

  AsymptoticMoments result;
  result.n = n;
  auto push = [&](double value, int log_power) {
    AsymptoticMoment entry;
    entry.value = value;
    entry.log_power = log_power;
    entry.error_scale =
        std::pow(log_n, log_power) / std::pow(n, 1.0 / 12.0);
    result.entries.push_back(entry);
  };

  push(log_n + g, 1);
  if (order >= 2) push(log_n + g - zeta2, 1);
  if (order >= 3) push(log_n + g - 3.0 * zeta2 + 2.0 * kZeta3, 1);
  if (order >= 4) {
    const double linear = 1.0 + 6.0 * g - pi2;
    const double constant = g + 3.0 * g * g - g * pi2 - 7.0 * pi2 / 6.0 +
                            12.0 * kZeta3 + pi2 * pi2 / 60.0;
    push(3.0 * log_n * log_n + linear * log_n + constant, 2);
  }
  return result;
}

}  // namespace surface_census
