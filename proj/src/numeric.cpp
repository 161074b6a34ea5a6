#include "surface_census/numeric.hpp"

#include <stdexcept>

namespace surface_census {

Int factorial(int n) {
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Int double_factorial(int n) {
  Int result = 1;
  for (int i = n; i >= 2; i -= 2) result *= i;
  return result;
}

Int binomial(int n, int m) {
  if (m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  Int result = 1;
  for (int i = 1; i <= m; ++i) {
    result *= n - m + i;
    result /= i;
  }
  return result;
}

Int falling_power(int t, int m) {
  Int result = 1;
  for (int i = 0; i < m; ++i) result *= t - i;
  return result;
}

Rational rational_pow(const Rational& q, int e) {
  if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational result = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace surface_census
