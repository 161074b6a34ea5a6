#ifndef SURFACE_CENSUS_POLYNOMIAL_HPP
#define SURFACE_CENSUS_POLYNOMIAL_HPP

#include <vector>

#include "surface_census/numeric.hpp"

namespace surface_census {

// Dense polynomial over exact rationals; coefficient index = power.
// Trailing zero coefficients are trimmed, so degree() of the zero
// polynomial is -1.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial constant(Rational c);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  // Zero beyond the stored degree.
  const Rational& coefficient(int power) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a,
                                        const UnivariatePolynomial& b) {
    a += b;
    return a;
  }

  UnivariatePolynomial& scale(const Rational& c);

  // *= (c0 + c1 x)
  UnivariatePolynomial& multiply_linear(const Rational& c0, const Rational& c1);

  Rational coefficient_sum() const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

}  // namespace surface_census

#endif
