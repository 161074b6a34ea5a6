#include "surface_census/polynomial.hpp"

namespace surface_census {

namespace {
const Rational kZero = 0;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(Rational c) {
  return UnivariatePolynomial({std::move(c)});
}

const Rational& UnivariatePolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients_.size())) return kZero;
  return coefficients_[power];
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
  Rational result = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::scale(const Rational& c) {
  if (c == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& coeff : coefficients_) coeff *= c;
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::multiply_linear(const Rational& c0,
                                                            const Rational& c1) {
  if (coefficients_.empty()) return *this;
  coefficients_.push_back(0);
  for (auto i = coefficients_.size(); i-- > 0;) {
    Rational v = coefficients_[i] * c0;
    if (i > 0) v += coefficients_[i - 1] * c1;
    coefficients_[i] = std::move(v);
  }
  trim();
  return *this;
}

Rational UnivariatePolynomial::coefficient_sum() const {
  Rational total = 0;
  for (const auto& coeff : coefficients_) total += coeff;
  return total;
}

void UnivariatePolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

}  // namespace surface_census
