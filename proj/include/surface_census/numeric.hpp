#ifndef SURFACE_CENSUS_NUMERIC_HPP
#define SURFACE_CENSUS_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace surface_census {

// Arbitrary-precision carriers for all exact formulas.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int n);

// n!! = n(n-2)(n-4)...; defined as 1 for n <= 0.
Int double_factorial(int n);

Int binomial(int n, int m);

// Falling power t(t-1)...(t-m+1); m = 0 gives 1.
Int falling_power(int t, int m);

// q^e for e >= 0.
Rational rational_pow(const Rational& q, int e);

double to_double(const Rational& q);

// Canonical "p/q" form, denominator always present ("3/1", "-2/5").
std::string rational_to_string(const Rational& q);

// Accepts "p/q" or a bare integer string.
Rational rational_from_string(const std::string& s);

}  // namespace surface_census

#endif
