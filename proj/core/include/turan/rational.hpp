#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) { return Rational(num, den); }

BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// Generalised binomial x(x-1)...(x-k+1)/k! for rational x.
Rational binomial(const Rational& x, unsigned k);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
/// Decimal with `digits` places after the point, rounded toward zero.
std::string to_decimal(const Rational& x, int digits);
double to_double(const Rational& x);

}  // namespace turan
