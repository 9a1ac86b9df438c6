#include "turan/rational.hpp"

#include <stdexcept>

namespace turan {

BigInt power(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational power(const Rational& base, unsigned exponent) {
  return Rational(power(numerator(base), exponent), power(denominator(base), exponent));
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

Rational binomial(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= (x - i) / Rational(k - i);
  return out;
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  const bool negative = x < 0;
  const Rational a = negative ? Rational(-x) : x;
  const BigInt scale = power(BigInt(10), static_cast<unsigned>(digits));
  const BigInt scaled = numerator(a) * scale / denominator(a);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac = std::string(digits - frac.size(), '0') + frac;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace turan
