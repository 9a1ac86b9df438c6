#include "turan/bounds.hpp"

#include <array>
#include <stdexcept>

namespace turan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

BigInt ipow(long long base, int exponent) { return power(BigInt(base), static_cast<unsigned>(exponent)); }

// floor(x^(1/k)) for x >= 0.
BigInt integer_root(const BigInt& x, unsigned k) {
  if (x < 2) return x;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    const BigInt mid = (lo + hi + 1) / 2;
    if (power(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair<int, int>{static_cast<int>(q), 1};
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), k};
}

long long largest_prime_power_at_most(long long t) {
  require(t >= 2, "largest_prime_power_at_most: t >= 2 required");
  while (!prime_power(t)) --t;
  return t;
}

Rational b_formula(int r, int t) {
  require(r >= 1 && t >= 2, "b_formula: need r >= 1, t >= 2");
  const BigInt tr = ipow(t, r);
  BigInt num = 1;
  for (int i = 0; i < r; ++i) num *= tr - ipow(t, i);
  return Rational(num, factorial(r) * ipow(t - 1, r));
}

Rational b_recursive(int r, int t) {
  require(r >= 1 && t >= 2, "b_recursive: need r >= 1, t >= 2");
  Rational b = 1;
  for (int k = 2; k <= r; ++k) {
    b = b * Rational(ipow(t, k - 1) * (ipow(t, k) - 1), BigInt(k) * (t - 1));
  }
  return b;
}

BigInt kung_bound(int r, int t) {
  require(r >= 1 && t >= 2, "kung_bound: need r >= 1, t >= 2");
  return (ipow(t, r) - 1) / (t - 1);
}

Rational ex_upper_u2(int n, int r, int t) {
  require(n >= r && r >= 1 && t >= 2, "ex_upper_u2: need n >= r >= 1, t >= 2");
  return b_formula(r, t) * power(Rational(BigInt(n) * (t - 1), ipow(t, r) - 1), static_cast<unsigned>(r));
}

Rational density_u2(int r, int q) {
  require(r >= 1 && q >= 2, "density_u2: need r >= 1, q >= 2");
  const BigInt qr1 = ipow(q, r) - 1;
  Rational out = 1;
  for (int i = 1; i < r; ++i) out *= 1 - Rational(ipow(q, i) - 1, qr1);
  return out;
}

Rational density_u2_normalized(int r, int q) {
  require(r >= 1 && q >= 2, "density_u2_normalized: need r >= 1, q >= 2");
  return Rational(factorial(r)) * b_formula(r, q) * power(Rational(q - 1, ipow(q, r) - 1), static_cast<unsigned>(r));
}

RationalInterval infinite_product(int q, const Rational& eps) {
  require(q >= 2 && eps > 0, "infinite_product: need q >= 2, eps > 0");
  Rational partial = 1;
  for (int n = 1;; ++n) {
    const Rational qn(1, ipow(q, n));
    partial *= 1 - qn;
    // sum_{i>n} q^{-i} = q^{-n}/(q-1) bounds the relative tail loss.
    const Rational tail = qn / (q - 1);
    if (partial * tail <= eps) return {partial * (1 - tail), partial, n};
  }
}

RationalInterval density_u2_envelope(int r, int q, const RationalInterval& product) {
  require(r >= 2 && q >= 2, "density_u2_envelope: need r >= 2, q >= 2");
  // density_u2(r,q) = P_{r-1} / (1 - q^{-r})^{r-1} with P_{r-1} the truncated
  // product, and P <= P_{r-1} <= P / (1 - q^{-(r-1)}/(q-1)).
  const Rational inflate = 1 / power(1 - Rational(1, ipow(q, r)), static_cast<unsigned>(r - 1));
  const Rational truncation = 1 / (1 - Rational(1, ipow(q, r - 1) * (q - 1)));
  return {product.lower, product.upper * inflate * truncation, product.terms};
}

namespace {
constexpr std::array<std::pair<ClosedForm, std::string_view>, 9> kClosedFormNames{{
    {ClosedForm::ex_u1, "ex_u1"},
    {ClosedForm::ex_u23, "ex_u23"},
    {ClosedForm::pi_u34, "pi_u34"},
    {ClosedForm::ex_u34_even, "ex_u34_even"},
    {ClosedForm::ex_u34_odd_leading, "ex_u34_odd_leading"},
    {ClosedForm::ex_u35, "ex_u35"},
    {ClosedForm::pi_u35, "pi_u35"},
    {ClosedForm::rank3_lower_odd, "rank3_lower_odd"},
    {ClosedForm::rank3_lower_even, "rank3_lower_even"},
}};
}  // namespace

std::optional<ClosedForm> parse_closed_form(std::string_view name) {
  for (const auto& [sel, label] : kClosedFormNames) {
    if (label == name) return sel;
  }
  return std::nullopt;
}

std::string_view name_of(ClosedForm selector) {
  for (const auto& [sel, label] : kClosedFormNames) {
    if (sel == selector) return label;
  }
  return "unknown";
}

Rational closed_form_small_cases(ClosedForm selector, const ClosedFormParams& p) {
  switch (selector) {
    case ClosedForm::ex_u1:
      require(p.r >= 1 && p.t >= 2 && p.n >= p.r, "ex_u1: need n >= r >= 1, t >= 2");
      require(p.n % (p.t - 1) == 0, "ex_u1: t - 1 must divide n");
      return Rational(ipow(p.t - 1, p.r));
    case ClosedForm::ex_u23:
      require(p.r >= 2 && p.n >= p.r, "ex_u23: need n >= r >= 2");
      require(p.n % p.r == 0, "ex_u23: r must divide n");
      return Rational(ipow(p.n / p.r, p.r));
    case ClosedForm::pi_u34:
      require(p.r >= 2, "pi_u34: need r >= 2");
      return Rational(factorial(p.r) * ipow(2, p.r / 2), ipow(p.r, p.r));
    case ClosedForm::ex_u34_even:
      require(p.r >= 2 && p.n > p.r, "ex_u34_even: need n > r >= 2");
      require(p.r % 2 == 0, "ex_u34_even: r must be even");
      return power(binomial(Rational(2 * p.n, p.r), 2), static_cast<unsigned>(p.r / 2));
    case ClosedForm::ex_u34_odd_leading:
      require(p.r >= 3 && p.n > p.r, "ex_u34_odd_leading: need n > r >= 3");
      require(p.r % 2 == 1, "ex_u34_odd_leading: r must be odd");
      return Rational(p.n, p.r) * power(binomial(Rational(2 * p.n, p.r), 2), static_cast<unsigned>((p.r - 1) / 2));
    case ClosedForm::ex_u35: {
      require(p.n >= 14, "ex_u35: need n >= 14");
      require(p.n % 2 == 0, "ex_u35: equality needs n even");
      const BigInt h = p.n / 2;
      return Rational(h * h * h - h * h);
    }
    case ClosedForm::pi_u35:
      return Rational(3, 4);
    case ClosedForm::rank3_lower_odd:
      require(p.m >= 2, "rank3_lower_odd: need m >= 2");
      return 1 - Rational(1, BigInt(p.m) * p.m);
    case ClosedForm::rank3_lower_even: {
      require(p.m >= 2, "rank3_lower_even: need m >= 2");
      const BigInt m2 = BigInt(p.m) * p.m;
      return Rational(4 * m2 * m2, (2 * m2 + 1) * (2 * m2 + 1));
    }
  }
  throw std::invalid_argument("closed_form_small_cases: unknown selector");
}

PrimeBand prime_band(int r, int t, const Rational& constant) {
  require(r >= 2 && t >= 2, "prime_band: need r >= 2, t >= 2");
  PrimeBand band;
  band.q = largest_prime_power_at_most(t);
  band.lower = density_u2(r, static_cast<int>(band.q));
  band.constant = constant;
  // t^{2 - 0.525} = (t^59)^{1/40}; floor of a scaled 40th root is a lower bound.
  constexpr unsigned kDigits = 12;
  const BigInt scale = power(BigInt(10), kDigits);
  const BigInt root = integer_root(ipow(t, 59) * power(scale, 40), 40);
  band.upper = band.lower + constant * Rational(factorial(r) * scale, root);
  return band;
}

}  // namespace turan
