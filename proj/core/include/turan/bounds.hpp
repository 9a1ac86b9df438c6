#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "turan/rational.hpp"

namespace turan {

/// (p, k) with q = p^k for prime p, or nullopt.
std::optional<std::pair<int, int>> prime_power(long long q);
/// Largest prime power <= t (t >= 2).
long long largest_prime_power_at_most(long long t);

/// Number of bases of PG(r-1, t) when t is a prime power:
/// prod_{i<r} (t^r - t^i) / (r! (t-1)^r).
Rational b_formula(int r, int t);
/// The same quantity through b(1,t) = 1 and
/// b(r,t) = b(r-1,t) t^{r-1} (t^r - 1) / (r (t-1)).
Rational b_recursive(int r, int t);

/// Maximum point count (t^r - 1)/(t - 1) of a simple rank-r U_{2,t+2}-free matroid.
BigInt kung_bound(int r, int t);

/// b(r,t) (n(t-1)/(t^r-1))^r, the largest basis count of an n-element
/// rank-r matroid with no U_{2,t+2}-minor.
Rational ex_upper_u2(int n, int r, int t);

/// prod_{i=1}^{r-1} (1 - (q^i - 1)/(q^r - 1)).
Rational density_u2(int r, int q);
/// r! b(r,q) ((q-1)/(q^r-1))^r; equal to density_u2.
Rational density_u2_normalized(int r, int q);

struct RationalInterval {
  Rational lower;
  Rational upper;
  int terms = 0;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
};

/// Certified enclosure of prod_{i>=1} (1 - q^{-i}) of width <= eps. The
/// truncated product P_N is an upper bound; P_N (1 - q^{-N}/(q-1)) a lower one.
RationalInterval infinite_product(int q, const Rational& eps);

/// Interval guaranteed to contain density_u2(r, q), derived from an
/// enclosure of the infinite product. It tightens to that enclosure as r grows.
RationalInterval density_u2_envelope(int r, int q, const RationalInterval& product);

enum class ClosedForm {
  ex_u1,
  ex_u23,
  pi_u34,
  ex_u34_even,
  ex_u34_odd_leading,
  ex_u35,
  pi_u35,
  rank3_lower_odd,
  rank3_lower_even,
};

struct ClosedFormParams {
  int n = 0;
  int r = 0;
  int t = 0;
  int m = 0;
};

std::optional<ClosedForm> parse_closed_form(std::string_view name);
std::string_view name_of(ClosedForm selector);

/// Exact value of a closed-form bound or density. Parity and divisibility
/// preconditions of equality cases are hard errors (std::invalid_argument).
Rational closed_form_small_cases(ClosedForm selector, const ClosedFormParams& p);

struct PrimeBand {
  Rational lower;
  Rational upper;
  long long q = 0;
  Rational constant;
  std::string label = "heuristic width";
};

/// Density band for U_{2,t+2}: lower = density_u2(r, q) with q the largest
/// prime power <= t, upper = lower + C r! / t^{1.475}. The power is replaced
/// by a rational lower bound, so `upper` errs on the large side.
PrimeBand prime_band(int r, int t, const Rational& constant = 1);

}  // namespace turan
