#include <doctest.h>

#include <algorithm>

#include "turan/bounds.hpp"
#include "turan/geometry.hpp"
#include "turan/lagrangian.hpp"
#include "turan/rational.hpp"

using namespace turan;

namespace {
Rational decimal(const char* text) {
  // "0.2887880951" -> exact rational
  std::string s(text);
  const auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  // A leading zero would make the parser read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  return Rational(BigInt(digits), power(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
}
}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(9) == std::pair{3, 2});
  CHECK(prime_power(64) == std::pair{2, 6});
  CHECK(!prime_power(6).has_value());
  CHECK(!prime_power(1).has_value());
  CHECK(largest_prime_power_at_most(6) == 5);
  CHECK(largest_prime_power_at_most(10) == 9);
  CHECK(largest_prime_power_at_most(2) == 2);
}

TEST_CASE("b(r,t)") {
  for (int t : {2, 3, 4, 5, 7}) CHECK(b_formula(1, t) == 1);
  CHECK(b_formula(3, 2) == 28);
  CHECK(b_formula(3, 3) == 234);
  CHECK(b_formula(2, 3) == 6);
  for (int r = 1; r <= 8; ++r)
    for (int t = 2; t <= 7; ++t) CHECK(b_formula(r, t) == b_recursive(r, t));
}

TEST_CASE("Kung's bound") {
  CHECK(kung_bound(3, 2) == 7);
  CHECK(kung_bound(3, 3) == 13);
  CHECK(kung_bound(1, 5) == 1);
}

TEST_CASE("ex_upper_u2") {
  CHECK(ex_upper_u2(14, 3, 2) == 224);
  CHECK(ex_upper_u2(7, 3, 2) == 28);
  for (int n = 1; n <= 9; ++n)
    for (int t = 2; t <= 5; ++t) CHECK(ex_upper_u2(n, 1, t) == n);
  // Equal blow-ups of PG(r-1,t) attain it: b(r,t) k^r.
  CHECK(ex_upper_u2(26, 3, 3) == 234 * 8);
  const std::vector<int> twos(13, 2);
  CHECK(ex_upper_u2(26, 3, 3) == Rational(BigInt(parallel_blowup(projective_geometry(3, 3), twos).basis_count())));
}

TEST_CASE("density_u2") {
  CHECK(density_u2(3, 2) == Rational(24, 49));
  for (int q = 2; q <= 9; ++q) CHECK(density_u2(2, q) == Rational(q, q + 1));
  for (int r = 1; r <= 6; ++r)
    for (int q = 2; q <= 5; ++q) CHECK(density_u2(r, q) == density_u2_normalized(r, q));
  for (int q = 2; q <= 5; ++q)
    for (int r = 2; r < 12; ++r) CHECK(density_u2(r + 1, q) < density_u2(r, q));
}

TEST_CASE("infinite product enclosures") {
  const RationalInterval p2 = infinite_product(2, Rational(1, BigInt(1000000000000LL)));
  CHECK(p2.width() <= Rational(1, BigInt(1000000000000LL)));
  CHECK(abs(p2.lower - decimal("0.2887880951")) <= Rational(1, 1000000000));
  const RationalInterval p3 = infinite_product(3, Rational(1, 1000000));
  CHECK(abs(p3.lower - decimal("0.5601")) <= Rational(1, 10000));
  for (int q = 2; q <= 5; ++q) {
    const RationalInterval p = infinite_product(q, Rational(1, BigInt(1000000000000LL)));
    for (int r = 2; r <= 12; ++r) {
      CHECK(density_u2(r, q) >= p.lower);
      CHECK(density_u2_envelope(r, q, p).contains(density_u2(r, q)));
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_small_cases(ClosedForm::ex_u1, {.n = 4, .r = 3, .t = 3}) == 8);
  CHECK(closed_form_small_cases(ClosedForm::ex_u23, {.n = 6, .r = 2}) == 9);
  CHECK(closed_form_small_cases(ClosedForm::pi_u34, {.r = 3}) == Rational(4, 9));
  CHECK(closed_form_small_cases(ClosedForm::ex_u35, {.n = 14}) == 294);
  CHECK(closed_form_small_cases(ClosedForm::pi_u35, {}) == Rational(3, 4));
  CHECK(closed_form_small_cases(ClosedForm::rank3_lower_odd, {.m = 2}) == Rational(3, 4));
  CHECK(closed_form_small_cases(ClosedForm::ex_u34_even, {.n = 8, .r = 2}) == 28);
  CHECK_THROWS_AS(closed_form_small_cases(ClosedForm::ex_u35, {.n = 15}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_small_cases(ClosedForm::ex_u34_even, {.n = 9, .r = 3}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_small_cases(ClosedForm::ex_u1, {.n = 5, .r = 2, .t = 3}), std::invalid_argument);
  for (std::string_view name : {"ex_u1", "pi_u35", "rank3_lower_even"}) {
    const auto sel = parse_closed_form(name);
    REQUIRE(sel.has_value());
    CHECK(name_of(*sel) == name);
  }
  CHECK(!parse_closed_form("nope").has_value());
}

TEST_CASE("pi_u34 at r = 3 is the limit of ex_u34 densities") {
  // The even formula at n = 2r k evaluated for r = 2 is C(n,2): everything.
  CHECK(closed_form_small_cases(ClosedForm::ex_u34_even, {.n = 6, .r = 2}) == 15);
  // r = 3 leading term n/3 C(2n/3, 2) over C(n,3) tends to 4/9.
  const Rational lead = closed_form_small_cases(ClosedForm::ex_u34_odd_leading, {.n = 3000, .r = 3});
  const Rational ratio = lead / Rational(binomial(3000U, 3U));
  CHECK(abs(ratio - Rational(4, 9)) < Rational(1, 1000));
}

TEST_CASE("prime bands") {
  const PrimeBand exact = prime_band(3, 4);
  CHECK(exact.q == 4);
  CHECK(exact.lower == density_u2(3, 4));
  CHECK(exact.upper > exact.lower);
  CHECK(exact.label == "heuristic width");
  CHECK(prime_band(3, 6).q == 5);
  CHECK(prime_band(3, 10).q == 9);
  CHECK(prime_band(3, 10, 2).upper - prime_band(3, 10, 2).lower == 2 * (prime_band(3, 10).upper - prime_band(3, 10).lower));
}

TEST_CASE("Lagrangian ceiling") {
  CHECK(theorem43_bound(1, 5) == 1);
  CHECK(theorem43_bound(3, 2) == Rational(28, 343));
  CHECK(theorem43_bound(2, 3) == Rational(3, 8));
}
