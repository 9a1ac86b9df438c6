#include <doctest.h>

#include <cmath>
#include <numeric>

#include "turan/canonical.hpp"
#include "turan/error.hpp"
#include "turan/geometry.hpp"
#include "turan/lagrangian.hpp"
#include "turan/minors.hpp"
#include "turan_verify/oracles.hpp"
#include "turan_verify/random_matroids.hpp"

using namespace turan;
using turan::verify::Rng;

TEST_CASE("polynomial values") {
  const std::vector<double> third(3, 1.0 / 3);
  CHECK(poly_eval(uniform(2, 3), third) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  const std::vector<double> point{0, 1, 0, 0};
  CHECK(poly_eval(uniform(2, 4), point) == 0);
  const std::vector<double> seventh(7, 1.0 / 7);
  CHECK(std::abs(poly_eval(projective_geometry(3, 2), seventh) - 28.0 / 343) < 1e-16);
  CHECK_THROWS_AS(poly_eval(uniform(2, 4), third), std::invalid_argument);
  CHECK(poly_eval(basis_hypergraph(uniform(2, 3)), third) == poly_eval(uniform(2, 3), third));
}

TEST_CASE("gradients") {
  const std::vector<double> third(3, 1.0 / 3);
  for (double g : poly_gradient(uniform(2, 3), third)) CHECK(g == doctest::Approx(2.0 / 3));
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Matroid m = verify::random_matroid(rng, 8);
    const auto x = verify::random_simplex_point(rng, m.size());
    const auto g = poly_gradient(m, x);
    double dot = 0;
    for (int e = 0; e < m.size(); ++e) dot += x[e] * g[e];
    CHECK(std::abs(dot - m.rank() * poly_eval(m, x)) < 1e-12);
  }
  const double h = 1e-6;
  for (int i = 0; i < 20; ++i) {
    const Matroid m = verify::random_matroid(rng, 8);
    const auto x = verify::random_simplex_point(rng, m.size());
    const auto g = poly_gradient(m, x);
    double err = 0;
    double scale = 0;
    for (int e = 0; e < m.size(); ++e) {
      auto hi = x;
      auto lo = x;
      hi[e] += h;
      lo[e] -= h;
      err = std::max(err, std::abs((poly_eval(m, hi) - poly_eval(m, lo)) / (2 * h) - g[e]));
      scale = std::max(scale, std::abs(g[e]));
    }
    CHECK(err <= 1e-6 * std::max(scale, 1e-300));
  }
}

TEST_CASE("maximum of U_{2,3} against a grid search") {
  const double grid = verify::oracle_grid_max(uniform(2, 3), 1000);
  const LagrangianResult res = maximize(uniform(2, 3));
  CHECK(std::abs(res.value - 1.0 / 3) < 1e-9);
  CHECK(res.value >= grid - 1e-12);
  CHECK(std::abs(res.value - grid) < 1e-6);
  CHECK(res.certified);
}

TEST_CASE("maximum of small matroids is at least any grid point") {
  Rng rng(32);
  for (int i = 0; i < 15; ++i) {
    const Matroid m = verify::random_matroid(rng, 5);
    const LagrangianResult res = maximize(m);
    CHECK(res.value >= verify::oracle_grid_max(m, 24) - 1e-12);
    CHECK(res.value <= *res.bound + 1e-9);
    CHECK(res.monotone);
  }
}

TEST_CASE("Fano plane") {
  const LagrangianResult res = maximize(projective_geometry(3, 2));
  CHECK(std::abs(res.value - 28.0 / 343) < 1e-9);
  CHECK(res.certified);
  CHECK(res.bound_t == 2);
  CHECK(*res.exact_bound == Rational(28, 343));
  CHECK(std::accumulate(res.argmax.begin(), res.argmax.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("invariance under blow-ups, loops and relabelling") {
  const Matroid fano = projective_geometry(3, 2);
  const double base = maximize(fano).value;
  const std::vector<int> mult{1, 2, 3, 1, 2, 1, 1};
  CHECK(std::abs(maximize(parallel_blowup(fano, mult)).value - base) < 1e-9);
  CHECK(std::abs(maximize(direct_sum(fano, uniform(0, 2))).value - base) < 1e-9);
  const std::vector<int> perm{6, 5, 4, 3, 2, 1, 0};
  CHECK(std::abs(maximize(relabel(fano, perm)).value - base) < 1e-9);
  const Matroid u36 = uniform(3, 6);
  CHECK(std::abs(maximize(u36).value - maximize(parallel_blowup(u36, std::vector<int>(6, 2))).value) < 1e-9);
}

TEST_CASE("free matroids") {
  for (int r = 1; r <= 5; ++r) {
    CHECK(std::abs(maximize(uniform(r, r)).value - std::pow(1.0 / r, r)) < 1e-9);
  }
}

TEST_CASE("ceiling holds on U_{2,t+2}-free geometries") {
  for (int q : {2, 3, 4}) {
    const Matroid pg = projective_geometry(3, q);
    const LagrangianResult res = maximize(pg);
    CHECK(res.bound_t == q);
    CHECK(res.value <= *res.bound + 1e-9);
    CHECK(res.certified);
  }
  const Matroid bb = bose_burton(4, 2, 1);
  const LagrangianResult res = maximize(bb);
  CHECK(res.value <= *res.bound + 1e-9);
  MaximizeOptions opt;
  opt.bound_t = 5;
  CHECK(maximize(projective_geometry(3, 3), opt).bound_t == 5);
  opt.bound_t = 2;
  CHECK_THROWS_AS(maximize(projective_geometry(3, 3), opt), std::invalid_argument);
}

TEST_CASE("gradient bound through contractions") {
  Rng rng(33);
  for (const Matroid& m : {projective_geometry(3, 2), uniform(3, 6), two_disjoint_lines(3, 4)}) {
    std::vector<double> lam(m.size());
    for (int i = 0; i < m.size(); ++i) lam[i] = maximize(contract_element(m, i)).value;
    for (int j = 0; j < 100; ++j) {
      const auto x = verify::random_simplex_point(rng, m.size());
      const auto g = poly_gradient(m, x);
      for (int i = 0; i < m.size(); ++i) CHECK(g[i] <= std::pow(1 - x[i], m.rank() - 1) * lam[i] + 1e-7);
    }
  }
}

TEST_CASE("worker count does not change results") {
  MaximizeOptions one;
  MaximizeOptions four;
  four.workers = 4;
  const Matroid m = projective_geometry(3, 3);
  const LagrangianResult a = maximize(m, one);
  const LagrangianResult b = maximize(m, four);
  CHECK(a.value == b.value);
  CHECK(a.argmax == b.argmax);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("rank 0 is rejected") { CHECK_THROWS_AS(maximize(uniform(0, 3)), std::invalid_argument); }
