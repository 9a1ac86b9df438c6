#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/matroid.hpp"
#include "turan/rational.hpp"

namespace turan {

using WeightVector = std::vector<double>;

/// p_M(x) = sum over bases of the product of their weights. Bases are summed
/// in stored order with Neumaier compensation, so results are reproducible.
double poly_eval(const Matroid& m, std::span<const double> x);
double poly_eval(const UniformHypergraph& h, std::span<const double> x);

/// Partial derivatives of p_M at x.
std::vector<double> poly_gradient(const Matroid& m, std::span<const double> x);
std::vector<double> poly_gradient(const UniformHypergraph& h, std::span<const double> x);

/// b(r,t) ((t-1)/(t^r-1))^r, the Lagrangian ceiling for rank-r matroids
/// without a U_{2,t+2}-minor.
Rational theorem43_bound(int r, int t);

struct MaximizeOptions {
  double tol = 1e-12;
  int max_iter = 100000;
  /// Random starts in addition to the uniform start.
  int restarts = 16;
  std::uint64_t seed = 0x5EED;
  int workers = 1;
  /// Use this t for the ceiling instead of detecting the smallest valid one.
  std::optional<int> bound_t;
};

struct LagrangianResult {
  double value = 0;
  /// Weights on the original ground set; loops and non-representatives get 0.
  WeightVector argmax;
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
  /// False if some run ever decreased p by more than 1e-12.
  bool monotone = true;
  std::optional<int> bound_t;
  std::optional<Rational> exact_bound;
  std::optional<double> bound;
  /// value matches the ceiling to 1e-9, so it is the true maximum.
  bool certified = false;
};

/// Maximises p_M over the standard simplex with the multiplicative update
/// x_i <- x_i d_i p / (r p), started from the uniform point and from
/// `restarts` seeded random points. The search runs on one representative
/// per parallel class. Throws std::invalid_argument for rank 0.
LagrangianResult maximize(const Matroid& m, const MaximizeOptions& options = {});

}  // namespace turan
