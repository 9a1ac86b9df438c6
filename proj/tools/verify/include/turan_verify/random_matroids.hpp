#pragma once

#include <random>
#include <vector>

#include "turan/matroid.hpp"

namespace turan::verify {

using Rng = std::mt19937_64;

/// A matroid of rank >= 1 on at most max_n elements, built from vector
/// matroids over small fields, uniform matroids, direct sums, duals,
/// truncations and parallel blow-ups.
Matroid random_matroid(Rng& rng, int max_n);

/// A rank-3 matroid on at most max_n elements: multi-line configurations,
/// point sets of small projective planes, U_{3,t} and two-line unions, each
/// possibly blown up by parallel copies and padded with loops.
Matroid random_rank3(Rng& rng, int max_n);

/// A point of the simplex drawn from the flat Dirichlet distribution.
std::vector<double> random_simplex_point(Rng& rng, int n);

}  // namespace turan::verify
