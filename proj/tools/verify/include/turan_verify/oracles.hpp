#pragma once

// Slow reference implementations. None of them calls into the search,
// daisy, canonical-form or cover code they are used to check.

#include <cstdint>
#include <vector>

#include "turan/matroid.hpp"

namespace turan::verify {

/// Basis exchange checked pair by pair with a sorted lookup table.
bool naive_is_matroid(int n, const std::vector<ElementSet>& family);

/// Rank as the largest intersection with a basis.
int naive_rank(const Matroid& m, ElementSet x);

/// Contracts every independent (r-s)-set C and looks for a t-set T avoiding C
/// such that C plus any s elements of T is a basis.
bool oracle_has_uniform_minor(const Matroid& m, int s, int t);

/// A t-set on which every s-subset is independent and every (s+1)-subset dependent.
bool oracle_has_uniform_restriction(const Matroid& m, int s, int t);

struct BruteForceResult {
  std::uint64_t max_bases = 0;
  std::uint64_t matroids = 0;
  /// One family per isomorphism class attaining max_bases.
  std::vector<Matroid> optimal_classes;
};

/// Walks every nonempty family of r-subsets of an n-set (C(n,r) <= 20) and
/// keeps the matroids with no U_{s,t}-minor.
BruteForceResult oracle_max_bases(int n, int r, int s, int t);

/// Number of labelled rank-r matroids on n elements, by the same walk.
std::uint64_t oracle_count_matroids(int n, int r);

/// Isomorphism by trying every permutation (n <= 9).
bool oracle_isomorphic(const Matroid& a, const Matroid& b);

/// Smallest number of rank-2 flats covering the ground set, by trying every
/// subset of flats in order of size.
int oracle_line_cover(const Matroid& m);

/// Largest p_M over the grid {x : x_i = k_i / steps} of the simplex.
double oracle_grid_max(const Matroid& m, int steps);

}  // namespace turan::verify
