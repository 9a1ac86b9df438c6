#pragma once

#include <optional>

#include "turan/hypergraph.hpp"
#include "turan/matroid.hpp"
#include "turan/rational.hpp"

namespace turan {

/// True iff the edges form the basis family of a matroid.
bool hypergraph_is_matroidal(const UniformHypergraph& h);

/// The local test: every induced subgraph on at most 2k vertices is matroidal
/// (edgeless ones count as matroidal). Exponential in v; intended for v <= 16.
bool induced_subgraphs_matroidal(const UniformHypergraph& h);

/// Stem S and petal set T of a daisy: S ∪ X is an edge for every s-subset X of T.
struct DaisyWitness {
  ElementSet stem;
  ElementSet petals;
};

/// Finds a daisy with |S| = k - s and |T| = t in a k-graph. The returned
/// witness has the smallest stem (by bitmask) and, for that stem, the
/// smallest petal set.
std::optional<DaisyWitness> find_daisy(const UniformHypergraph& h, int s, int t);
inline bool has_daisy(const UniformHypergraph& h, int s, int t) { return find_daisy(h, s, t).has_value(); }

/// Contracting `contracted` and restricting to `selected` yields U_{s,t}.
struct MinorWitness {
  ElementSet contracted;
  ElementSet selected;
};

/// U_{s,t}-minor detection through daisies in the basis hypergraph.
/// Requires 1 <= s <= t; returns nullopt when s > r(M).
std::optional<MinorWitness> find_uniform_minor(const Matroid& m, int s, int t);
inline bool has_uniform_minor(const Matroid& m, int s, int t) { return find_uniform_minor(m, s, t).has_value(); }

/// A t-set T with M|T = U_{s,t}, smallest by bitmask.
std::optional<ElementSet> find_uniform_restriction(const Matroid& m, int s, int t);
inline bool has_uniform_restriction(const Matroid& m, int s, int t) {
  return find_uniform_restriction(m, s, t).has_value();
}

struct CountOptions {
  /// Count isomorphism classes instead of labelled matroids (n <= 5 only).
  bool unlabeled = false;
};

/// Number of rank-r matroids on the labelled set {0..n-1}. The search visits
/// every family of r-subsets, so C(n, r) is capped at 20; larger requests
/// throw BudgetExceeded.
BigInt count_matroids(int n, int r, const CountOptions& options = {});

/// Bell number B_n via the Bell triangle; B_0 = 1.
BigInt bell_number(int n);

}  // namespace turan
