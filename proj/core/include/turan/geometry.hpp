#pragma once

#include <span>
#include <string>
#include <vector>

#include "turan/galois_field.hpp"
#include "turan/matroid.hpp"

namespace turan {

/// Coordinates of a vector over GF(q).
using FVector = std::vector<int>;

/// A matroid represented by vectors; element i is coordinates[i].
struct LabeledMatroid {
  Matroid matroid;
  std::vector<FVector> coordinates;
  int q = 0;

  /// "i: (c0,c1,...)" per element, for --label-map comments.
  std::vector<std::string> label_comments() const;
};

/// Upper limit on materialised basis families; larger requests throw BudgetExceeded.
inline constexpr std::size_t kMaxMaterializedBases = 5'000'000;

/// Rank of a list of vectors over GF(q).
int vector_rank(const GaloisField& field, std::span<const FVector> vectors);

/// The matroid whose bases are the `rank`-subsets of linearly independent columns.
Matroid vector_matroid(const GaloisField& field, std::span<const FVector> columns);

/// Truncation of the vector matroid to `rank`: bases are the independent
/// `rank`-subsets of columns. Requires rank <= the rank of the columns.
Matroid vector_matroid(const GaloisField& field, std::span<const FVector> columns, int rank);

/// Points of PG(r-1, q): nonzero vectors of GF(q)^r whose first nonzero
/// coordinate is 1, in lexicographic coordinate order.
std::vector<FVector> projective_points(int r, int q);

LabeledMatroid projective_geometry_labeled(int r, int q);
Matroid projective_geometry(int r, int q);

/// PG(r-1, q) restricted to the points outside the flat spanned by the last
/// r - c standard vectors, i.e. points with a nonzero among the first c coordinates.
LabeledMatroid bose_burton_labeled(int r, int q, int c);
Matroid bose_burton(int r, int q, int c);

/// U_{s,t}: every s-subset of t elements is a basis.
Matroid uniform(int s, int t);

/// Simple rank-3 matroid on `points` elements whose long lines are `lines`.
/// Lines must pairwise share at most one point; lines of size < 3 impose nothing.
Matroid rank3_from_lines(int points, std::span<const ElementSet> lines);

/// Rank-3 matroid on consecutive groups of sizes line_sizes followed by a
/// parallel class of size `parallel_class`. With simple_lines each group is a
/// line of distinct points; otherwise each group is itself a parallel class.
Matroid rank3_multiline(std::span<const int> line_sizes, int parallel_class, bool simple_lines = true);

/// Two disjoint lines with a and b points.
Matroid two_disjoint_lines(int a, int b);

}  // namespace turan
