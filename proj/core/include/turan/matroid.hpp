#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "turan/element_set.hpp"

namespace turan {

/// A matroid on {0..n-1} given by its basis family.
///
/// Bases are kept sorted by bitmask value and free of duplicates, so two
/// matroids on the same labelled ground set compare equal exactly when their
/// basis families coincide. Loops, coloops and parallel classes are derived
/// on demand rather than stored.
class Matroid {
 public:
  /// Validates the family (uniform size, exchange axiom) and throws
  /// InvalidMatroid on failure.
  static Matroid from_bases(int n, std::vector<ElementSet> bases);

  /// Trusted constructor for families produced by library operations.
  /// Sorts and deduplicates but does not check the exchange axiom.
  static Matroid from_bases_unchecked(int n, int r, std::vector<ElementSet> bases);

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  bool is_basis(ElementSet s) const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid(int n, int r, std::vector<ElementSet> bases) : n_(n), r_(r), bases_(std::move(bases)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
};

/// Loops, parallel classes, and class representatives of a matroid.
struct SimplificationMap {
  ElementSet loops;
  /// Parallel classes of non-loops, ordered by smallest member.
  std::vector<ElementSet> classes;
  /// Smallest member of each class; element i of the simplification is representatives[i].
  std::vector<int> representatives;
};

/// Checks that every member has the same size and that the basis-exchange
/// axiom holds for every ordered pair of members.
bool validate_exchange(int n, std::span<const ElementSet> family);

/// Like validate_exchange, but reports the first violating triple (B1, B2, x).
struct ExchangeViolation {
  ElementSet first;
  ElementSet second;
  int element = -1;
};
std::optional<ExchangeViolation> find_exchange_violation(std::span<const ElementSet> family);

int rank_of(const Matroid& m, ElementSet x);
bool is_independent(const Matroid& m, ElementSet x);
ElementSet closure(const Matroid& m, ElementSet x);

ElementSet loops(const Matroid& m);
ElementSet coloops(const Matroid& m);

/// M \ e with indices above e shifted down. Deleting a coloop contracts it.
Matroid delete_element(const Matroid& m, int e);
/// M / e with indices above e shifted down. Contracting a loop deletes it.
Matroid contract_element(const Matroid& m, int e);
/// M | X relabelled to 0..|X|-1 in increasing order.
Matroid restrict_to(const Matroid& m, ElementSet x);
/// M / C for an independent set C, on E - C relabelled in increasing order.
Matroid contract_independent(const Matroid& m, ElementSet c);

Matroid dual(const Matroid& m);

std::pair<Matroid, SimplificationMap> simplify(const Matroid& m);
SimplificationMap simplification_map(const Matroid& m);
bool is_simple(const Matroid& m);

/// M1 on 0..n1-1 and M2 shifted to n1..n1+n2-1.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Rank r - levels; bases are the (r - levels)-subsets of bases.
Matroid truncate(const Matroid& m, int levels);

/// Replaces element i by multiplicity[i] pairwise parallel copies, listed
/// consecutively in element order.
Matroid parallel_blowup(const Matroid& m, std::span<const int> multiplicity);

/// Minimal dependent sets in increasing bitmask order.
std::vector<ElementSet> circuits(const Matroid& m);
/// Size of a largest circuit; nullopt when the matroid has no circuit (n == r).
std::optional<int> circumference(const Matroid& m);

/// Connected components (a loop is its own component), ordered by smallest member.
std::vector<ElementSet> connected_components(const Matroid& m);

}  // namespace turan
