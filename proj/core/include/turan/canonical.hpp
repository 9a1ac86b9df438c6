#pragma once

#include <span>
#include <vector>

#include "turan/matroid.hpp"

namespace turan {

/// Relabels element e as label[e]; `label` must be a permutation of 0..n-1.
Matroid relabel(const Matroid& m, std::span<const int> label);

/// Elements i, j such that swapping them maps the basis family to itself,
/// grouped into classes ordered by smallest member.
std::vector<ElementSet> twin_classes(const Matroid& m);

/// Canonical representative of the isomorphism class of m.
///
/// Elements are first grouped by an isomorphism invariant (loop status,
/// number of bases through the element, size of its parallel class); labels
/// are handed out class by class. Among those relabelings the one with the
/// smallest sorted basis list wins. Twins are interchangeable, so only one
/// ordering per twin class is explored, and partial labelings are cut as
/// soon as the bases they fix compare worse than the incumbent.
Matroid canonical_form(const Matroid& m);

bool isomorphic(const Matroid& a, const Matroid& b);

}  // namespace turan
