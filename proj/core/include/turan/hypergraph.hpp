#pragma once

#include <vector>

#include "turan/element_set.hpp"

namespace turan {

class Matroid;

/// A k-uniform hypergraph on vertices 0..v-1. Edges are sorted by bitmask
/// value and duplicate-free.
class UniformHypergraph {
 public:
  /// Throws std::invalid_argument if an edge has the wrong size or leaves [v].
  UniformHypergraph(int vertices, int arity, std::vector<ElementSet> edges);

  int vertex_count() const { return v_; }
  int arity() const { return k_; }
  const std::vector<ElementSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(ElementSet e) const;

  /// Complete k-graph K_v^{(k)}.
  static UniformHypergraph complete(int vertices, int arity);

  bool operator==(const UniformHypergraph&) const = default;

 private:
  int v_;
  int k_;
  std::vector<ElementSet> edges_;
};

UniformHypergraph basis_hypergraph(const Matroid& m);

/// Adds r - k fresh stem vertices v..v+r-k-1 to every edge.
UniformHypergraph suspension(const UniformHypergraph& h, int rank);

}  // namespace turan
