#include "turan/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/matroid.hpp"

namespace turan {

UniformHypergraph::UniformHypergraph(int vertices, int arity, std::vector<ElementSet> edges)
    : v_(vertices), k_(arity), edges_(std::move(edges)) {
  if (v_ < 0 || v_ > kMaxElements) throw std::invalid_argument("hypergraph: vertex count must lie in [0, 64]");
  const ElementSet all = ElementSet::full(v_);
  for (ElementSet e : edges_) {
    if (e.size() != k_ || !all.includes(e)) throw std::invalid_argument("hypergraph: edge has wrong size or vertex");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool UniformHypergraph::has_edge(ElementSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

UniformHypergraph UniformHypergraph::complete(int vertices, int arity) {
  std::vector<ElementSet> edges;
  for_each_k_subset(vertices, arity, [&](ElementSet s) { edges.push_back(s); });
  return UniformHypergraph(vertices, arity, std::move(edges));
}

UniformHypergraph basis_hypergraph(const Matroid& m) { return UniformHypergraph(m.size(), m.rank(), m.bases()); }

UniformHypergraph suspension(const UniformHypergraph& h, int rank) {
  if (rank < h.arity()) throw std::invalid_argument("suspension: rank below edge size");
  const int extra = rank - h.arity();
  const ElementSet stem(ElementSet::full(extra).bits() << h.vertex_count());
  std::vector<ElementSet> edges;
  edges.reserve(h.edge_count());
  for (ElementSet e : h.edges()) edges.push_back(e | stem);
  return UniformHypergraph(h.vertex_count() + extra, rank, std::move(edges));
}

}  // namespace turan
