#include <doctest.h>

#include "turan/error.hpp"
#include "turan/geometry.hpp"
#include "turan/hypergraph.hpp"
#include "turan/minors.hpp"
#include "turan_verify/oracles.hpp"
#include "turan_verify/random_matroids.hpp"

using namespace turan;
using turan::verify::Rng;

TEST_CASE("basis hypergraphs") {
  const UniformHypergraph h = basis_hypergraph(uniform(3, 4));
  CHECK(h == UniformHypergraph::complete(4, 3));
  const Matroid fano = projective_geometry(3, 2);
  CHECK(basis_hypergraph(fano).edge_count() == 28);
  CHECK(hypergraph_is_matroidal(basis_hypergraph(fano)));
}

TEST_CASE("matroidal hypergraphs") {
  CHECK(hypergraph_is_matroidal(UniformHypergraph::complete(4, 3)));
  CHECK(!hypergraph_is_matroidal(UniformHypergraph(4, 2, {ElementSet::of({0, 1}), ElementSet::of({2, 3})})));
  CHECK(hypergraph_is_matroidal(UniformHypergraph(5, 3, {ElementSet::of({1, 2, 4})})));
}

TEST_CASE("the induced-subgraph test agrees with the global test on 3-graphs") {
  // All 3-graphs on 5 vertices, and a sample on 6.
  std::vector<ElementSet> triples;
  for_each_k_subset(5, 3, [&](ElementSet s) { triples.push_back(s); });
  for (std::uint64_t pick = 1; pick < (1U << triples.size()); ++pick) {
    std::vector<ElementSet> edges;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if ((pick >> i) & 1U) edges.push_back(triples[i]);
    const UniformHypergraph h(5, 3, edges);
    CHECK(hypergraph_is_matroidal(h) == induced_subgraphs_matroidal(h));
  }
  std::vector<ElementSet> six;
  for_each_k_subset(6, 3, [&](ElementSet s) { six.push_back(s); });
  Rng rng(21);
  for (int i = 0; i < 3000; ++i) {
    std::vector<ElementSet> edges;
    const std::uint64_t pick = rng() & ((1U << 20) - 1);
    for (std::size_t j = 0; j < six.size(); ++j)
      if ((pick >> j) & 1U) edges.push_back(six[j]);
    if (edges.empty()) continue;
    const UniformHypergraph h(6, 3, edges);
    CHECK(hypergraph_is_matroidal(h) == induced_subgraphs_matroidal(h));
  }
  Rng mrng(22);
  for (int i = 0; i < 30; ++i) {
    const Matroid m = verify::random_rank3(mrng, 6);
    CHECK(induced_subgraphs_matroidal(basis_hypergraph(m)));
  }
}

TEST_CASE("suspension") {
  const UniformHypergraph k4 = UniformHypergraph::complete(4, 2);
  const UniformHypergraph d = suspension(k4, 3);
  CHECK(d.edge_count() == 6);
  CHECK(d.vertex_count() == 5);
  CHECK(d.arity() == 3);
  CHECK(suspension(k4, 2) == k4);
  CHECK(has_daisy(d, 2, 4));
}

TEST_CASE("daisies") {
  CHECK(has_daisy(basis_hypergraph(uniform(3, 6)), 2, 4));
  CHECK(!has_daisy(basis_hypergraph(projective_geometry(3, 2)), 2, 4));
  const auto w = find_daisy(UniformHypergraph::complete(5, 2), 2, 5);
  REQUIRE(w.has_value());
  CHECK(w->stem.empty());
  CHECK(w->petals == ElementSet::full(5));
}

TEST_CASE("daisy witnesses are the least stem, then the least petal set") {
  const auto w = find_daisy(basis_hypergraph(uniform(3, 6)), 2, 4);
  REQUIRE(w.has_value());
  CHECK(w->stem == ElementSet::of({0}));
  CHECK(w->petals == ElementSet::of({1, 2, 3, 4}));
}

TEST_CASE("uniform minors") {
  CHECK(has_uniform_minor(uniform(2, 3), 2, 3));
  CHECK(!has_uniform_minor(projective_geometry(3, 2), 2, 4));
  CHECK(!has_uniform_minor(two_disjoint_lines(4, 4), 3, 5));
  CHECK(!has_uniform_minor(uniform(2, 5), 3, 3));
  CHECK_THROWS(has_uniform_minor(uniform(2, 5), 0, 3));
  const auto w = find_uniform_minor(uniform(3, 6), 2, 5);
  REQUIRE(w.has_value());
  const Matroid minor = restrict_to(contract_independent(uniform(3, 6), w->contracted),
                                    compress(w->selected, ElementSet::full(6) - w->contracted));
  CHECK(minor == uniform(2, 5));
}

TEST_CASE("minor detection matches the contract-and-restrict oracle") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Matroid m = verify::random_matroid(rng, 7);
    for (int s = 1; s <= m.rank(); ++s) {
      for (int t = s; t <= m.size(); ++t) {
        const bool got = has_uniform_minor(m, s, t);
        CHECK(got == verify::oracle_has_uniform_minor(m, s, t));
        if (got && t > s) CHECK(has_uniform_minor(m, s, t - 1));
      }
    }
  }
}

TEST_CASE("minors of deletions and contractions are minors") {
  Rng rng(24);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = verify::random_matroid(rng, 7);
    for (int e = 0; e < m.size(); ++e) {
      for (const Matroid& minor : {delete_element(m, e), contract_element(m, e)}) {
        for (int s = 1; s <= minor.rank(); ++s)
          for (int t = s; t <= minor.size(); ++t)
            if (has_uniform_minor(minor, s, t)) CHECK(has_uniform_minor(m, s, t));
      }
    }
  }
}

TEST_CASE("uniform restrictions") {
  CHECK(has_uniform_restriction(uniform(3, 5), 3, 4));
  CHECK(!has_uniform_restriction(projective_geometry(3, 2), 3, 5));
  CHECK(has_uniform_restriction(projective_geometry(3, 2), 3, 4));
  // Five points on two 3-point lines always put three on one line.
  CHECK(has_uniform_restriction(rank3_multiline(std::vector<int>{3, 3}, 0), 3, 4));
  CHECK(!has_uniform_restriction(rank3_multiline(std::vector<int>{3, 3}, 0), 3, 5));
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const Matroid m = verify::random_matroid(rng, 7);
    for (int s = 0; s <= m.rank(); ++s)
      for (int t = s; t <= m.size(); ++t) {
        const auto set = find_uniform_restriction(m, s, t);
        CHECK(set.has_value() == verify::oracle_has_uniform_restriction(m, s, t));
        if (set && s >= 1) CHECK(restrict_to(m, *set) == uniform(s, t));
      }
  }
}

TEST_CASE("matroid counts") {
  CHECK(count_matroids(3, 2) == 7);
  CHECK(verify::oracle_count_matroids(3, 2) == 7);
  CHECK(count_matroids(4, 2) == BigInt(verify::oracle_count_matroids(4, 2)));
  CHECK(count_matroids(4, 2) <= bell_number(5));
  CHECK(bell_number(5) == 52);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) CHECK(count_matroids(n, r) == count_matroids(n, n - r));
  CHECK(count_matroids(4, 2, {.unlabeled = true}) == 7);
  CHECK_THROWS_AS(count_matroids(7, 3), BudgetExceeded);
}

TEST_CASE("Bell numbers") {
  const int expect[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n <= 8; ++n) CHECK(bell_number(n) == expect[n]);
}
