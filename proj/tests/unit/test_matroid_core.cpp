#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "turan/canonical.hpp"
#include "turan/error.hpp"
#include "turan/geometry.hpp"
#include "turan/io.hpp"
#include "turan/matroid.hpp"
#include "turan/rational.hpp"
#include "turan_verify/oracles.hpp"
#include "turan_verify/random_matroids.hpp"

using namespace turan;
using turan::verify::Rng;

namespace {

std::vector<ElementSet> sets(std::initializer_list<std::uint64_t> bits) {
  std::vector<ElementSet> out;
  for (auto b : bits) out.emplace_back(b);
  return out;
}

ElementSet fano_line(const Matroid& fano) {
  // Any 3-set of rank 2 is a line.
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        const ElementSet s = ElementSet::of({a, b, c});
        if (!fano.is_basis(s)) return s;
      }
  return {};
}

}  // namespace

TEST_CASE("element sets") {
  const ElementSet s = ElementSet::of({0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
  CHECK(s.elements() == std::vector<int>{0, 3, 5});
  CHECK(squeeze(s, 3) == ElementSet::of({0, 4}));
  CHECK(compress(s, ElementSet::of({3, 4, 5})) == ElementSet::of({0, 2}));
  CHECK(expand(ElementSet::of({0, 2}), ElementSet::of({3, 4, 5})) == ElementSet::of({3, 5}));

  int count = 0;
  ElementSet prev;
  for_each_k_subset(6, 3, [&](ElementSet x) {
    CHECK(x.size() == 3);
    if (count > 0) CHECK(prev < x);
    prev = x;
    ++count;
  });
  CHECK(count == 20);
  int full = 0;
  for_each_k_subset(64, 64, [&](ElementSet x) { full += x.size(); });
  CHECK(full == 64);
}

TEST_CASE("validate_exchange") {
  CHECK(validate_exchange(3, sets({0b011, 0b101, 0b110})));
  CHECK(!validate_exchange(4, sets({0b0011, 0b1100})));
  CHECK(validate_exchange(5, sets({0b00111})));
  const auto bad = find_exchange_violation(sets({0b0011, 0b1100}));
  REQUIRE(bad.has_value());
  CHECK(bad->first == ElementSet(0b0011));
}

TEST_CASE("validate_exchange agrees with the pairwise oracle on all families of 2-subsets of 4") {
  std::vector<ElementSet> all;
  for_each_k_subset(4, 2, [&](ElementSet s) { all.push_back(s); });
  for (std::uint64_t pick = 1; pick < (1U << all.size()); ++pick) {
    std::vector<ElementSet> fam;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((pick >> i) & 1U) fam.push_back(all[i]);
    CHECK(validate_exchange(4, fam) == verify::naive_is_matroid(4, fam));
  }
}

TEST_CASE("from_bases rejects bad families") {
  CHECK_THROWS_AS(Matroid::from_bases(4, {}), InvalidMatroid);
  CHECK_THROWS_AS(Matroid::from_bases(4, sets({0b0011, 0b1100})), InvalidMatroid);
  CHECK_THROWS_AS(Matroid::from_bases(2, sets({0b100})), InvalidMatroid);
  CHECK_THROWS_AS(Matroid::from_bases(4, sets({0b0011, 0b0111})), InvalidMatroid);
  try {
    Matroid::from_bases(4, sets({0b0011, 0b1100}));
  } catch (const InvalidMatroid& e) {
    CHECK(e.kind() == InvalidMatroid::Kind::exchange_failure);
  }
}

TEST_CASE("rank and closure") {
  const Matroid u23 = uniform(2, 3);
  CHECK(rank_of(u23, ElementSet::full(3)) == 2);
  CHECK(rank_of(u23, {}) == 0);
  const Matroid fano = projective_geometry(3, 2);
  const ElementSet line = fano_line(fano);
  CHECK(rank_of(fano, line) == 2);
  CHECK(closure(uniform(2, 4), ElementSet::of({0})) == ElementSet::of({0}));
  const ElementSet two = ElementSet::of({line.min(), line.max()});
  CHECK(closure(fano, two) == line);
}

TEST_CASE("closure over GF(2) is the linear span") {
  const LabeledMatroid fano = projective_geometry_labeled(3, 2);
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      FVector sum(3);
      for (int i = 0; i < 3; ++i) sum[i] = fano.coordinates[a][i] ^ fano.coordinates[b][i];
      const int c = static_cast<int>(std::find(fano.coordinates.begin(), fano.coordinates.end(), sum) - fano.coordinates.begin());
      CHECK(closure(fano.matroid, ElementSet::of({a, b})) == ElementSet::of({a, b, c}));
    }
  }
}

TEST_CASE("rank is submodular and closure idempotent on random matroids") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Matroid m = verify::random_matroid(rng, 6);
    const int full = 1 << m.size();
    for (int x = 0; x < full; ++x) {
      const ElementSet xs(static_cast<std::uint64_t>(x));
      CHECK(rank_of(m, xs) == verify::naive_rank(m, xs));
      CHECK(closure(m, closure(m, xs)) == closure(m, xs));
      for (int y = 0; y < full; y += 3) {
        const ElementSet ys(static_cast<std::uint64_t>(y));
        CHECK(rank_of(m, xs | ys) + rank_of(m, xs & ys) <= rank_of(m, xs) + rank_of(m, ys));
        if (xs.includes(ys)) CHECK(rank_of(m, ys) <= rank_of(m, xs));
      }
    }
  }
}

TEST_CASE("deletion and contraction") {
  CHECK(delete_element(uniform(2, 4), 3) == uniform(2, 3));
  CHECK(delete_element(uniform(3, 3), 0) == uniform(2, 2));
  const Matroid fano = projective_geometry(3, 2);
  for (int e = 0; e < 7; ++e) CHECK(delete_element(fano, e).basis_count() == 16);
  CHECK(contract_element(uniform(3, 6), 0) == uniform(2, 5));
  const auto [simple, map] = simplify(contract_element(fano, 0));
  CHECK(simple == uniform(2, 3));
  for (ElementSet cls : map.classes) CHECK(cls.size() == 2);
}

TEST_CASE("deletion and contraction commute") {
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const Matroid m = verify::random_matroid(rng, 7);
    if (m.size() < 2) continue;
    const int e = 0;
    const int f = m.size() - 1;
    // Delete f first (e keeps its index), or contract e first (f moves down by one).
    CHECK(contract_element(delete_element(m, f), e) == delete_element(contract_element(m, e), f - 1));
  }
}

TEST_CASE("rank drops exactly as the loop and coloop rules say") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const Matroid m = verify::random_matroid(rng, 7);
    const ElementSet lo = loops(m);
    const ElementSet co = coloops(m);
    for (int e = 0; e < m.size(); ++e) {
      CHECK((delete_element(m, e).rank() == m.rank()) == !co.contains(e));
      CHECK((contract_element(m, e).rank() == m.rank() - 1) == !lo.contains(e));
    }
  }
}

TEST_CASE("duality") {
  CHECK(dual(uniform(2, 5)) == uniform(3, 5));
  const Matroid fano = projective_geometry(3, 2);
  CHECK(dual(dual(fano)) == fano);
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Matroid m = verify::random_matroid(rng, 8);
    CHECK(dual(m).basis_count() == m.basis_count());
    CHECK(dual(dual(m)) == m);
  }
}

TEST_CASE("simplification and blow-up") {
  const auto [s, map] = simplify(uniform(2, 3));
  CHECK(s == uniform(2, 3));
  CHECK(map.loops.empty());
  CHECK(map.representatives == std::vector<int>{0, 1, 2});
  const std::vector<int> twos{2, 2, 2};
  CHECK(simplify(parallel_blowup(uniform(2, 3), twos)).first == uniform(2, 3));
  const std::vector<int> three{3};
  CHECK(parallel_blowup(uniform(1, 1), three) == uniform(1, 3));
  const std::vector<int> sevens(7, 2);
  const Matroid blown = parallel_blowup(projective_geometry(3, 2), sevens);
  CHECK(blown.size() == 14);
  CHECK(blown.basis_count() == 224);
  CHECK(simplify(blown).first == projective_geometry(3, 2));
  CHECK(is_simple(projective_geometry(3, 2)));
  CHECK(!is_simple(blown));
}

TEST_CASE("direct sums") {
  const Matroid sum = direct_sum(uniform(2, 4), uniform(1, 2));
  CHECK(sum.size() == 6);
  CHECK(sum.rank() == 3);
  CHECK(sum.basis_count() == 12);
  CHECK(direct_sum(uniform(2, 4), uniform(0, 1)).basis_count() == 6);
  // r/2 copies of U_{2,k}: C(k,2)^{r/2} bases.
  const Matroid two = direct_sum(uniform(2, 4), uniform(2, 4));
  CHECK(two.basis_count() == 36);
  CHECK(direct_sum(two, uniform(2, 4)).basis_count() == 216);
  Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const Matroid a = verify::random_matroid(rng, 4);
    const Matroid b = verify::random_matroid(rng, 4);
    CHECK(direct_sum(a, b).basis_count() == a.basis_count() * b.basis_count());
  }
}

TEST_CASE("truncation") {
  CHECK(truncate(uniform(3, 4), 1) == uniform(2, 4));
  const Matroid fano = projective_geometry(3, 2);
  CHECK(truncate(fano, 0) == fano);
  CHECK(truncate(fano, 1) == uniform(2, 7));
  CHECK_THROWS(truncate(fano, 3));
  Rng rng(16);
  for (int i = 0; i < 30; ++i) {
    const Matroid m = verify::random_matroid(rng, 8);
    if (m.rank() < 2) continue;
    std::vector<ElementSet> expect;
    for (ElementSet b : m.bases()) for_each_k_subset_of(b, m.rank() - 1, [&](ElementSet s) { expect.push_back(s); });
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(truncate(m, 1).bases() == expect);
  }
}

TEST_CASE("circuits and circumference") {
  CHECK(circuits(uniform(2, 3)) == std::vector<ElementSet>{ElementSet::full(3)});
  CHECK(circumference(uniform(2, 3)) == 3);
  CHECK(circumference(uniform(2, 4)) == 3);
  CHECK(circumference(projective_geometry(3, 2)) == 4);
  CHECK(!circumference(uniform(3, 3)).has_value());
}

TEST_CASE("basis counts") {
  CHECK(uniform(2, 4).basis_count() == 6);
  CHECK(projective_geometry(3, 3).basis_count() == 234);
}

TEST_CASE("connected components") {
  const auto comps = connected_components(direct_sum(uniform(2, 4), uniform(1, 2)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == ElementSet::full(4));
  CHECK(comps[1] == ElementSet::of({4, 5}));
  CHECK(connected_components(projective_geometry(3, 2)).size() == 1);
}

TEST_CASE("text format") {
  const Matroid u23 = uniform(2, 3);
  CHECK(to_text(u23) == "MATROID v1\nn 3 r 2\nbases 3\n0 1\n0 2\n1 2\n");
  CHECK(parse_matroid("MATROID v1\nn 3 r 2\nbases 3\n0 1\n0 2\n1 2\n# comment\n") == u23);
  CHECK(matroid_from_json(to_json(u23)) == u23);
  CHECK(parse_matroid(to_json(u23).dump()) == u23);
}

TEST_CASE("text round trip on random matroids") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Matroid m = verify::random_matroid(rng, 8);
    CHECK(parse_matroid(to_text(m)) == m);
    CHECK(matroid_from_json(to_json(m)) == m);
  }
}

TEST_CASE("parse errors are distinct and carry lines") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_matroid(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ParseError::Kind::malformed_line;
  };
  CHECK(kind_of("MATROID v2\nn 3 r 2\nbases 1\n0 1\n") == ParseError::Kind::malformed_header);
  CHECK(kind_of("MATROID v1\nn 3 r 2\nbases 1\n0 3\n") == ParseError::Kind::index_out_of_range);
  CHECK(kind_of("MATROID v1\nn 3 r 2\nbases 1\n0 1 2\n") == ParseError::Kind::arity_mismatch);
  CHECK(kind_of("MATROID v1\nn 3 r 2\nbases 0\n") == ParseError::Kind::empty_bases);
  CHECK(kind_of("MATROID v1\nn 4 r 2\nbases 2\n1 2\n3 4\n") == ParseError::Kind::index_out_of_range);
  try {
    parse_matroid("MATROID v1\nn 5 r 2\nbases 2\n1 2\n3 4\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::exchange_failure);
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
    CHECK(std::string(e.what()).find("{3,4}") != std::string::npos);
  }
  try {
    parse_matroid("MATROID v1\nn 3 r 2\nbases 0\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bases nonempty") != std::string::npos);
  }
}

TEST_CASE("hypergraph text") {
  const UniformHypergraph h = basis_hypergraph(uniform(3, 4));
  CHECK(h == UniformHypergraph::complete(4, 3));
  CHECK(parse_hypergraph(to_text(h)) == h);
}

TEST_CASE("canonical form is a complete invariant") {
  Rng rng(18);
  std::vector<Matroid> pool;
  for (int i = 0; i < 40; ++i) {
    const Matroid m = verify::random_matroid(rng, 6);
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(m, perm)) == canonical_form(m));
    pool.push_back(m);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      CHECK(isomorphic(pool[i], pool[j]) == verify::oracle_isomorphic(pool[i], pool[j]));
    }
  }
}

TEST_CASE("canonical form is the least relabelled basis list") {
  Rng rng(19);
  for (int i = 0; i < 15; ++i) {
    const Matroid m = verify::random_matroid(rng, 6);
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<ElementSet> best;
    do {
      const Matroid r = relabel(m, perm);
      if (best.empty() || r.bases() < best) best = r.bases();
    } while (std::next_permutation(perm.begin(), perm.end()));
    // The search is limited to invariant-respecting labelings, so it can
    // only land on the global minimum or an isomorphic list above it.
    const Matroid c = canonical_form(m);
    CHECK(c.bases() >= best);
    CHECK(verify::oracle_isomorphic(c, m));
  }
}

TEST_CASE("twin classes") {
  const auto twins = twin_classes(uniform(2, 4));
  REQUIRE(twins.size() == 1);
  CHECK(twins[0] == ElementSet::full(4));
}

TEST_CASE("exact rationals") {
  CHECK(binomial(6U, 3U) == 20);
  CHECK(factorial(5) == 120);
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.12");
  CHECK(binomial(Rational(7, 2), 2) == Rational(35, 8));
}
