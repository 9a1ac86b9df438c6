#include <doctest.h>

#include "turan/bounds.hpp"
#include "turan/galois_field.hpp"
#include "turan/geometry.hpp"
#include "turan/minors.hpp"
#include "turan_verify/oracles.hpp"

using namespace turan;

TEST_CASE("GF(4)") {
  const GaloisField f(4);
  CHECK(f.characteristic() == 2);
  CHECK(f.add(1, 1) == 0);
  // x = 2 satisfies x^2 = x + 1.
  CHECK(f.mul(2, 2) == f.add(2, 1));
  CHECK(f.modulus() == 0b111);
}

TEST_CASE("prime fields are integers mod p") {
  for (int p : {2, 3, 5, 7}) {
    const GaloisField f(p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(f.mul(a, b) == a * b % p);
        CHECK(f.add(a, b) == (a + b) % p);
      }
  }
}

TEST_CASE("non prime powers are rejected") {
  CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(12), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(1), std::invalid_argument);
}

TEST_CASE("every supported order builds a field") {
  for (int q = 2; q <= 64; ++q) {
    if (!prime_power(q)) continue;
    const GaloisField& f = GaloisField::of(q);
    CHECK(f.order() == q);
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("projective geometries") {
  CHECK(projective_geometry(2, 3) == uniform(2, 4));
  const Matroid fano = projective_geometry(3, 2);
  CHECK(fano.size() == 7);
  CHECK(fano.basis_count() == 28);
  const Matroid pg23 = projective_geometry(3, 3);
  CHECK(pg23.size() == 13);
  CHECK(pg23.basis_count() == 234);
}

TEST_CASE("basis counts match the closed formula and points match Kung") {
  for (int q : {2, 3, 4, 5}) {
    for (int r = 1; r <= 4; ++r) {
      if (kung_bound(r, q) > 40) continue;
      const Matroid pg = projective_geometry(r, q);
      CHECK(Rational(BigInt(pg.basis_count())) == b_formula(r, q));
      CHECK(BigInt(pg.size()) == kung_bound(r, q));
    }
  }
}

TEST_CASE("binary geometries have no U_{2,4}-minor") {
  for (int r = 2; r <= 4; ++r) CHECK(!has_uniform_minor(projective_geometry(r, 2), 2, 4));
  CHECK(has_uniform_minor(projective_geometry(3, 3), 2, 4));
}

TEST_CASE("Bose-Burton geometries") {
  CHECK(bose_burton(3, 2, 1) == uniform(3, 4));
  CHECK(bose_burton(3, 2, 1).basis_count() == 4);
  CHECK(bose_burton(2, 3, 1) == uniform(2, 3));
  CHECK(bose_burton(4, 2, 1).size() == 8);
  CHECK(bose_burton(3, 2, 2).size() == 6);
  CHECK_THROWS(bose_burton(3, 2, 3));
}

TEST_CASE("BB(r,2,c) contains no copy of PG(c,2)") {
  // PG(c,2) has 2^{c+1}-1 points; a copy would be a flat of rank c+1 that is full.
  for (int r = 2; r <= 3; ++r) {
    for (int c = 1; c <= r - 1; ++c) {
      const Matroid bb = bose_burton(r, 2, c);
      const Matroid target = projective_geometry(c + 1, 2);
      bool found = false;
      for_each_k_subset(bb.size(), target.size(), [&](ElementSet s) {
        if (!found && verify::oracle_isomorphic(restrict_to(bb, s), target)) found = true;
      });
      CHECK(!found);
    }
  }
}

TEST_CASE("label comments list coordinates") {
  const auto labels = projective_geometry_labeled(3, 2).label_comments();
  REQUIRE(labels.size() == 7);
  CHECK(labels[0] == "0: (0,0,1)");
}

TEST_CASE("uniform matroids") {
  CHECK(uniform(2, 4).basis_count() == 6);
  CHECK(uniform(5, 5).basis_count() == 1);
  CHECK(basis_hypergraph(uniform(3, 5)) == UniformHypergraph::complete(5, 3));
}

TEST_CASE("multi-line configurations") {
  const std::vector<int> threes{3, 3};
  const Matroid two3 = rank3_multiline(threes, 0);
  CHECK(two3.size() == 6);
  CHECK(two3.basis_count() == 18);
  const std::vector<int> one3{3};
  const Matroid line_and_class = rank3_multiline(one3, 2);
  // Bases: two points of the line with one of P (3*2), or P with... only one P point is allowed.
  CHECK(line_and_class.basis_count() == 6);
  CHECK(verify::naive_is_matroid(5, line_and_class.bases()));
  CHECK(two_disjoint_lines(7, 7).basis_count() == 294);
  CHECK(two_disjoint_lines(2, 2) == uniform(3, 4));
  CHECK(two_disjoint_lines(3, 3).basis_count() == 18);
  const std::vector<int> groups{2, 2, 2};
  const Matroid as_points = rank3_multiline(groups, 0, false);
  CHECK(as_points.basis_count() == 8);
  CHECK_THROWS(rank3_multiline(std::vector<int>{0, 3}, 0));
}

TEST_CASE("rank-3 matroids from lines") {
  // Fano lines.
  const std::vector<ElementSet> lines{ElementSet::of({0, 1, 2}), ElementSet::of({0, 3, 4}), ElementSet::of({0, 5, 6}),
                                      ElementSet::of({1, 3, 5}), ElementSet::of({1, 4, 6}), ElementSet::of({2, 3, 6}),
                                      ElementSet::of({2, 4, 5})};
  const Matroid m = rank3_from_lines(7, lines);
  CHECK(m.basis_count() == 28);
  CHECK(verify::oracle_isomorphic(m, projective_geometry(3, 2)));
  const std::vector<ElementSet> clash{ElementSet::of({0, 1, 2}), ElementSet::of({0, 1, 3})};
  CHECK_THROWS(rank3_from_lines(5, clash));
}

TEST_CASE("constructions pass the exchange oracle") {
  CHECK(verify::naive_is_matroid(13, projective_geometry(3, 3).bases()));
  CHECK(verify::naive_is_matroid(8, bose_burton(4, 2, 1).bases()));
  CHECK(verify::naive_is_matroid(10, rank3_multiline(std::vector<int>{4, 3, 2}, 1).bases()));
  CHECK(verify::naive_is_matroid(6, two_disjoint_lines(3, 3).bases()));
}
