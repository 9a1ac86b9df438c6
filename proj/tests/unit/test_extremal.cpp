#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "turan/canonical.hpp"
#include "turan/error.hpp"
#include "turan/extremal.hpp"
#include "turan/geometry.hpp"
#include "turan/minors.hpp"
#include "turan_verify/oracles.hpp"
#include "turan_verify/random_matroids.hpp"

using namespace turan;
using turan::verify::Rng;

TEST_CASE("rank-2 searches") {
  CHECK(search_ex(4, 2, 2, 3).max_bases == 4);
  const SearchReport six = search_ex(6, 2, 2, 3);
  CHECK(six.max_bases == 9);
  CHECK(six.exhaustive);
  for (const Matroid& w : six.witnesses) CHECK(simplify(w).first.size() <= 2);
}

TEST_CASE("U_{1,t}") {
  for (int t = 2; t <= 5; ++t)
    for (int n = t - 1; n <= 6; ++n) CHECK(search_ex(n, 1, 1, t).max_bases == static_cast<std::uint64_t>(t - 1));
  CHECK(search_ex(3, 3, 1, 2).max_bases == 1);
}

TEST_CASE("small cells match the brute-force oracle") {
  struct Cell {
    int n, r, s, t;
  };
  for (const Cell c : {Cell{4, 2, 2, 3}, Cell{5, 2, 2, 4}, Cell{5, 3, 2, 4}, Cell{5, 3, 3, 4}, Cell{5, 2, 1, 3},
                       Cell{6, 2, 2, 4}, Cell{4, 3, 2, 3}}) {
    const SearchReport rep = search_ex(c.n, c.r, c.s, c.t);
    const verify::BruteForceResult oracle = verify::oracle_max_bases(c.n, c.r, c.s, c.t);
    CHECK(rep.max_bases == oracle.max_bases);
    CHECK(rep.witnesses.size() == oracle.optimal_classes.size());
    for (const Matroid& w : rep.witnesses) {
      CHECK(w.basis_count() == rep.max_bases);
      CHECK(!verify::oracle_has_uniform_minor(w, c.s, c.t));
      CHECK(canonical_form(w) == w);
    }
  }
}

TEST_CASE("U_{3,4}-free witnesses are sums of rank <= 2 pieces") {
  const SearchReport rep = search_ex(6, 3, 3, 4);
  CHECK(rep.max_bases >= 12);
  for (const Matroid& w : rep.witnesses) {
    int total = 0;
    for (ElementSet comp : connected_components(w)) {
      CHECK(rank_of(w, comp) <= 2);
      total += rank_of(w, comp);
    }
    CHECK(total == 3);
  }
}

TEST_CASE("the rank-3 backend agrees with the generic one") {
  SearchOptions rank3;
  rank3.backend = SearchBackend::rank3;
  for (int n = 3; n <= 7; ++n) {
    for (const auto& [s, t] : {std::pair{3, 4}, std::pair{3, 5}, std::pair{2, 4}, std::pair{2, 5}, std::pair{1, 3}}) {
      if (t > n && s == 3) continue;
      // The generic walk needs minutes here; checked against a construction below.
      if (n == 7 && s == 3 && t == 4) continue;
      const SearchReport a = search_ex(n, 3, s, t);
      const SearchReport b = search_ex(n, 3, s, t, rank3);
      CHECK(a.max_bases == b.max_bases);
      CHECK(a.witnesses == b.witnesses);
    }
  }
  const SearchReport seven = search_ex(7, 3, 3, 4, rank3);
  CHECK(seven.max_bases == direct_sum(uniform(2, 5), uniform(1, 2)).basis_count());
  CHECK(seven.witnesses.front() == canonical_form(direct_sum(uniform(2, 5), uniform(1, 2))));
}

TEST_CASE("rank-3 backend reaches two 4-point lines at n = 8") {
  SearchOptions rank3;
  rank3.backend = SearchBackend::rank3;
  const SearchReport rep = search_ex(8, 3, 3, 5, rank3);
  CHECK(rep.max_bases == 48);
  const Matroid lines = canonical_form(two_disjoint_lines(4, 4));
  CHECK(std::find(rep.witnesses.begin(), rep.witnesses.end(), lines) != rep.witnesses.end());
}

TEST_CASE("ex is monotone in n and bounded by C(n,r)") {
  for (int r = 2; r <= 3; ++r) {
    std::uint64_t prev = 0;
    for (int n = r; n <= 7; ++n) {
      const std::uint64_t ex = search_ex(n, r, 2, 4).max_bases;
      CHECK(ex >= prev);
      CHECK(BigInt(ex) <= binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)));
      prev = ex;
    }
  }
}

TEST_CASE("worker count and budgets") {
  SearchOptions four;
  four.workers = 4;
  const SearchReport a = search_ex(6, 3, 3, 4);
  const SearchReport b = search_ex(6, 3, 3, 4, four);
  CHECK(a.max_bases == b.max_bases);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.nodes_explored == b.nodes_explored);
  SearchOptions tiny;
  tiny.max_nodes = 10;
  const SearchReport partial = search_ex(6, 3, 3, 4, tiny);
  CHECK(!partial.exhaustive);
  CHECK(partial.max_bases <= a.max_bases);
  CHECK_THROWS(search_ex(9, 3, 3, 4));
}

TEST_CASE("binary point sets") {
  const BinarySearchReport small = search_binary_max_bases(3, 4);
  CHECK(small.report.max_bases == 4);
  CHECK(small.bose_burton_attains);
  CHECK(small.report.witnesses.front() == canonical_form(uniform(3, 4)));
  const BinarySearchReport all = search_binary_max_bases(3, 7);
  CHECK(all.report.max_bases == 28);
  const BinarySearchReport r4 = search_binary_max_bases(4, 8);
  CHECK(r4.report.nodes_explored == 6435);
  CHECK(r4.report.max_bases == bose_burton(4, 2, 1).basis_count());
  CHECK(r4.bose_burton_c == 1);
  CHECK(r4.bose_burton_attains);
}

TEST_CASE("line decompositions") {
  const Rank3Decomposition two = decompose_rank3(two_disjoint_lines(5, 5), 2, Parity::odd);
  CHECK(two.k == 2);
  CHECK(two.y.empty());
  const Rank3Decomposition u34 = decompose_rank3(uniform(3, 4), 2, Parity::odd);
  CHECK(u34.k == 0);
  CHECK(u34.y == ElementSet::full(4));
  const Rank3Decomposition sixes = decompose_rank3(rank3_multiline(std::vector<int>{6, 6}, 0), 2, Parity::odd);
  CHECK(sixes.k == 2);
  for (const Rank3Decomposition& d : {two, u34, sixes})
    for (const CertificateCheck& c : d.certificate) CHECK_MESSAGE(c.passed, c.name);
  CHECK_THROWS_AS(decompose_rank3(uniform(3, 5), 2, Parity::odd), std::invalid_argument);
  CHECK_THROWS_AS(decompose_rank3(uniform(2, 5), 2, Parity::odd), std::invalid_argument);
}

TEST_CASE("line decompositions of random rank-3 matroids") {
  Rng rng(41);
  int done = 0;
  for (int i = 0; i < 400; ++i) {
    const Matroid m = verify::random_rank3(rng, 12);
    for (Parity parity : {Parity::odd, Parity::even}) {
      const int mm = 2 + i % 2;
      if (has_uniform_restriction(m, 3, parity == Parity::odd ? 2 * mm + 1 : 2 * mm + 2)) continue;
      const Rank3Decomposition d = decompose_rank3(m, mm, parity);
      for (const CertificateCheck& c : d.certificate) CHECK(c.passed);
      ++done;
    }
  }
  CHECK(done > 100);
}

TEST_CASE("U_{3,5}-free classification") {
  const U35Classification lines = classify_u35_free(two_disjoint_lines(4, 4));
  CHECK(lines.kind == U35Classification::Kind::two_lines);
  CHECK(classify_u35_free(projective_geometry(3, 2)).kind == U35Classification::Kind::no_u25_minor);
  CHECK(classify_u35_free(two_disjoint_lines(7, 7)).kind == U35Classification::Kind::two_lines);
  CHECK_THROWS_AS(classify_u35_free(uniform(3, 5)), std::invalid_argument);
}

TEST_CASE("line covers against brute force") {
  CHECK(line_cover_number(projective_geometry(3, 2)) == 3);
  CHECK(line_cover_number(two_disjoint_lines(3, 5)) == 2);
  CHECK(line_cover_number(uniform(3, 7)) == 4);
  CHECK(verify::oracle_line_cover(uniform(3, 7)) == 4);
  CHECK(line_cover_number(projective_geometry(3, 3)) == verify::oracle_line_cover(projective_geometry(3, 3)));
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = verify::random_rank3(rng, 10);
    CHECK(line_cover_number(m) == verify::oracle_line_cover(m));
  }
}

TEST_CASE("truncation probes") {
  CHECK(truncation_probe(2, 1, 2, 2) == 7);
  CHECK(truncation_probe(3, 0, 2, 2) == 3);
  CHECK(truncation_probe(3, 0, 3, 2) == 4);
}

TEST_CASE("density tables") {
  const std::string csv = density_table(2, 2, 3, 2, 5);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,r,s,t,max_bases,r_subsets,density,density_decimal,exhaustive");
  std::getline(in, line);
  CHECK(line.rfind("2,2,2,3,1,1,1,", 0) == 0);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}
