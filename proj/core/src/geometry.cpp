#include "turan/geometry.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "turan/bounds.hpp"
#include "turan/error.hpp"

namespace turan {

namespace {

// Row-echelon rows kept in insertion order; each row is reduced against the
// earlier pivots, so sequential reduction of a new vector is exact.
class Echelon {
 public:
  explicit Echelon(const GaloisField& field) : f_(field) {}

  bool reduce(FVector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int c = v[pivots_[i]];
      if (c == 0) continue;
      const FVector& row = rows_[i];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    for (int x : v) {
      if (x != 0) return true;
    }
    return false;
  }

  void push(FVector v) {
    std::size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    const int scale = f_.inv(v[pivot]);
    for (int& x : v) x = f_.mul(scale, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(static_cast<int>(pivot));
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  std::size_t size() const { return rows_.size(); }

 private:
  const GaloisField& f_;
  std::vector<FVector> rows_;
  std::vector<int> pivots_;
};

void check_points(std::size_t count) {
  if (count > static_cast<std::size_t>(kMaxElements)) {
    throw InvalidMatroid(InvalidMatroid::Kind::size_cap,
                         "construction needs " + std::to_string(count) + " elements; the cap is 64");
  }
}

}  // namespace

std::vector<std::string> LabeledMatroid::label_comments() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    std::string s = std::to_string(i) + ": (";
    for (std::size_t j = 0; j < coordinates[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(coordinates[i][j]);
    }
    out.push_back(s + ")");
  }
  return out;
}

int vector_rank(const GaloisField& field, std::span<const FVector> vectors) {
  Echelon ech(field);
  for (FVector v : vectors) {
    if (ech.reduce(v)) ech.push(std::move(v));
  }
  return static_cast<int>(ech.size());
}

Matroid vector_matroid(const GaloisField& field, std::span<const FVector> columns) {
  return vector_matroid(field, columns, vector_rank(field, columns));
}

Matroid vector_matroid(const GaloisField& field, std::span<const FVector> columns, int r) {
  check_points(columns.size());
  const int n = static_cast<int>(columns.size());
  if (r < 0 || r > vector_rank(field, columns)) throw std::invalid_argument("vector_matroid: rank exceeds column rank");
  std::vector<ElementSet> bases;
  Echelon ech(field);
  auto dfs = [&](auto&& self, int start, ElementSet chosen) -> void {
    const int depth = chosen.size();
    if (depth == r) {
      if (bases.size() >= kMaxMaterializedBases) throw BudgetExceeded("vector matroid has too many bases");
      bases.push_back(chosen);
      return;
    }
    for (int e = start; e <= n - (r - depth); ++e) {
      FVector v = columns[e];
      if (!ech.reduce(v)) continue;
      ech.push(std::move(v));
      self(self, e + 1, chosen.with(e));
      ech.pop();
    }
  };
  dfs(dfs, 0, ElementSet{});
  return Matroid::from_bases_unchecked(n, r, std::move(bases));
}

std::vector<FVector> projective_points(int r, int q) {
  if (r < 1) throw std::invalid_argument("projective_points: rank must be >= 1");
  const GaloisField& field = GaloisField::of(q);
  (void)field;
  check_points(static_cast<std::size_t>(kung_bound(r, q)));
  std::vector<FVector> points;
  FVector v(r, 0);
  // Odometer over GF(q)^r with coordinate 0 most significant.
  while (true) {
    int lead = 0;
    while (lead < r && v[lead] == 0) ++lead;
    if (lead < r && v[lead] == 1) points.push_back(v);
    int i = r - 1;
    while (i >= 0 && ++v[i] == q) v[i--] = 0;
    if (i < 0) break;
  }
  return points;
}

LabeledMatroid projective_geometry_labeled(int r, int q) {
  std::vector<FVector> pts = projective_points(r, q);
  if (b_formula(r, q) > kMaxMaterializedBases) throw BudgetExceeded("PG basis family too large to materialise");
  Matroid m = vector_matroid(GaloisField::of(q), pts);
  return {std::move(m), std::move(pts), q};
}

Matroid projective_geometry(int r, int q) { return projective_geometry_labeled(r, q).matroid; }

LabeledMatroid bose_burton_labeled(int r, int q, int c) {
  if (c < 1 || c > r - 1) throw std::invalid_argument("bose_burton: need 1 <= c <= r - 1");
  GaloisField::of(q);
  const BigInt count = (power(BigInt(q), r) - power(BigInt(q), r - c)) / (q - 1);
  check_points(static_cast<std::size_t>(count));
  // Enumerate PG points lazily: the full geometry may exceed the cap.
  std::vector<FVector> pts;
  FVector v(r, 0);
  while (true) {
    int lead = 0;
    while (lead < r && v[lead] == 0) ++lead;
    if (lead < c && v[lead] == 1) pts.push_back(v);
    int i = r - 1;
    while (i >= 0 && ++v[i] == q) v[i--] = 0;
    if (i < 0) break;
  }
  Matroid m = vector_matroid(GaloisField::of(q), pts);
  return {std::move(m), std::move(pts), q};
}

Matroid bose_burton(int r, int q, int c) { return bose_burton_labeled(r, q, c).matroid; }

Matroid uniform(int s, int t) {
  if (s < 0 || t < s || t > kMaxElements) throw std::invalid_argument("uniform: need 0 <= s <= t <= 64");
  if (binomial(t, s) > kMaxMaterializedBases) throw BudgetExceeded("uniform matroid has too many bases");
  std::vector<ElementSet> bases;
  for_each_k_subset(t, s, [&](ElementSet b) { bases.push_back(b); });
  return Matroid::from_bases_unchecked(t, s, std::move(bases));
}

Matroid rank3_from_lines(int points, std::span<const ElementSet> lines) {
  if (points < 3 || points > kMaxElements) throw std::invalid_argument("rank3_from_lines: need 3..64 points");
  std::vector<ElementSet> long_lines;
  for (ElementSet l : lines) {
    if (!ElementSet::full(points).includes(l)) throw std::invalid_argument("rank3_from_lines: line leaves ground set");
    if (l.size() >= 3) long_lines.push_back(l);
  }
  for (std::size_t i = 0; i < long_lines.size(); ++i) {
    for (std::size_t j = i + 1; j < long_lines.size(); ++j) {
      if ((long_lines[i] & long_lines[j]).size() > 1) {
        throw std::invalid_argument("rank3_from_lines: two lines share more than one point");
      }
    }
  }
  std::vector<ElementSet> bases;
  for_each_k_subset(points, 3, [&](ElementSet s) {
    for (ElementSet l : long_lines) {
      if (l.includes(s)) return;
    }
    bases.push_back(s);
  });
  if (bases.empty()) throw std::invalid_argument("rank3_from_lines: all points lie on one line");
  return Matroid::from_bases_unchecked(points, 3, std::move(bases));
}

Matroid rank3_multiline(std::span<const int> line_sizes, int parallel_class, bool simple_lines) {
  if (parallel_class < 0) throw std::invalid_argument("rank3_multiline: negative parallel class size");
  std::vector<int> group_of;
  for (std::size_t g = 0; g < line_sizes.size(); ++g) {
    if (line_sizes[g] < 1) throw std::invalid_argument("rank3_multiline: line sizes must be positive");
    group_of.insert(group_of.end(), line_sizes[g], static_cast<int>(g));
  }
  const int on_lines = static_cast<int>(group_of.size());
  const int p_group = static_cast<int>(line_sizes.size());
  group_of.insert(group_of.end(), parallel_class, p_group);
  const int n = static_cast<int>(group_of.size());
  if (n > kMaxElements) throw InvalidMatroid(InvalidMatroid::Kind::size_cap, "rank3_multiline exceeds 64 elements");

  std::vector<ElementSet> bases;
  for_each_k_subset(n, 3, [&](ElementSet s) {
    const std::vector<int> e = s.elements();
    const int g0 = group_of[e[0]], g1 = group_of[e[1]], g2 = group_of[e[2]];
    const int in_p = (e[0] >= on_lines) + (e[1] >= on_lines) + (e[2] >= on_lines);
    if (in_p > 1) return;
    if (simple_lines) {
      if (g0 == g1 && g1 == g2) return;
    } else if (g0 == g1 || g1 == g2 || g0 == g2) {
      return;
    }
    bases.push_back(s);
  });
  if (bases.empty()) throw std::invalid_argument("rank3_multiline: configuration has rank below 3");
  return Matroid::from_bases_unchecked(n, 3, std::move(bases));
}

Matroid two_disjoint_lines(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("two_disjoint_lines: each line needs >= 2 points");
  const std::array<int, 2> sizes{a, b};
  return rank3_multiline(sizes, 0, true);
}

}  // namespace turan
