#include "turan_verify/random_matroids.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/galois_field.hpp"
#include "turan/geometry.hpp"

namespace turan::verify {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Matroid shuffled(Rng& rng, const Matroid& m) {
  std::vector<int> label(m.size());
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return relabel(m, label);
}

Matroid random_vector_matroid(Rng& rng, int max_n) {
  static constexpr int kFields[] = {2, 3, 4, 5};
  const GaloisField& field = GaloisField::of(kFields[pick(rng, 0, 3)]);
  const int r = pick(rng, 1, std::min(4, max_n));
  const int n = pick(rng, r, max_n);
  while (true) {
    std::vector<FVector> cols(n, FVector(r));
    for (FVector& c : cols) {
      for (int& x : c) x = pick(rng, 0, field.order() - 1);
    }
    if (vector_rank(field, cols) > 0) return vector_matroid(field, cols);
  }
}

Matroid with_loops(const Matroid& m, int loops) {
  if (loops == 0) return m;
  return direct_sum(m, uniform(0, loops));
}

Matroid blown_up(Rng& rng, const Matroid& m, int max_n) {
  std::vector<int> mult(m.size(), 1);
  int total = m.size();
  for (int& k : mult) {
    const int extra = pick(rng, 0, std::min(2, max_n - total));
    k += extra;
    total += extra;
  }
  return parallel_blowup(m, mult);
}

Matroid random_general(Rng& rng, int max_n, int depth) {
  const int kind = depth >= 2 ? pick(rng, 0, 1) : pick(rng, 0, 5);
  switch (kind) {
    case 0:
      return random_vector_matroid(rng, max_n);
    case 1: {
      const int t = pick(rng, 1, max_n);
      return uniform(pick(rng, 1, t), t);
    }
    case 2: {
      if (max_n < 2) return random_general(rng, max_n, depth + 1);
      const Matroid a = random_general(rng, max_n - 1, depth + 1);
      const Matroid b = random_general(rng, max_n - a.size(), depth + 1);
      return shuffled(rng, direct_sum(a, b));
    }
    case 3: {
      const Matroid m = random_general(rng, max_n, depth + 1);
      const Matroid d = dual(m);
      return d.rank() == 0 ? m : d;
    }
    case 4: {
      const Matroid m = random_general(rng, max_n, depth + 1);
      return m.rank() >= 2 ? truncate(m, 1) : m;
    }
    default: {
      const Matroid m = random_general(rng, std::max(1, max_n - 2), depth + 1);
      return shuffled(rng, blown_up(rng, m, max_n));
    }
  }
}

Matroid plane_sample(Rng& rng, int max_n) {
  static constexpr int kOrders[] = {2, 3, 4};
  const Matroid plane = projective_geometry(3, kOrders[pick(rng, 0, 2)]);
  const int k = pick(rng, 4, std::min(max_n, plane.size()));
  while (true) {
    std::vector<int> pts(plane.size());
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(k);
    const ElementSet chosen = ElementSet::from_range(pts);
    if (rank_of(plane, chosen) == 3) return restrict_to(plane, chosen);
  }
}

Matroid multiline_sample(Rng& rng, int max_n) {
  while (true) {
    std::vector<int> sizes(pick(rng, 1, 4));
    for (int& s : sizes) s = pick(rng, 1, 5);
    const int parallel = pick(rng, 0, 2);
    const int total = std::accumulate(sizes.begin(), sizes.end(), parallel);
    if (total > max_n) continue;
    try {
      return rank3_multiline(sizes, parallel, coin(rng, 0.75));
    } catch (const std::invalid_argument&) {
      // Too few groups to reach rank 3; draw again.
    }
  }
}

}  // namespace

Matroid random_matroid(Rng& rng, int max_n) {
  if (max_n < 1) throw std::invalid_argument("random_matroid: max_n must be positive");
  return random_general(rng, max_n, 0);
}

Matroid random_rank3(Rng& rng, int max_n) {
  if (max_n < 4) throw std::invalid_argument("random_rank3: max_n must be at least 4");
  Matroid m = uniform(3, 3);
  switch (pick(rng, 0, 3)) {
    case 0:
      m = multiline_sample(rng, max_n);
      break;
    case 1:
      m = plane_sample(rng, max_n);
      break;
    case 2:
      m = uniform(3, pick(rng, 3, std::min(max_n, 8)));
      break;
    default: {
      const int a = pick(rng, 2, max_n - 2);
      m = two_disjoint_lines(a, pick(rng, 2, max_n - a));
    }
  }
  if (m.size() < max_n && coin(rng)) m = blown_up(rng, m, max_n);
  if (m.size() < max_n && coin(rng, 0.25)) m = with_loops(m, pick(rng, 1, std::min(2, max_n - m.size())));
  return shuffled(rng, m);
}

std::vector<double> random_simplex_point(Rng& rng, int n) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> x(n);
  double total = 0;
  for (double& xi : x) {
    xi = draw(rng);
    total += xi;
  }
  for (double& xi : x) xi /= total;
  return x;
}

}  // namespace turan::verify
