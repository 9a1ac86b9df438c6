#include "turan_verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace turan::verify {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> sorted_bits(const std::vector<ElementSet>& family) {
  std::vector<Mask> out;
  out.reserve(family.size());
  for (ElementSet b : family) out.push_back(b.bits());
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const std::vector<Mask>& sorted, Mask x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

// All k-element submasks of `universe`, by walking every submask.
std::vector<Mask> submasks_of_size(Mask universe, int k) {
  std::vector<Mask> out;
  Mask sub = universe;
  while (true) {
    if (std::popcount(sub) == k) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & universe;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool is_independent(const std::vector<Mask>& bases, Mask x) {
  return std::any_of(bases.begin(), bases.end(), [&](Mask b) { return (x & ~b) == 0; });
}

}  // namespace

bool naive_is_matroid(int n, const std::vector<ElementSet>& family) {
  if (family.empty()) return false;
  const int r = family.front().size();
  for (ElementSet b : family) {
    if (b.size() != r || (b.bits() & ~full_mask(n)) != 0) return false;
  }
  const std::vector<Mask> table = sorted_bits(family);
  for (Mask b1 : table) {
    for (Mask b2 : table) {
      for (int x = 0; x < n; ++x) {
        if (!((b1 >> x) & 1U) || ((b2 >> x) & 1U)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
          if (((b2 >> y) & 1U) && !((b1 >> y) & 1U)) {
            found = member(table, (b1 & ~(Mask{1} << x)) | (Mask{1} << y));
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

int naive_rank(const Matroid& m, ElementSet x) {
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, std::popcount(b.bits() & x.bits()));
  return best;
}

bool oracle_has_uniform_minor(const Matroid& m, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("oracle_has_uniform_minor: need 1 <= s <= t");
  const int r = m.rank();
  if (s > r) return false;
  const std::vector<Mask> bases = sorted_bits(m.bases());
  const Mask ground = full_mask(m.size());
  for (Mask c : submasks_of_size(ground, r - s)) {
    if (!is_independent(bases, c)) continue;
    for (Mask petals : submasks_of_size(ground & ~c, t)) {
      const std::vector<Mask> xs = submasks_of_size(petals, s);
      if (std::all_of(xs.begin(), xs.end(), [&](Mask x) { return member(bases, c | x); })) return true;
    }
  }
  return false;
}

bool oracle_has_uniform_restriction(const Matroid& m, int s, int t) {
  if (s < 0 || t < s) throw std::invalid_argument("oracle_has_uniform_restriction: need 0 <= s <= t");
  const std::vector<Mask> bases = sorted_bits(m.bases());
  for (Mask set : submasks_of_size(full_mask(m.size()), t)) {
    bool ok = true;
    for (Mask x : submasks_of_size(set, s)) ok = ok && is_independent(bases, x);
    if (s < t) {
      for (Mask x : submasks_of_size(set, s + 1)) ok = ok && !is_independent(bases, x);
    }
    if (ok) return true;
  }
  return false;
}

BruteForceResult oracle_max_bases(int n, int r, int s, int t) {
  const std::vector<Mask> all = submasks_of_size(full_mask(n), r);
  if (all.size() > 20) throw std::invalid_argument("oracle_max_bases: more than 20 r-subsets");
  BruteForceResult result;
  std::vector<Matroid> optimal;
  std::vector<ElementSet> family;
  for (Mask pick = 1; pick < (Mask{1} << all.size()); ++pick) {
    family.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((pick >> i) & 1U) family.emplace_back(all[i]);
    }
    if (!naive_is_matroid(n, family)) continue;
    Matroid m = Matroid::from_bases_unchecked(n, r, family);
    if (oracle_has_uniform_minor(m, s, t)) continue;
    ++result.matroids;
    if (family.size() < result.max_bases) continue;
    if (family.size() > result.max_bases) {
      result.max_bases = family.size();
      optimal.clear();
    }
    optimal.push_back(std::move(m));
  }
  for (const Matroid& m : optimal) {
    const bool seen = std::any_of(result.optimal_classes.begin(), result.optimal_classes.end(),
                                  [&](const Matroid& c) { return oracle_isomorphic(c, m); });
    if (!seen) result.optimal_classes.push_back(m);
  }
  return result;
}

std::uint64_t oracle_count_matroids(int n, int r) {
  const std::vector<Mask> all = submasks_of_size(full_mask(n), r);
  if (all.size() > 20) throw std::invalid_argument("oracle_count_matroids: more than 20 r-subsets");
  std::uint64_t count = 0;
  std::vector<ElementSet> family;
  for (Mask pick = 1; pick < (Mask{1} << all.size()); ++pick) {
    family.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((pick >> i) & 1U) family.emplace_back(all[i]);
    }
    if (naive_is_matroid(n, family)) ++count;
  }
  return count;
}

bool oracle_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count()) return false;
  const int n = a.size();
  if (n > 9) throw std::invalid_argument("oracle_isomorphic: n > 9");
  const std::vector<Mask> target = sorted_bits(b.bases());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> image(a.basis_count());
  do {
    for (std::size_t i = 0; i < a.basis_count(); ++i) {
      Mask out = 0;
      for (int e = 0; e < n; ++e) {
        if (a.bases()[i].contains(e)) out |= Mask{1} << perm[e];
      }
      image[i] = out;
    }
    std::sort(image.begin(), image.end());
    if (image == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int oracle_line_cover(const Matroid& m) {
  const int n = m.size();
  if (n == 0) return 0;
  if (m.rank() <= 2) return 1;
  std::vector<Mask> flats;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const ElementSet pair = ElementSet::of({i, j});
      if (naive_rank(m, pair) != 2) continue;
      Mask flat = 0;
      for (int e = 0; e < n; ++e) {
        if (naive_rank(m, pair.with(e)) == 2) flat |= Mask{1} << e;
      }
      flats.push_back(flat);
    }
  }
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  const Mask ground = full_mask(n);
  const int f = static_cast<int>(flats.size());
  for (int k = 1; k <= f; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask covered = 0;
      for (int i : idx) covered |= flats[i];
      if (covered == ground) return k;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == f - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  throw std::logic_error("oracle_line_cover: flats do not cover the ground set");
}

double oracle_grid_max(const Matroid& m, int steps) {
  const int n = m.size();
  std::vector<int> k(n, 0);
  double best = 0;
  auto visit = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      k[i] = left;
      double p = 0;
      for (ElementSet b : m.bases()) {
        double term = 1;
        for (int e : b) term *= static_cast<double>(k[e]) / steps;
        p += term;
      }
      best = std::max(best, p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n > 0) visit(visit, 0, steps);
  return best;
}

}  // namespace turan::verify
