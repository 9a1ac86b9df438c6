#include "turan/minors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "turan/canonical.hpp"
#include "turan/error.hpp"

namespace turan {

namespace {

using BitSet = std::unordered_set<std::uint64_t>;

// Smallest t-set (by bitmask) drawn from `candidates` such that accept(C, v)
// holds every time v is added below the already chosen set C. Vertices are
// fixed from the top down, which is what makes the first hit the minimum.
template <class Accept>
std::optional<ElementSet> least_compatible_set(const std::vector<int>& candidates, int t, Accept&& accept) {
  const int m = static_cast<int>(candidates.size());
  if (t > m) return std::nullopt;
  if (t == 0) return ElementSet{};
  ElementSet chosen;
  std::optional<ElementSet> found;
  auto dfs = [&](auto&& self, int limit, int remaining) -> bool {
    if (remaining == 0) {
      found = chosen;
      return true;
    }
    for (int i = remaining - 1; i < limit; ++i) {
      const int v = candidates[i];
      if (!accept(chosen, v)) continue;
      chosen = chosen.with(v);
      if (self(self, i, remaining - 1)) return true;
      chosen = chosen.without(v);
    }
    return false;
  };
  dfs(dfs, m, t);
  return found;
}

// Every k-subset of `base` united with `extra` is (or, with want=false, is not) in `family`.
bool all_extensions(ElementSet base, int k, ElementSet extra, const BitSet& family, bool want) {
  if (k < 0 || k > base.size()) return true;
  return !any_k_subset(base.size(), k, [&](ElementSet local) {
    const ElementSet s = expand(local, base) | extra;
    return family.contains(s.bits()) != want;
  });
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  const BigInt b = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  return b > cap ? cap + 1 : static_cast<std::uint64_t>(b);
}

BitSet subsets_of_bases(const Matroid& m, int k) {
  BitSet out;
  if (k > m.rank()) return out;
  for (ElementSet b : m.bases()) {
    for_each_k_subset_of(b, k, [&](ElementSet s) { out.insert(s.bits()); });
  }
  return out;
}

}  // namespace

bool hypergraph_is_matroidal(const UniformHypergraph& h) {
  if (h.edges().empty()) return false;
  return validate_exchange(h.vertex_count(), h.edges());
}

bool induced_subgraphs_matroidal(const UniformHypergraph& h) {
  const int v = h.vertex_count();
  if (v > 20) throw BudgetExceeded("induced_subgraphs_matroidal: more than 20 vertices");
  const int limit = std::min(v, 2 * h.arity());
  std::vector<ElementSet> inside;
  for (int w = 1; w <= limit; ++w) {
    const bool bad = any_k_subset(v, w, [&](ElementSet window) {
      inside.clear();
      for (ElementSet e : h.edges()) {
        if (window.includes(e)) inside.push_back(e);
      }
      return !inside.empty() && !validate_exchange(v, inside);
    });
    if (bad) return false;
  }
  return true;
}

std::optional<DaisyWitness> find_daisy(const UniformHypergraph& h, int s, int t) {
  const int k = h.arity();
  if (s < 0 || s > k || t < s) throw std::invalid_argument("find_daisy: need 0 <= s <= k and t >= s");
  const int stem_size = k - s;
  if (h.edges().empty() || stem_size + t > h.vertex_count()) return std::nullopt;
  const std::uint64_t need = binomial_capped(t, s, h.edge_count());
  if (need > h.edge_count()) return std::nullopt;

  // A stem needs at least C(t, s) edges through it.
  std::unordered_map<std::uint64_t, std::uint64_t> through;
  for (ElementSet e : h.edges()) {
    for_each_k_subset_of(e, stem_size, [&](ElementSet stem) { ++through[stem.bits()]; });
  }
  std::vector<ElementSet> stems;
  for (const auto& [bits, count] : through) {
    if (count >= need) stems.emplace_back(bits);
  }
  std::sort(stems.begin(), stems.end());

  const std::uint64_t petal_degree = s == 0 ? 0 : binomial_capped(t - 1, s - 1, h.edge_count());
  for (ElementSet stem : stems) {
    BitSet link;
    std::vector<std::uint64_t> degree(h.vertex_count(), 0);
    for (ElementSet e : h.edges()) {
      if (!e.includes(stem)) continue;
      const ElementSet rest = e - stem;
      link.insert(rest.bits());
      for (int x : rest) ++degree[x];
    }
    std::vector<int> candidates;
    for (int x = 0; x < h.vertex_count(); ++x) {
      if (!stem.contains(x) && degree[x] >= petal_degree) candidates.push_back(x);
    }
    const auto petals = least_compatible_set(candidates, t, [&](ElementSet chosen, int x) {
      return all_extensions(chosen, s - 1, ElementSet::single(x), link, true);
    });
    if (petals) return DaisyWitness{stem, *petals};
  }
  return std::nullopt;
}

std::optional<MinorWitness> find_uniform_minor(const Matroid& m, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("find_uniform_minor: need 1 <= s <= t");
  if (s > m.rank()) return std::nullopt;
  const auto daisy = find_daisy(basis_hypergraph(m), s, t);
  if (!daisy) return std::nullopt;
  return MinorWitness{daisy->stem, daisy->petals};
}

std::optional<ElementSet> find_uniform_restriction(const Matroid& m, int s, int t) {
  if (s < 0 || t < s) throw std::invalid_argument("find_uniform_restriction: need 0 <= s <= t");
  if (s > m.rank() || t > m.size()) return std::nullopt;
  const BitSet independent_s = subsets_of_bases(m, s);
  const BitSet independent_s1 = subsets_of_bases(m, s + 1);
  const ElementSet loop_set = loops(m);
  std::vector<int> candidates;
  for (int e = 0; e < m.size(); ++e) {
    if (s == 0 ? loop_set.contains(e) : !loop_set.contains(e)) candidates.push_back(e);
  }
  return least_compatible_set(candidates, t, [&](ElementSet chosen, int x) {
    const ElementSet v = ElementSet::single(x);
    return all_extensions(chosen, s - 1, v, independent_s, true) &&
           all_extensions(chosen, s, v, independent_s1, false);
  });
}

BigInt count_matroids(int n, int r, const CountOptions& options) {
  if (r < 0 || n < r || n > kMaxElements) throw std::invalid_argument("count_matroids: need 0 <= r <= n");
  if (options.unlabeled && n > 5) throw BudgetExceeded("count_matroids: unlabelled counting is limited to n <= 5");
  if (binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) > 20) {
    throw BudgetExceeded("count_matroids: C(n, r) exceeds 20");
  }
  std::vector<ElementSet> all;
  for_each_k_subset(n, r, [&](ElementSet s) { all.push_back(s); });
  const std::uint64_t families = std::uint64_t{1} << all.size();
  BigInt labelled = 0;
  std::set<std::vector<ElementSet>> classes;
  std::vector<ElementSet> family;
  for (std::uint64_t mask = 1; mask < families; ++mask) {
    family.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) family.push_back(all[i]);
    }
    if (!validate_exchange(n, family)) continue;
    ++labelled;
    if (options.unlabeled) {
      classes.insert(canonical_form(Matroid::from_bases_unchecked(n, r, family)).bases());
    }
  }
  return options.unlabeled ? BigInt(classes.size()) : labelled;
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be nonnegative");
  // Row i of the triangle starts with B_i and ends with B_{i+1}.
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace turan
