#include "turan/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "turan/error.hpp"

namespace turan {

namespace {

void sort_unique(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

void check_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw std::out_of_range("element " + std::to_string(e) + " outside ground set");
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
  if (n < 0 || n > kMaxElements) {
    throw InvalidMatroid(InvalidMatroid::Kind::size_cap, "ground set size must lie in [0, 64]");
  }
  if (bases.empty()) throw InvalidMatroid(InvalidMatroid::Kind::empty_family, "bases nonempty");
  const ElementSet ground = ElementSet::full(n);
  for (ElementSet b : bases) {
    if (!ground.includes(b)) {
      throw InvalidMatroid(InvalidMatroid::Kind::element_out_of_range, "basis uses an element >= n");
    }
  }
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != r) throw InvalidMatroid(InvalidMatroid::Kind::arity_mismatch, "bases differ in size");
  }
  sort_unique(bases);
  if (auto bad = find_exchange_violation(bases)) {
    std::string msg = "exchange fails for bases {";
    bool first = true;
    for (int e : bad->first) { msg += (first ? "" : ",") + std::to_string(e); first = false; }
    msg += "} and {";
    first = true;
    for (int e : bad->second) { msg += (first ? "" : ",") + std::to_string(e); first = false; }
    msg += "} at element " + std::to_string(bad->element);
    throw InvalidMatroid(InvalidMatroid::Kind::exchange_failure, msg);
  }
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases_unchecked(int n, int r, std::vector<ElementSet> bases) {
  sort_unique(bases);
  return Matroid(n, r, std::move(bases));
}

bool Matroid::is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

std::optional<ExchangeViolation> find_exchange_violation(std::span<const ElementSet> family) {
  std::vector<ElementSet> sorted(family.begin(), family.end());
  sort_unique(sorted);
  auto member = [&](ElementSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (ElementSet b1 : sorted) {
    for (ElementSet b2 : sorted) {
      if (b1 == b2) continue;
      const ElementSet only_second = b2 - b1;
      for (int x : b1 - b2) {
        const ElementSet base = b1.without(x);
        bool found = false;
        for (int y : only_second) {
          if (member(base.with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{b1, b2, x};
      }
    }
  }
  return std::nullopt;
}

bool validate_exchange(int n, std::span<const ElementSet> family) {
  if (family.empty() || n < 0 || n > kMaxElements) return false;
  const ElementSet ground = ElementSet::full(n);
  const int r = family.front().size();
  for (ElementSet b : family) {
    if (!ground.includes(b) || b.size() != r) return false;
  }
  return !find_exchange_violation(family).has_value();
}

int rank_of(const Matroid& m, ElementSet x) {
  const int cap = std::min(x.size(), m.rank());
  int best = 0;
  for (ElementSet b : m.bases()) {
    best = std::max(best, (b & x).size());
    if (best == cap) break;
  }
  return best;
}

bool is_independent(const Matroid& m, ElementSet x) {
  if (x.size() > m.rank()) return false;
  return std::any_of(m.bases().begin(), m.bases().end(), [&](ElementSet b) { return b.includes(x); });
}

ElementSet closure(const Matroid& m, ElementSet x) {
  const int rx = rank_of(m, x);
  ElementSet out = x;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.contains(e) && rank_of(m, x.with(e)) == rx) out = out.with(e);
  }
  return out;
}

ElementSet loops(const Matroid& m) {
  ElementSet used;
  for (ElementSet b : m.bases()) used |= b;
  return m.ground() - used;
}

ElementSet coloops(const Matroid& m) {
  ElementSet common = m.ground();
  for (ElementSet b : m.bases()) common &= b;
  return common;
}

Matroid delete_element(const Matroid& m, int e) {
  check_element(m, e);
  if (coloops(m).contains(e)) return contract_element(m, e);
  std::vector<ElementSet> out;
  out.reserve(m.basis_count());
  for (ElementSet b : m.bases()) {
    if (!b.contains(e)) out.push_back(squeeze(b, e));
  }
  return Matroid::from_bases_unchecked(m.size() - 1, m.rank(), std::move(out));
}

Matroid contract_element(const Matroid& m, int e) {
  check_element(m, e);
  if (loops(m).contains(e)) {
    std::vector<ElementSet> out;
    out.reserve(m.basis_count());
    for (ElementSet b : m.bases()) out.push_back(squeeze(b, e));
    return Matroid::from_bases_unchecked(m.size() - 1, m.rank(), std::move(out));
  }
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    if (b.contains(e)) out.push_back(squeeze(b.without(e), e));
  }
  return Matroid::from_bases_unchecked(m.size() - 1, m.rank() - 1, std::move(out));
}

Matroid restrict_to(const Matroid& m, ElementSet x) {
  x &= m.ground();
  const int rx = rank_of(m, x);
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    const ElementSet part = b & x;
    if (part.size() == rx) out.push_back(compress(part, x));
  }
  return Matroid::from_bases_unchecked(x.size(), rx, std::move(out));
}

Matroid contract_independent(const Matroid& m, ElementSet c) {
  const ElementSet rest = m.ground() - c;
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    if (b.includes(c)) out.push_back(compress(b - c, rest));
  }
  if (out.empty()) throw std::invalid_argument("contract_independent: set is dependent");
  return Matroid::from_bases_unchecked(rest.size(), m.rank() - c.size(), std::move(out));
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> out;
  out.reserve(m.basis_count());
  const ElementSet ground = m.ground();
  for (ElementSet b : m.bases()) out.push_back(ground - b);
  return Matroid::from_bases_unchecked(m.size(), m.size() - m.rank(), std::move(out));
}

SimplificationMap simplification_map(const Matroid& m) {
  const int n = m.size();
  std::vector<ElementSet> together(n);
  ElementSet used;
  for (ElementSet b : m.bases()) {
    used |= b;
    for (int e : b) together[e] |= b;
  }
  SimplificationMap map;
  map.loops = m.ground() - used;
  ElementSet assigned = map.loops;
  for (int i = 0; i < n; ++i) {
    if (assigned.contains(i)) continue;
    // Non-loops never sharing a basis with i form its parallel class.
    const ElementSet cls = (used - together[i]).with(i);
    map.classes.push_back(cls);
    map.representatives.push_back(i);
    assigned |= cls;
  }
  return map;
}

std::pair<Matroid, SimplificationMap> simplify(const Matroid& m) {
  SimplificationMap map = simplification_map(m);
  const ElementSet reps = ElementSet::from_range(map.representatives);
  return {restrict_to(m, reps), std::move(map)};
}

bool is_simple(const Matroid& m) {
  const SimplificationMap map = simplification_map(m);
  return map.loops.empty() && static_cast<int>(map.representatives.size()) == m.size();
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > kMaxElements) {
    throw InvalidMatroid(InvalidMatroid::Kind::size_cap, "direct sum exceeds 64 elements");
  }
  std::vector<ElementSet> out;
  out.reserve(a.basis_count() * b.basis_count());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) out.push_back(x | ElementSet(y.bits() << a.size()));
  }
  return Matroid::from_bases_unchecked(a.size() + b.size(), a.rank() + b.rank(), std::move(out));
}

Matroid truncate(const Matroid& m, int levels) {
  if (levels == 0) return m;
  if (levels < 0 || levels >= m.rank()) throw std::invalid_argument("truncate: need 0 <= levels < rank");
  const int k = m.rank() - levels;
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    for_each_k_subset_of(b, k, [&](ElementSet s) {
      if (seen.insert(s.bits()).second) out.push_back(s);
    });
  }
  return Matroid::from_bases_unchecked(m.size(), k, std::move(out));
}

Matroid parallel_blowup(const Matroid& m, std::span<const int> multiplicity) {
  if (static_cast<int>(multiplicity.size()) != m.size()) {
    throw std::invalid_argument("parallel_blowup: one multiplicity per element required");
  }
  std::vector<int> offset(m.size() + 1, 0);
  for (int i = 0; i < m.size(); ++i) {
    if (multiplicity[i] < 1) throw std::invalid_argument("parallel_blowup: multiplicities must be positive");
    offset[i + 1] = offset[i] + multiplicity[i];
  }
  const int total = offset[m.size()];
  if (total > kMaxElements) throw InvalidMatroid(InvalidMatroid::Kind::size_cap, "blow-up exceeds 64 elements");

  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    const std::vector<int> members = b.elements();
    std::vector<int> choice(members.size(), 0);
    while (true) {
      ElementSet s;
      for (std::size_t j = 0; j < members.size(); ++j) s = s.with(offset[members[j]] + choice[j]);
      out.push_back(s);
      std::size_t j = 0;
      while (j < members.size() && ++choice[j] == multiplicity[members[j]]) choice[j++] = 0;
      if (j == members.size()) break;
    }
  }
  return Matroid::from_bases_unchecked(total, m.rank(), std::move(out));
}

std::vector<ElementSet> circuits(const Matroid& m) {
  // Independent sets level by level; a circuit of size k is a dependent
  // k-set all of whose (k-1)-subsets are independent.
  std::vector<ElementSet> out;
  std::unordered_set<std::uint64_t> previous{0};
  for (int k = 1; k <= std::min(m.rank() + 1, m.size()); ++k) {
    std::unordered_set<std::uint64_t> current;
    if (k <= m.rank()) {
      for (ElementSet b : m.bases()) {
        for_each_k_subset_of(b, k, [&](ElementSet s) { current.insert(s.bits()); });
      }
    }
    std::unordered_set<std::uint64_t> tried;
    for (std::uint64_t bits : previous) {
      const ElementSet base(bits);
      for (int e = 0; e < m.size(); ++e) {
        if (base.contains(e)) continue;
        const ElementSet cand = base.with(e);
        if (current.count(cand.bits()) || !tried.insert(cand.bits()).second) continue;
        bool minimal = true;
        for (int f : cand) {
          if (!previous.count(cand.without(f).bits())) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(cand);
      }
    }
    previous = std::move(current);
    if (previous.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> circumference(const Matroid& m) {
  const std::vector<ElementSet> cs = circuits(m);
  if (cs.empty()) return std::nullopt;
  int best = 0;
  for (ElementSet c : cs) best = std::max(best, c.size());
  return best;
}

std::vector<ElementSet> connected_components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const ElementSet base = m.bases().front();
  for (int e = 0; e < n; ++e) {
    if (base.contains(e)) continue;
    // Fundamental circuit of e with respect to `base`.
    for (int b : base) {
      if (m.is_basis(base.without(b).with(e))) parent[find(b)] = find(e);
    }
  }
  std::vector<ElementSet> comps;
  std::vector<int> index(n, -1);
  for (int e = 0; e < n; ++e) {
    const int root = find(e);
    if (index[root] < 0) {
      index[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[index[root]] = comps[index[root]].with(e);
  }
  return comps;
}

}  // namespace turan
