#include "turan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace turan {

Matroid relabel(const Matroid& m, std::span<const int> label) {
  if (static_cast<int>(label.size()) != m.size()) throw std::invalid_argument("relabel: label size mismatch");
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  for (ElementSet b : m.bases()) {
    ElementSet out;
    for (int e : b) out = out.with(label[e]);
    bases.push_back(out);
  }
  return Matroid::from_bases_unchecked(m.size(), m.rank(), std::move(bases));
}

namespace {

ElementSet swap_in(ElementSet s, int i, int j) {
  if (s.contains(i) == s.contains(j)) return s;
  return s ^ ElementSet::single(i) ^ ElementSet::single(j);
}

class Canonizer {
 public:
  explicit Canonizer(const Matroid& m) : m_(m), n_(m.size()), r_(m.rank()) {
    const SimplificationMap sm = simplification_map(m);
    std::vector<int> class_size(n_, 0);
    for (ElementSet c : sm.classes) {
      for (int e : c) class_size[e] = c.size();
    }
    std::vector<long long> degree(n_, 0);
    for (ElementSet b : m.bases()) {
      for (int e : b) ++degree[e];
    }
    // Higher degree first, loops last.
    using Key = std::tuple<bool, long long, int>;
    std::vector<Key> key(n_);
    for (int e = 0; e < n_; ++e) key[e] = {sm.loops.contains(e), -degree[e], -class_size[e]};
    std::vector<Key> distinct = key;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const Key& k : distinct) {
      ElementSet cell;
      for (int e = 0; e < n_; ++e) {
        if (key[e] == k) cell = cell.with(e);
      }
      for (int i = 0; i < cell.size(); ++i) slot_cell_.push_back(cell);
    }
    twin_of_.assign(n_, ElementSet{});
    for (ElementSet t : twin_classes(m)) {
      for (int e : t) twin_of_[e] = t;
    }
    label_.assign(n_, -1);
    element_at_.assign(n_, -1);
    blocks_.resize(n_ + 1);
  }

  Matroid run() {
    search(0);
    return relabel(m_, best_label_);
  }

 private:
  // Membership bits of the r-subsets whose largest label is p - 1, in colex order.
  std::vector<char> block(int p) const {
    std::vector<char> bits;
    if (r_ == 0 || p < r_) return bits;
    const int top = element_at_[p - 1];
    for_each_k_subset(p - 1, r_ - 1, [&](ElementSet local) {
      ElementSet s = ElementSet::single(top);
      for (int l : local) s = s.with(element_at_[l]);
      bits.push_back(m_.is_basis(s) ? 1 : 0);
    });
    return bits;
  }

  // Compares the blocks fixed by the first p labels against the incumbent;
  // a larger membership vector means a smaller sorted basis list.
  int compare_prefix(int p) const {
    for (int l = 1; l <= p; ++l) {
      if (blocks_[l] != best_blocks_[l]) return blocks_[l] > best_blocks_[l] ? 1 : -1;
    }
    return 0;
  }

  void search(int p) {
    if (p == n_) {
      if (!have_best_ || compare_prefix(n_) > 0) {
        best_label_ = label_;
        best_blocks_ = blocks_;
        have_best_ = true;
      }
      return;
    }
    for (int e : slot_cell_[p]) {
      if (label_[e] != -1) continue;
      // Twins are interchangeable: take them in increasing element order.
      bool earlier_twin_free = false;
      for (int f : twin_of_[e]) {
        if (f < e && label_[f] == -1) earlier_twin_free = true;
      }
      if (earlier_twin_free) continue;

      label_[e] = p;
      element_at_[p] = e;
      blocks_[p + 1] = block(p + 1);
      if (!have_best_ || compare_prefix(p + 1) >= 0) search(p + 1);
      label_[e] = -1;
      element_at_[p] = -1;
    }
  }

  const Matroid& m_;
  int n_;
  int r_;
  std::vector<ElementSet> slot_cell_;
  std::vector<ElementSet> twin_of_;
  std::vector<int> label_;
  std::vector<int> element_at_;
  std::vector<std::vector<char>> blocks_;
  std::vector<int> best_label_;
  std::vector<std::vector<char>> best_blocks_;
  bool have_best_ = false;
};

}  // namespace

std::vector<ElementSet> twin_classes(const Matroid& m) {
  const int n = m.size();
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  for (int i = 0; i < n; ++i) {
    if (cls[i] != i) continue;
    for (int j = i + 1; j < n; ++j) {
      if (cls[j] != j) continue;
      const bool automorphism = std::all_of(m.bases().begin(), m.bases().end(),
                                            [&](ElementSet b) { return m.is_basis(swap_in(b, i, j)); });
      if (automorphism) cls[j] = i;
    }
  }
  std::vector<ElementSet> out;
  for (int i = 0; i < n; ++i) {
    if (cls[i] != i) continue;
    ElementSet c;
    for (int j = i; j < n; ++j) {
      if (cls[j] == i) c = c.with(j);
    }
    out.push_back(c);
  }
  return out;
}

Matroid canonical_form(const Matroid& m) { return Canonizer(m).run(); }

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace turan
