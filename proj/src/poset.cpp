#include "lext/poset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace lext {

LabelSet LabelSet::full(int n) {
  return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

LabelSet LabelSet::of(std::initializer_list<int> labels) {
  return of(std::span<const int>(labels.begin(), labels.size()));
}

LabelSet LabelSet::of(std::span<const int> labels) {
  LabelSet s;
  for (int a : labels) s.insert(a);
  return s;
}

std::vector<int> LabelSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

std::string LabelSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int a : members()) {
    if (!first) s += ',';
    s += std::to_string(a);
    first = false;
  }
  return s + "}";
}

bool canonical_less(LabelSet a, LabelSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

void sort_canonical(std::vector<LabelSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

Poset Poset::build(int n, std::span<const std::pair<int, int>> relations) {
  if (n < 0 || n > kMaxLabels) {
    throw Error("poset.size", "n must lie in 0.." + std::to_string(kMaxLabels) + ", got " +
                                  std::to_string(n));
  }
  std::set<std::pair<int, int>> seen;
  Poset p;
  p.n_ = n;
  p.up_.assign(n, 0);
  for (int a = 1; a <= n; ++a) p.up_[a - 1] = std::uint64_t{1} << (a - 1);
  for (auto [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error("poset.label_range", "relation (" + std::to_string(a) + "," +
                                           std::to_string(b) + ") has a label outside 1.." +
                                           std::to_string(n));
    }
    if (!seen.insert({a, b}).second) {
      throw Error("poset.duplicate_pair",
                  "relation (" + std::to_string(a) + "," + std::to_string(b) + ") given twice");
    }
    if (a == b) {
      throw Error("poset.acyclic", "relation (" + std::to_string(a) + "," + std::to_string(b) +
                                       ") is a loop");
    }
    p.up_[a - 1] |= std::uint64_t{1} << (b - 1);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((p.up_[i] >> k) & 1u) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((p.up_[a] >> b) & 1u) p.down_[b] |= std::uint64_t{1} << a;
    }
  }
  for (int a = 0; a < n; ++a) {
    std::uint64_t both = p.up_[a] & p.down_[a] & ~(std::uint64_t{1} << a);
    if (both != 0) {
      throw Error("poset.acyclic", "relations contain a cycle through " + std::to_string(a + 1) +
                                       " and " + std::to_string(__builtin_ctzll(both) + 1));
    }
  }
  p.ucov_.assign(n, 0);
  p.lcov_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    std::uint64_t strict = p.up_[a] & ~(std::uint64_t{1} << a);
    std::uint64_t above_strict = 0;
    for (std::uint64_t m = strict; m != 0; m &= m - 1) {
      int c = __builtin_ctzll(m);
      above_strict |= p.up_[c] & ~(std::uint64_t{1} << c);
    }
    p.ucov_[a] = strict & ~above_strict;
    for (std::uint64_t m = p.ucov_[a]; m != 0; m &= m - 1) {
      int b = __builtin_ctzll(m);
      p.lcov_[b] |= std::uint64_t{1} << a;
      p.covers_.emplace_back(a + 1, b + 1);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Poset Poset::antichain(int n) { return build(n, std::span<const std::pair<int, int>>{}); }

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 1; a < n; ++a) rel.emplace_back(a, a + 1);
  return build(n, rel);
}

Poset Poset::chain_union(std::span<const int> lengths) {
  std::vector<std::pair<int, int>> rel;
  int offset = 0;
  for (int len : lengths) {
    for (int k = 1; k < len; ++k) rel.emplace_back(offset + k, offset + k + 1);
    offset += len;
  }
  return build(offset, rel);
}

bool Poset::is_naturally_labeled() const {
  return std::all_of(covers_.begin(), covers_.end(), [](auto c) { return c.first < c.second; });
}

bool Poset::is_rooted_forest() const {
  for (int a = 1; a <= n_; ++a) {
    if (upper_covers(a).size() > 1) return false;
  }
  return true;
}

bool Poset::is_union_of_chains() const {
  for (int a = 1; a <= n_; ++a) {
    if (upper_covers(a).size() > 1 || lower_covers(a).size() > 1) return false;
  }
  return true;
}

bool Poset::is_upper_set(LabelSet s) const {
  for (int a : s.members()) {
    if (!up_set(a).is_subset_of(s)) return false;
  }
  return true;
}

bool Poset::is_lower_set(LabelSet s) const {
  for (int a : s.members()) {
    if (!down_set(a).is_subset_of(s)) return false;
  }
  return true;
}

std::vector<LabelSet> Poset::upper_sets() const {
  // Grow from the empty set by adding an element whose strict up-set is present.
  std::unordered_set<std::uint64_t> seen{0};
  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    std::uint64_t s = queue.front();
    queue.pop_front();
    for (int a = 0; a < n_; ++a) {
      std::uint64_t bit = std::uint64_t{1} << a;
      if ((s & bit) != 0 || (up_[a] & ~bit & ~s) != 0) continue;
      if (seen.insert(s | bit).second) queue.push_back(s | bit);
    }
  }
  std::vector<LabelSet> out;
  out.reserve(seen.size());
  for (auto m : seen) out.push_back(LabelSet::from_mask(m));
  sort_canonical(out);
  return out;
}

std::vector<LabelSet> Poset::lower_sets() const {
  std::vector<LabelSet> out;
  for (LabelSet u : upper_sets()) out.push_back(u.complement(n_));
  sort_canonical(out);
  return out;
}

Poset Poset::restrict(LabelSet s) const {
  std::vector<int> members = s.members();
  std::vector<int> relabel(n_ + 1, 0);
  for (std::size_t k = 0; k < members.size(); ++k) relabel[members[k]] = static_cast<int>(k) + 1;
  std::vector<std::pair<int, int>> rel;
  for (int a : members) {
    for (int b : members) {
      if (a != b && leq(a, b)) rel.emplace_back(relabel[a], relabel[b]);
    }
  }
  return build(static_cast<int>(members.size()), rel);
}

LabelSet Poset::maximal() const {
  LabelSet s;
  for (int a = 1; a <= n_; ++a) {
    if (upper_covers(a).empty()) s.insert(a);
  }
  return s;
}

LabelSet Poset::minimal() const {
  LabelSet s;
  for (int a = 1; a <= n_; ++a) {
    if (lower_covers(a).empty()) s.insert(a);
  }
  return s;
}

}  // namespace lext
