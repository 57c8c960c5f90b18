#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lext/error.hpp"

namespace lext {

inline constexpr int kMaxLabels = 63;

/// A subset of the labels {1..n}, stored as a bitmask (bit k-1 for label k).
class LabelSet {
 public:
  constexpr LabelSet() = default;
  static constexpr LabelSet from_mask(std::uint64_t mask) {
    LabelSet s;
    s.mask_ = mask;
    return s;
  }
  static LabelSet full(int n);
  static LabelSet of(std::initializer_list<int> labels);
  static LabelSet of(std::span<const int> labels);

  constexpr std::uint64_t mask() const { return mask_; }
  bool contains(int label) const { return (mask_ >> (label - 1)) & 1u; }
  void insert(int label) { mask_ |= std::uint64_t{1} << (label - 1); }
  void erase(int label) { mask_ &= ~(std::uint64_t{1} << (label - 1)); }
  int size() const { return __builtin_popcountll(mask_); }
  bool empty() const { return mask_ == 0; }
  bool is_subset_of(LabelSet other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<int> members() const;
  LabelSet complement(int n) const { return from_mask(full(n).mask_ & ~mask_); }

  friend LabelSet operator|(LabelSet a, LabelSet b) { return from_mask(a.mask_ | b.mask_); }
  friend LabelSet operator&(LabelSet a, LabelSet b) { return from_mask(a.mask_ & b.mask_); }
  friend LabelSet operator-(LabelSet a, LabelSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(LabelSet a, LabelSet b) = default;

  /// "{1,3,4}", "{}" for the empty set.
  std::string to_string() const;

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical order on label sets: by size, then lexicographically by sorted members.
bool canonical_less(LabelSet a, LabelSet b);
void sort_canonical(std::vector<LabelSet>& sets);

/// A finite poset on the labels 1..n. Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Validates the relations, computes the reflexive-transitive closure and
  /// keeps only the cover relations. Throws lext::Error on cycles, labels out
  /// of range and duplicate pairs.
  static Poset build(int n, std::span<const std::pair<int, int>> relations);
  static Poset build(int n, std::initializer_list<std::pair<int, int>> relations) {
    return build(n, std::span<const std::pair<int, int>>(relations.begin(), relations.size()));
  }
  static Poset antichain(int n);
  static Poset chain(int n);
  /// Disjoint union of chains labeled consecutively: [n1] + [n2] + ...
  static Poset chain_union(std::span<const int> lengths);
  static Poset chain_union(std::initializer_list<int> lengths) {
    return chain_union(std::span<const int>(lengths.begin(), lengths.size()));
  }

  int size() const { return n_; }
  /// Cover pairs (a, b), a covered by b, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int a, int b) const { return (up_[a - 1] >> (b - 1)) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// {b : a ⪯ b}, including a.
  LabelSet up_set(int a) const { return LabelSet::from_mask(up_[a - 1]); }
  /// {b : b ⪯ a}, including a.
  LabelSet down_set(int a) const { return LabelSet::from_mask(down_[a - 1]); }
  LabelSet upper_covers(int a) const { return LabelSet::from_mask(ucov_[a - 1]); }
  LabelSet lower_covers(int a) const { return LabelSet::from_mask(lcov_[a - 1]); }
  LabelSet labels() const { return LabelSet::full(n_); }

  bool is_naturally_labeled() const;
  bool is_rooted_forest() const;
  bool is_union_of_chains() const;

  bool is_upper_set(LabelSet s) const;
  bool is_lower_set(LabelSet s) const;
  /// All upper (lower) sets, each once, in canonical order.
  std::vector<LabelSet> upper_sets() const;
  std::vector<LabelSet> lower_sets() const;

  /// Induced subposet on s, labels compressed order-isomorphically to 1..|s|.
  Poset restrict(LabelSet s) const;

  /// Labels of maximal elements / minimal elements.
  LabelSet maximal() const;
  LabelSet minimal() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> up_, down_, ucov_, lcov_;
};

}  // namespace lext
