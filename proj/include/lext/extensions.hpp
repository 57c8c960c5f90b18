#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lext/poset.hpp"

namespace lext {

/// A permutation of 1..n in one-line notation.
using Word = std::vector<int>;

/// Index-to-index map on an ExtensionIndex; a whole operator as one object.
using Table = std::vector<std::uint32_t>;

/// True iff `word` is a permutation of 1..n placing i before j whenever i ≺ j.
bool is_linear_extension(const Poset& poset, std::span<const int> word);

/// "1 2 4 3", or "1243" when compact and every label is a single digit.
std::string word_to_string(std::span<const int> word, bool compact = false);

/// All linear extensions of a poset in lexicographic order, with reverse lookup.
class ExtensionIndex {
 public:
  ExtensionIndex() = default;
  ExtensionIndex(Poset poset, std::vector<Word> words);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t k) const { return words_[k]; }
  const std::vector<Word>& words() const { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  std::optional<std::size_t> find(std::span<const int> word) const;
  /// Like find, but throws if the word is not a linear extension.
  std::size_t index_of(std::span<const int> word) const;

 private:
  Poset poset_;
  std::vector<Word> words_;
};

/// Calls `visit` once per linear extension, in lexicographic order, without
/// storing them. Depth-first removal of minimal elements, smallest label first.
void for_each_extension(const Poset& poset, const std::function<void(std::span<const int>)>& visit);

/// Requires a naturally labeled poset.
ExtensionIndex enumerate_extensions(const Poset& poset);

std::uint64_t count_extensions(const Poset& poset);

/// π τ_i: swaps positions i, i+1 (1-based) when the letters there are incomparable.
Word tau(const Poset& poset, std::span<const int> word, int i);

/// π ∂_j computed as π τ_j τ_{j+1} ⋯ τ_{n-1}.
Word promotion(const Poset& poset, std::span<const int> word, int j);

/// π ∂_j computed by sliding: the label j is removed, the hole is filled by the
/// smallest label covering it until a local maximum is reached, which takes
/// n+1, and all labels above j drop by one.
Word promotion_by_sliding(const Poset& poset, std::span<const int> word, int j);

/// π ∂̂_i = π ∂_{position of i in π}.
Word promotion_hat(const Poset& poset, std::span<const int> word, int letter);

/// For rooted forests: move `letter` to the end, then put the letters above it
/// back into increasing order on the positions they occupy.
Word promotion_hat_forest(const Poset& poset, std::span<const int> word, int letter);

enum class OperatorKind { Tau, Promotion, PromotionHat };

struct Operator {
  OperatorKind kind;
  int index;  // i of τ_i, j of ∂_j, letter of ∂̂_i

  std::string to_string() const;
};

Word apply(const Poset& poset, std::span<const int> word, Operator op);

/// The operator as a map on extension indices.
Table operator_table(const ExtensionIndex& ext, Operator op);

/// Map `first`, then `second`.
Table then(const Table& first, const Table& second);
Table identity_table(std::size_t size);
bool is_bijection(const Table& table);

/// Least k ≥ 1 with op^k = id on all of L(P); lcm of the cycle lengths.
mpz_class operator_order(const ExtensionIndex& ext, Operator op);
mpz_class permutation_order(const Table& table);

}  // namespace lext
