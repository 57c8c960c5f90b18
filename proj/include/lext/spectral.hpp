#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "lext/extensions.hpp"
#include "lext/linform.hpp"

namespace lext {

/// μ(X, Y) for a family of sets ordered by inclusion, row-major N×N, 0 when
/// X ⊄ Y. `sets` must list subsets before their supersets (canonical order does).
std::vector<std::int64_t> mobius_by_inclusion(std::span<const LabelSet> sets);

/// Upper sets of P ordered by inclusion.
class UpperSetLattice {
 public:
  static UpperSetLattice build(const Poset& poset);

  const Poset& poset() const { return poset_; }
  /// Canonical order; index 0 is ∅, the last index is the full set.
  const std::vector<LabelSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  std::size_t index_of(LabelSet s) const;

  std::int64_t mobius(std::size_t x, std::size_t y) const { return mobius_[x * size() + y]; }
  /// f([Y, 1̂]), the number of maximal chains from Y up to the full set.
  const mpz_class& chain_count(std::size_t y) const { return f_[y]; }
  /// Indices of the upper sets covering x (one more element).
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return covers_[x]; }

 private:
  Poset poset_;
  std::vector<LabelSet> elements_;
  std::vector<std::int64_t> mobius_;
  std::vector<mpz_class> f_;
  std::vector<std::vector<std::size_t>> covers_;
};

/// d_X = Σ_{Y ⊇ X} μ(X, Y) f([Y, 1̂]) on the upper-set lattice, and the
/// poset-derangement counts of lower sets when P is a union of chains.
struct DerangementTable {
  std::vector<LabelSet> upper;
  std::vector<mpz_class> d;
  std::vector<LabelSet> lower;
  std::vector<std::uint64_t> dfrak;  // empty unless P is a union of chains
};

DerangementTable derangement_numbers(const UpperSetLattice& lattice);

/// Linear extensions with π_i ≠ i for all i.
std::vector<Word> poset_derangements(const Poset& poset);

/// Chains of a union of chains, bottom to top, ordered by smallest label.
std::vector<std::vector<int>> chains_of(const Poset& poset);

/// Relabels a union of chains so each chain carries consecutive labels,
/// chains taken in order of their smallest label.
Poset relabel_consecutively(const Poset& poset);

/// Spectrum of M̄ = M + (x_1+⋯+x_n)·Id for the promotion chain of a rooted
/// forest: x_S with multiplicity d_S for every upper set S (zeros kept).
Spectrum predict_spectrum_forest(const Poset& poset);

/// Spectrum of M for the promotion chain of a union of chains: 0 once, and
/// −x_S for every nonempty lower set S with multiplicity the number of poset
/// derangements of S relabeled consecutively within chains.
Spectrum predict_spectrum_chains(const Poset& poset);

/// Multiplicities of predict_spectrum_chains keyed by lower set (canonical order).
std::vector<std::pair<LabelSet, std::uint64_t>> chain_derangement_counts(const Poset& poset);

struct ChainWordCounts {
  mpz_class lattice;     // f([S, 1̂]) with S the tops of the chosen chains
  std::uint64_t direct;  // extensions fixing some element of every chosen chain
};

/// `chain_indices` are 1-based positions in chains_of(P).
ChainWordCounts chain_word_identity(const Poset& poset, std::span<const int> chain_indices);

}  // namespace lext
