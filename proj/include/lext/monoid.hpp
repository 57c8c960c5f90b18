#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lext/extensions.hpp"
#include "lext/linform.hpp"

namespace lext {

// Conventions. Elements are maps on extension indices. The product x·y applies
// y first and then x, so (x·y)[π] = x[y[π]]: this is composition of the
// matrices acting on column vectors. G_i is the map π ↦ π∂̂_i. Right
// multiplication x ↦ x·G_i generates the monoid from the identity, and the
// right ideal x·M decides the R-order. With this convention the monoid of a
// rooted forest is R-trivial.

struct MonoidElement {
  Table table;
  std::vector<int> word;  // generator letters; the element is G_{w1}·G_{w2}⋯

  std::string word_string() const;  // "G1G2", "1" for the identity
};

/// (x·y)[π] = x[y[π]].
Table compose(const Table& x, const Table& y);

class PromotionMonoid {
 public:
  const ExtensionIndex& extensions() const { return ext_; }
  std::size_t size() const { return elements_.size(); }
  const MonoidElement& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<MonoidElement>& elements() const { return elements_; }
  /// Element index of G_i, i = 1..n.
  std::size_t generator(int i) const { return generators_[i - 1]; }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  std::size_t identity() const { return 0; }

  /// Index of x·G_i and G_i·x.
  std::size_t right(std::size_t x, int i) const { return right_[x][i - 1]; }
  std::size_t left(std::size_t x, int i) const { return left_[x][i - 1]; }

  std::optional<std::size_t> find(const Table& t) const;
  /// Index of x·y; the product must lie in the monoid.
  std::size_t multiply(std::size_t x, std::size_t y) const;

  friend PromotionMonoid generate_monoid(const Poset& poset, std::size_t cap);

 private:
  ExtensionIndex ext_;
  std::vector<MonoidElement> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> right_, left_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

inline constexpr std::size_t kDefaultMonoidCap = 50'000;

/// Breadth-first closure of {G_1..G_n} from the identity. Throws
/// BudgetExceeded when more than `cap` elements appear.
PromotionMonoid generate_monoid(const Poset& poset, std::size_t cap = kDefaultMonoidCap);

struct RTrivialReport {
  bool r_trivial = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // x ≠ y with x·M = y·M
  std::size_t r_classes = 0;
};

/// R-classes are the strongly connected components of the right Cayley graph.
RTrivialReport is_r_trivial(const PromotionMonoid& m);

struct OmegaPower {
  std::size_t idempotent;  // x^ω
  std::size_t index;       // least k with x^k = x^{k+p}
  std::size_t period;      // p
  bool aperiodic() const { return period == 1; }
};

OmegaPower omega(const PromotionMonoid& m, std::size_t x);

/// First non-aperiodic element, if any.
std::optional<std::pair<std::size_t, OmegaPower>> non_aperiodic_witness(const PromotionMonoid& m);

struct RightFactor {
  Word suffix;     // longest common suffix of the image
  LabelSet letters;
};

RightFactor rfactor(const PromotionMonoid& m, std::size_t x);

/// Extension indices in the image of x, ascending.
std::vector<std::uint32_t> image(const Table& x);

struct SuppDes {
  std::vector<LabelSet> lattice;  // L^M, canonical order
  std::vector<LabelSet> supp;     // per element: Rfactor(x^ω)
  std::vector<LabelSet> des;      // per element: {i : x·G_i = x}
  std::vector<bool> idempotent;

  /// Least member of L^M containing a ∪ b.
  LabelSet join(LabelSet a, LabelSet b) const;
  bool contains(LabelSet s) const;
};

/// Requires an R-trivial monoid.
SuppDes supp_des(const PromotionMonoid& m);

struct AxiomReport {
  bool supp_surjective = true;
  bool supp_join_morphism = true;  // supp(xy) = supp(x) ∨ supp(y)
  bool r_order = true;             // xy R x ⇒ supp(y) ⊆ des(x)
  bool stabilizer = true;          // supp(y) ⊆ des(x) ⇒ xy = x
  bool idempotents = true;         // supp(e) = des(e) = Rfactor(e)
  std::string first_failure;

  bool ok() const {
    return supp_surjective && supp_join_morphism && r_order && stabilizer && idempotents;
  }
};

AxiomReport check_axioms(const PromotionMonoid& m, const SuppDes& s);

/// Elements with a single-point image, indexed by the extension they hit.
std::vector<std::size_t> chambers(const PromotionMonoid& m);

/// T(d, c) = Σ_{i : G_i·c = d} x_i over chambers, ordered by extension index.
FormMatrix chamber_matrix(const PromotionMonoid& m);

struct RTrivialSpectrumEntry {
  LabelSet x;
  LinearForm eigenvalue;    // Σ x_i over generators with supp(G_i) ⊆ X
  std::uint64_t chambers;   // c_X
  std::int64_t multiplicity;
};

std::vector<RTrivialSpectrumEntry> rtrivial_spectrum_table(const PromotionMonoid& m,
                                                           const SuppDes& s);
/// The eigenvalues of chamber_matrix with their multiplicities.
Spectrum rtrivial_spectrum(const PromotionMonoid& m, const SuppDes& s);

}  // namespace lext
