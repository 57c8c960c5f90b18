#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lext/extensions.hpp"
#include "lext/linform.hpp"

namespace lext {

enum class ChainKind { UniformTransposition, Transposition, UniformPromotion, Promotion };

inline constexpr std::array<ChainKind, 4> kAllChainKinds = {
    ChainKind::UniformTransposition, ChainKind::Transposition, ChainKind::UniformPromotion,
    ChainKind::Promotion};

/// "uniform-transposition", "transposition", "uniform-promotion", "promotion".
std::string_view to_string(ChainKind kind);
ChainKind parse_chain_kind(std::string_view name);

bool is_uniform(ChainKind kind);
bool uses_promotion(ChainKind kind);

struct Edge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  int op_index = 0;  // j of τ_j or ∂_j
  LinearForm weight;

  bool is_loop() const { return from == to; }
};

/// One outgoing edge per vertex and operator index, loops included.
struct WeightedDigraph {
  ExtensionIndex ext;
  ChainKind kind = ChainKind::Promotion;
  std::vector<Edge> edges;
};

WeightedDigraph build_graph(const ExtensionIndex& ext, ChainKind kind);
WeightedDigraph build_graph(const Poset& poset, ChainKind kind);

/// Entry (π', π) sums the weights of non-loop edges π → π'; the diagonal is
/// minus the non-loop outgoing weight, so every column sums to zero.
FormMatrix generator_matrix(const WeightedDigraph& graph);

/// Loops are ignored.
bool is_strongly_connected(const WeightedDigraph& graph);
bool is_strongly_connected(std::size_t vertices,
                           std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);

/// ∏ numerator / ∏ denominator of linear forms; identical factors cancelled.
struct RationalFunction {
  std::vector<LinearForm> numerator;
  std::vector<LinearForm> denominator;

  static RationalFunction one() { return {}; }
  /// Sorts both factor lists and removes common factors.
  RationalFunction reduced() const;
  Rational evaluate(const RationalAssignment& v) const;
  /// "(x1+x2)(x1+x2+x3)/((x1+x4)(x1+x2+x4))", "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Closed-form stationary weights with w(identity) = 1, one per extension.
///   Promotion:      ∏_i (x_1+⋯+x_i) / (x_{π_1}+⋯+x_{π_i})
///   Transposition:  ∏_i x_{π_i}^{i−π_i}  (negative exponents go to the denominator)
///   uniform kinds:  1
std::vector<RationalFunction> stationary_closed_form(const ExtensionIndex& ext, ChainKind kind);

std::vector<Rational> evaluate(std::span<const RationalFunction> w, const RationalAssignment& v);

/// M w = 0 exactly.
bool is_stationary_vector(const RationalMatrix& m, std::span<const Rational> w);

/// Evaluates generator and closed form at v: M w = 0 and w ∝ kernel_vector(M).
bool verify_stationary(const ExtensionIndex& ext, ChainKind kind, const RationalAssignment& v);

/// Z_P = ∏_i x_{⪯i} / (x_1+⋯+x_i). Rooted forests only.
Rational partition_function(const Poset& poset, const RationalAssignment& v);

/// Stationary probabilities summing to 1. Uses Z_P for the promotion chain on
/// a rooted forest, plain normalization otherwise.
std::vector<Rational> stationary_distribution(const ExtensionIndex& ext, ChainKind kind,
                                              const RationalAssignment& v);

}  // namespace lext
