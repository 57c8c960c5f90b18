#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lext/extensions.hpp"
#include "lext/linform.hpp"

namespace lext {

/// Discrete step of the uniform promotion walk: T(π', π) = Σ_{j : π∂_j = π'} x_j,
/// loops included. Requires x_j > 0 with Σ x_j = 1.
RationalMatrix step_kernel(const ExtensionIndex& ext, const RationalAssignment& x);

bool is_doubly_stochastic(const RationalMatrix& t);

struct DistributionTrace {
  std::vector<std::vector<Rational>> distributions;  // p_0 = δ_start, p_{t+1} = T p_t
  std::vector<Rational> tv;                          // ½ Σ |p_t(π) − 1/N|
};

/// Exact iteration; asserts that every p_t sums to 1 and that the distance to
/// uniform never increases.
DistributionTrace iterate_distribution(const RationalMatrix& t, std::size_t start,
                                       std::size_t steps);

struct WalkConfig {
  RationalAssignment x;
  std::uint64_t steps = 0;  // emitted states
  std::uint64_t burnin = 0;
  std::uint64_t seed = 0;
  std::size_t start = 0;
};

/// Seeded trajectory: each step draws j with probability x_j and applies ∂_j.
/// Calls `emit` with the extension index of every post-burn-in state.
void sample_walk(const ExtensionIndex& ext, const WalkConfig& cfg,
                 const std::function<void(std::size_t)>& emit);

/// Visit counts per extension over a walk.
std::vector<std::uint64_t> sample_counts(const ExtensionIndex& ext, const WalkConfig& cfg);

/// Pearson statistic of counts against the uniform distribution.
double chi_square_uniform(std::span<const std::uint64_t> counts);

struct IrreversibilityWitness {
  std::size_t from;
  std::size_t to;
  Rational forward;   // T(to, from)
  Rational backward;  // T(from, to)
};

/// A pair with T(π', π) ≠ T(π, π'), if any.
std::optional<IrreversibilityWitness> irreversibility_witness(const RationalMatrix& t);

}  // namespace lext
