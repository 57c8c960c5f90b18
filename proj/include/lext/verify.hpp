#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lext/corpus.hpp"
#include "lext/extensions.hpp"
#include "lext/linform.hpp"
#include "lext/monoid.hpp"

namespace lext {

/// Empty on success, otherwise a description of the first counterexample.
using CheckOutcome = std::optional<std::string>;

/// Reproducible assignments with distinct coordinates, seeds seed, seed+1, ...
std::vector<RationalAssignment> test_assignments(int n, int count, std::uint64_t seed);

CheckOutcome check_poset_structure(const Poset& poset);
/// Involutions, far commutation, (τ_i τ_{i+1})^6 = 1, τ_j = ∂_j τ_{n−1}⋯τ_{j+1},
/// braid relations ⟺ union of chains, sliding = τ-product, ∂_j bijective.
CheckOutcome check_operator_identities(const ExtensionIndex& ext);
/// Column sums, uniform row sums and kernels, symmetry, connectivity.
CheckOutcome check_generators(const ExtensionIndex& ext, const std::vector<RationalAssignment>& vs);
CheckOutcome check_stationary(const ExtensionIndex& ext, const std::vector<RationalAssignment>& vs);
CheckOutcome check_partition_function(const ExtensionIndex& ext,
                                      const std::vector<RationalAssignment>& vs);
CheckOutcome check_forest_spectrum(const ExtensionIndex& ext,
                                   const std::vector<RationalAssignment>& vs);
CheckOutcome check_chain_spectrum(const ExtensionIndex& ext,
                                  const std::vector<RationalAssignment>& vs);
/// R-triviality, axioms, chambers and the monoid spectrum, for rooted forests.
CheckOutcome check_forest_monoid(const ExtensionIndex& ext, std::size_t cap,
                                 const std::vector<RationalAssignment>& vs);
/// Doubly stochastic kernel, irreducibility and exact convergence at uniform x.
CheckOutcome check_sampler(const ExtensionIndex& ext, std::size_t steps);

struct CheckResult {
  std::string invariant;
  std::string subject;
  bool ok = true;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t monoid_cap = kDefaultMonoidCap;
  int assignments = 3;
  std::uint64_t seed = 1;
  std::size_t sampler_steps = 200;
  bool include_large = true;
};

/// Runs every applicable check on one corpus entry.
std::vector<CheckResult> verify_entry(const CorpusEntry& entry, const VerifyOptions& opts);

/// Runs the suite over the corpus; stops after the first failure.
std::vector<CheckResult> verify_corpus(const VerifyOptions& opts,
                                       const std::function<void(const CheckResult&)>& progress = {});

}  // namespace lext
