#include <doctest.h>

#include <cmath>

#include "lext/chains.hpp"
#include "lext/corpus.hpp"
#include "lext/error.hpp"
#include "lext/sampler.hpp"

using namespace lext;

TEST_CASE("step kernels") {
  RationalMatrix c = step_kernel(enumerate_extensions(Poset::chain(3)), RationalAssignment::uniform(3));
  REQUIRE(c.rows() == 1);
  CHECK(c(0, 0) == 1);

  ExtensionIndex p0 = enumerate_extensions(examples::p0());
  RationalMatrix t = step_kernel(p0, RationalAssignment::uniform(4));
  CHECK(is_doubly_stochastic(t));
  std::vector<Rational> u(5, Rational(1, 5));
  CHECK((t * u) == u);

  Rational p(2, 7);
  RationalMatrix two = step_kernel(enumerate_extensions(Poset::antichain(2)),
                                   RationalAssignment(std::vector<Rational>{p, 1 - p}));
  // ∂₁ swaps the two extensions, ∂₂ fixes them.
  CHECK(two(0, 0) == 1 - p);
  CHECK(two(1, 0) == p);
  CHECK(two(0, 1) == p);
  CHECK(two(1, 1) == 1 - p);

  CHECK_THROWS_AS(step_kernel(p0, RationalAssignment::parse("1/4,1/4,1/4")), Error);
  CHECK_THROWS_AS(step_kernel(p0, RationalAssignment::parse("1/4,1/4,1/4,1/3")), Error);
}

TEST_CASE("exact distance to uniform") {
  ExtensionIndex p0 = enumerate_extensions(examples::p0());
  RationalMatrix t = step_kernel(p0, RationalAssignment::uniform(4));
  DistributionTrace trace = iterate_distribution(t, 0, 50);
  CHECK(trace.tv[0] == Rational(4, 5));
  for (std::size_t s = 1; s < trace.tv.size(); ++s) CHECK(trace.tv[s] <= trace.tv[s - 1]);
  CHECK(trace.tv.back() < Rational(1, 1000000));
  for (const auto& d : trace.distributions) {
    Rational total = 0;
    for (const auto& x : d) total += x;
    CHECK(total == 1);
  }
  RationalMatrix one = step_kernel(enumerate_extensions(Poset::chain(4)), RationalAssignment::uniform(4));
  for (const auto& tv : iterate_distribution(one, 0, 5).tv) CHECK(tv == 0);
}

TEST_CASE("seeded walks are reproducible") {
  ExtensionIndex p0 = enumerate_extensions(examples::p0());
  WalkConfig cfg{RationalAssignment::uniform(4), 500, 10, 99, 0};
  std::vector<std::size_t> a, b;
  sample_walk(p0, cfg, [&](std::size_t k) { a.push_back(k); });
  sample_walk(p0, cfg, [&](std::size_t k) { b.push_back(k); });
  CHECK(a.size() == 500);
  CHECK(a == b);
  cfg.seed = 100;
  std::vector<std::size_t> c;
  sample_walk(p0, cfg, [&](std::size_t k) { c.push_back(k); });
  CHECK(a != c);
}

TEST_CASE("3-antichain frequencies stay within three sigma") {
  ExtensionIndex ext = enumerate_extensions(Poset::antichain(3));
  WalkConfig cfg{RationalAssignment::uniform(3), 100000, 100, 2024, 0};
  auto counts = sample_counts(ext, cfg);
  const double n = 100000, p = 1.0 / 6;
  const double sigma = std::sqrt(n * p * (1 - p));
  for (auto k : counts) CHECK(std::abs(static_cast<double>(k) - n * p) < 3 * sigma);
}

TEST_CASE("irreversibility") {
  ExtensionIndex p0 = enumerate_extensions(examples::p0());
  RationalMatrix t = step_kernel(p0, RationalAssignment::parse("1/10,2/10,3/10,4/10"));
  auto w = irreversibility_witness(t);
  REQUIRE(w);
  CHECK(w->forward != w->backward);
  RationalMatrix sym = step_kernel(enumerate_extensions(Poset::antichain(2)), RationalAssignment::parse("1/3,2/3"));
  CHECK_FALSE(irreversibility_witness(sym));
}

TEST_CASE("chi-square statistic") {
  std::vector<std::uint64_t> flat = {10, 10, 10};
  CHECK(chi_square_uniform(flat) == doctest::Approx(0));
  std::vector<std::uint64_t> skew = {20, 10, 0};
  CHECK(chi_square_uniform(skew) == doctest::Approx(20));
}
