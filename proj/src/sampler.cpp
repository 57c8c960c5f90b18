#include "lext/sampler.hpp"

#include <random>

#include "lext/error.hpp"

namespace lext {

namespace {

void check_probabilities(const ExtensionIndex& ext, const RationalAssignment& x) {
  if (x.size() != ext.poset().size()) {
    throw Error("sampler.probabilities", "expected " + std::to_string(ext.poset().size()) +
                                             " probabilities, got " + std::to_string(x.size()));
  }
  if (x.sum() != 1) {
    throw Error("sampler.probabilities", "probabilities sum to " + to_string(x.sum()) + ", not 1");
  }
}

// Uniform draw in [0, bound) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

RationalMatrix step_kernel(const ExtensionIndex& ext, const RationalAssignment& x) {
  check_probabilities(ext, x);
  const int n = ext.poset().size();
  RationalMatrix t(ext.size(), ext.size());
  for (int j = 1; j <= n; ++j) {
    Table tab = operator_table(ext, {OperatorKind::Promotion, j});
    for (std::size_t k = 0; k < ext.size(); ++k) t(tab[k], k) += x[j];
  }
  return t;
}

bool is_doubly_stochastic(const RationalMatrix& t) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Rational row = 0, col = 0;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (sgn(t(r, c)) < 0 || sgn(t(c, r)) < 0) return false;
      row += t(r, c);
      col += t(c, r);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

DistributionTrace iterate_distribution(const RationalMatrix& t, std::size_t start,
                                       std::size_t steps) {
  const std::size_t n = t.rows();
  if (start >= n) throw Error("sampler.start", "start index out of range");
  // Work with the integer kernel A = D·T and q_t = D^t p_t.
  mpz_class den = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t(r, c).get_den_mpz_t());
  }
  std::vector<std::pair<std::size_t, mpz_class>> entries;  // column-major nonzeros of A
  std::vector<std::size_t> col_start{0};
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (sgn(t(r, c)) != 0) entries.emplace_back(r, t(r, c).get_num() * (den / t(r, c).get_den()));
    }
    col_start.push_back(entries.size());
  }
  const mpz_class size(static_cast<unsigned long>(n));
  DistributionTrace trace;
  std::vector<mpz_class> q(n, 0), next(n);
  q[start] = 1;
  mpz_class scale = 1;  // D^t
  for (std::size_t s = 0; s <= steps; ++s) {
    mpz_class total = 0, dist = 0;
    std::vector<Rational> p(n);
    for (std::size_t k = 0; k < n; ++k) {
      total += q[k];
      dist += abs(q[k] * size - scale);
      p[k] = Rational(q[k], scale);
      p[k].canonicalize();
    }
    if (total != scale) throw std::logic_error("distribution lost mass");
    Rational tv(dist, 2 * size * scale);
    tv.canonicalize();
    if (!trace.tv.empty() && tv > trace.tv.back()) {
      throw Error("sampler.tv_monotone", "distance to uniform increased at step " + std::to_string(s));
    }
    trace.tv.push_back(tv);
    trace.distributions.push_back(std::move(p));
    if (s == steps) break;
    for (auto& x : next) x = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(q[c]) == 0) continue;
      for (std::size_t e = col_start[c]; e < col_start[c + 1]; ++e) next[entries[e].first] += entries[e].second * q[c];
    }
    std::swap(q, next);
    scale *= den;
  }
  return trace;
}

void sample_walk(const ExtensionIndex& ext, const WalkConfig& cfg,
                 const std::function<void(std::size_t)>& emit) {
  check_probabilities(ext, cfg.x);
  const int n = ext.poset().size();
  if (cfg.start >= ext.size()) throw Error("sampler.start", "start index out of range");
  // x_j = a_j / D with a common denominator D; draw r in [0, D) and pick j by cumulative a_j.
  mpz_class den = 1;
  for (const auto& q : cfg.x.values()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!den.fits_ulong_p()) throw Error("sampler.probabilities", "denominator too large");
  std::vector<std::uint64_t> cumulative;
  std::uint64_t acc = 0;
  for (const auto& q : cfg.x.values()) {
    acc += mpz_class(q.get_num() * (den / q.get_den())).get_ui();
    cumulative.push_back(acc);
  }
  std::vector<Table> tables;
  for (int j = 1; j <= n; ++j) tables.push_back(operator_table(ext, {OperatorKind::Promotion, j}));

  std::mt19937_64 rng(cfg.seed);
  std::size_t state = cfg.start;
  for (std::uint64_t s = 0; s < cfg.burnin + cfg.steps; ++s) {
    std::uint64_t r = bounded(rng, den.get_ui());
    std::size_t j = 0;
    while (cumulative[j] <= r) ++j;
    state = tables[j][state];
    if (s >= cfg.burnin) emit(state);
  }
}

std::vector<std::uint64_t> sample_counts(const ExtensionIndex& ext, const WalkConfig& cfg) {
  std::vector<std::uint64_t> counts(ext.size(), 0);
  sample_walk(ext, cfg, [&](std::size_t k) { ++counts[k]; });
  return counts;
}

double chi_square_uniform(std::span<const std::uint64_t> counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double chi = 0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

std::optional<IrreversibilityWitness> irreversibility_witness(const RationalMatrix& t) {
  for (std::size_t a = 0; a < t.rows(); ++a) {
    for (std::size_t b = a + 1; b < t.cols(); ++b) {
      if (t(b, a) != t(a, b)) return IrreversibilityWitness{a, b, t(b, a), t(a, b)};
    }
  }
  return std::nullopt;
}

}  // namespace lext
