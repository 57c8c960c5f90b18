#include "lext/verify.hpp"

#include <algorithm>
#include <chrono>

#include "lext/chains.hpp"
#include "lext/error.hpp"
#include "lext/sampler.hpp"
#include "lext/spectral.hpp"

namespace lext {

namespace {

std::string at(const RationalAssignment& v) { return " at x = (" + v.to_string() + ")"; }

Table repeat(const Table& t, int times) {
  Table out = identity_table(t.size());
  for (int k = 0; k < times; ++k) out = then(out, t);
  return out;
}

std::vector<Table> tau_tables(const ExtensionIndex& ext) {
  std::vector<Table> t;
  for (int i = 1; i < ext.poset().size(); ++i) t.push_back(operator_table(ext, {OperatorKind::Tau, i}));
  return t;
}

LinearForm all_variables(int n) { return LinearForm::sum_of(n, LabelSet::full(n)); }

}  // namespace

std::vector<RationalAssignment> test_assignments(int n, int count, std::uint64_t seed) {
  std::vector<RationalAssignment> out;
  for (int k = 0; k < count; ++k) out.push_back(RationalAssignment::random(n, seed + k));
  return out;
}

CheckOutcome check_poset_structure(const Poset& poset) {
  const int n = poset.size();
  auto ups = poset.upper_sets();
  auto lows = poset.lower_sets();
  if (ups.size() != lows.size()) return "different numbers of upper and lower sets";
  std::vector<LabelSet> complements;
  for (LabelSet s : ups) complements.push_back(s.complement(n));
  sort_canonical(complements);
  if (complements != lows) return "complementation is not a bijection from upper to lower sets";
  if (ups.size() <= 400) {
    for (LabelSet a : ups) {
      for (LabelSet b : ups) {
        if (!poset.is_upper_set(a | b) || !poset.is_upper_set(a & b)) {
          return "upper sets not closed under union and intersection: " + a.to_string() + ", " +
                 b.to_string();
        }
      }
    }
  }
  if (Poset::build(n, poset.covers()) != poset) return "transitive reduction is not idempotent";
  if (poset.is_union_of_chains() && !poset.is_rooted_forest()) {
    return "union of chains that is not a rooted forest";
  }
  return std::nullopt;
}

CheckOutcome check_operator_identities(const ExtensionIndex& ext) {
  const Poset& poset = ext.poset();
  const int n = poset.size();
  const Table id = identity_table(ext.size());
  auto tau = tau_tables(ext);
  for (int i = 1; i < n; ++i) {
    if (then(tau[i - 1], tau[i - 1]) != id) return "tau" + std::to_string(i) + " is not an involution";
    for (int j = i + 2; j < n; ++j) {
      if (then(tau[i - 1], tau[j - 1]) != then(tau[j - 1], tau[i - 1])) {
        return "tau" + std::to_string(i) + " and tau" + std::to_string(j) + " do not commute";
      }
    }
    if (i + 1 < n && repeat(then(tau[i - 1], tau[i]), 6) != id) {
      return "(tau" + std::to_string(i) + " tau" + std::to_string(i + 1) + ")^6 is not the identity";
    }
  }
  bool braid = true;
  for (int j = 1; j + 1 < n; ++j) {
    Table a = then(then(tau[j - 1], tau[j]), tau[j - 1]);
    Table b = then(then(tau[j], tau[j - 1]), tau[j]);
    braid = braid && a == b;
  }
  if (braid != poset.is_union_of_chains()) {
    return std::string("braid relations ") + (braid ? "hold" : "fail") + " but the poset " +
           (poset.is_union_of_chains() ? "is" : "is not") + " a union of chains";
  }
  for (int j = 1; j <= n; ++j) {
    Table d = operator_table(ext, {OperatorKind::Promotion, j});
    if (!is_bijection(d)) return "promotion d" + std::to_string(j) + " is not a bijection";
    if (j < n) {
      Table f = d;
      for (int k = n - 1; k > j; --k) f = then(f, tau[k - 1]);
      if (f != tau[j - 1]) return "tau" + std::to_string(j) + " != d" + std::to_string(j) + " tau(n-1)...tau(j+1)";
    }
    for (const Word& w : ext) {
      if (promotion_by_sliding(poset, w, j) != promotion(poset, w, j)) {
        return "sliding and tau-product promotion differ on " + word_to_string(w) + " with seed " +
               std::to_string(j);
      }
    }
  }
  if (n > 0 && operator_order(ext, {OperatorKind::Promotion, n}) != 1) return "d_n is not the identity";
  if (poset.is_rooted_forest()) {
    for (int i = 1; i <= n; ++i) {
      for (const Word& w : ext) {
        if (promotion_hat(poset, w, i) != promotion_hat_forest(poset, w, i)) {
          return "hat-promotion on " + word_to_string(w) + " by letter " + std::to_string(i) +
                 " is not move-to-end-and-reorder";
        }
      }
    }
  }
  return std::nullopt;
}

CheckOutcome check_generators(const ExtensionIndex& ext, const std::vector<RationalAssignment>& vs) {
  const int n = ext.poset().size();
  const LinearForm zero(n);
  for (ChainKind kind : kAllChainKinds) {
    const std::string name(to_string(kind));
    WeightedDigraph g = build_graph(ext, kind);
    const std::size_t ops = static_cast<std::size_t>(uses_promotion(kind) ? n : std::max(n - 1, 0));
    if (g.edges.size() != ext.size() * ops) return name + ": wrong number of edges";
    FormMatrix m = generator_matrix(g);
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (m.column_sum(c) != zero) return name + ": column " + std::to_string(c) + " does not sum to 0";
      if (is_uniform(kind) && m.row_sum(c) != zero) {
        return name + ": row " + std::to_string(c) + " does not sum to 0";
      }
    }
    if (kind == ChainKind::UniformTransposition && !m.is_symmetric()) return name + ": not symmetric";
    if (kind == ChainKind::UniformPromotion && n > 0) {
      for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
          if (m(r, c).coeff(n) != 0) return name + ": x" + std::to_string(n) + " occurs";
        }
      }
    }
    if (!is_strongly_connected(g)) return name + ": graph is not strongly connected";
    if (is_uniform(kind)) {
      for (const auto& v : vs) {
        auto k = kernel_vector(m.evaluate(v));
        if (std::any_of(k.begin(), k.end(), [](const Rational& q) { return q != 1; })) {
          return name + ": kernel is not the all-ones vector" + at(v);
        }
      }
    }
  }
  return std::nullopt;
}

CheckOutcome check_stationary(const ExtensionIndex& ext, const std::vector<RationalAssignment>& vs) {
  for (ChainKind kind : kAllChainKinds) {
    for (const auto& v : vs) {
      if (!verify_stationary(ext, kind, v)) {
        return std::string(to_string(kind)) + ": closed form is not the stationary vector" + at(v);
      }
    }
  }
  return std::nullopt;
}

CheckOutcome check_partition_function(const ExtensionIndex& ext,
                                      const std::vector<RationalAssignment>& vs) {
  auto w = stationary_closed_form(ext, ChainKind::Promotion);
  for (const auto& v : vs) {
    Rational z = partition_function(ext.poset(), v), total = 0;
    for (const auto& f : w) total += z * f.evaluate(v);
    if (total != 1) return "sum of Z w(pi) is " + to_string(total) + at(v);
  }
  return std::nullopt;
}

CheckOutcome check_forest_spectrum(const ExtensionIndex& ext,
                                   const std::vector<RationalAssignment>& vs) {
  const Poset& poset = ext.poset();
  const int n = poset.size();
  UpperSetLattice lattice = UpperSetLattice::build(poset);
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    LabelSet rest = lattice.elements()[k].complement(n);
    if (lattice.chain_count(k) != count_extensions(poset.restrict(rest))) {
      return "maximal chain count above " + lattice.elements()[k].to_string() +
             " differs from the extension count of its complement";
    }
  }
  DerangementTable t = derangement_numbers(lattice);
  mpz_class total = 0;
  for (std::size_t k = 0; k < t.d.size(); ++k) {
    if (t.d[k] < 0) return "negative derangement number at " + t.upper[k].to_string();
    if (lattice.upper_covers(k).size() == 1 && t.d[k] != 0) {
      return "d is nonzero at " + t.upper[k].to_string() + ", which has a single cover";
    }
    total += t.d[k];
  }
  if (total != ext.size()) return "derangement numbers sum to " + total.get_str();
  Spectrum predicted = predict_spectrum_forest(poset);
  if (total_multiplicity(predicted) != ext.size()) return "predicted multiplicities do not sum to |L|";
  FormMatrix shifted = generator_matrix(build_graph(ext, ChainKind::Promotion)).shifted(all_variables(n));
  for (const auto& v : vs) {
    if (!spectrum_matches(shifted.evaluate(v), predicted, v)) {
      return "characteristic polynomial of the shifted promotion generator differs from the prediction" + at(v);
    }
  }
  return std::nullopt;
}

CheckOutcome check_chain_spectrum(const ExtensionIndex& ext,
                                  const std::vector<RationalAssignment>& vs) {
  const Poset& poset = ext.poset();
  const int n = poset.size();
  Spectrum chains = predict_spectrum_chains(poset);
  if (total_multiplicity(chains) != ext.size()) {
    return "1 + sum of poset derangement counts is " + std::to_string(total_multiplicity(chains));
  }
  // Shifting the forest prediction must give the same multiset.
  Spectrum shifted;
  for (const auto& e : predict_spectrum_forest(poset)) {
    shifted.push_back({e.eigenvalue - all_variables(n), e.multiplicity});
  }
  if (normalized(shifted) != normalized(chains)) {
    return "lattice and poset-derangement multiplicities disagree";
  }
  FormMatrix m = generator_matrix(build_graph(ext, ChainKind::Promotion));
  for (const auto& v : vs) {
    if (!spectrum_matches(m.evaluate(v), chains, v)) {
      return "characteristic polynomial of the promotion generator differs from the chain prediction" + at(v);
    }
  }
  return std::nullopt;
}

CheckOutcome check_forest_monoid(const ExtensionIndex& ext, std::size_t cap,
                                 const std::vector<RationalAssignment>& vs) {
  const Poset& poset = ext.poset();
  const int n = poset.size();
  PromotionMonoid m = generate_monoid(poset, cap);
  RTrivialReport r = is_r_trivial(m);
  if (!r.r_trivial) {
    return "monoid is not R-trivial: " + m[r.witness->first].word_string() + " and " +
           m[r.witness->second].word_string() + " generate the same right ideal";
  }
  SuppDes s = supp_des(m);
  AxiomReport axioms = check_axioms(m, s);
  if (!axioms.ok()) return "weakly ordered axioms fail: " + axioms.first_failure;
  for (LabelSet l : s.lattice) {
    if (!poset.is_upper_set(l)) return "L^M member " + l.to_string() + " is not an upper set";
  }
  for (int i = 1; i <= n; ++i) {
    int top = i;
    while (!poset.upper_covers(top).empty()) top = poset.upper_covers(top).members()[0];
    for (auto k : image(m[m.generator(i)].table)) {
      if (ext[k].back() != top) return "image of G" + std::to_string(i) + " does not end in " + std::to_string(top);
    }
  }
  std::size_t constant = 0;
  for (const auto& e : m.elements()) constant += image(e.table).size() == 1;
  if (constant != ext.size()) return "number of chambers differs from |L|";

  auto table = rtrivial_spectrum_table(m, s);
  UpperSetLattice lattice = UpperSetLattice::build(poset);
  DerangementTable d = derangement_numbers(lattice);
  std::int64_t total = 0;
  for (const auto& e : table) {
    total += e.multiplicity;
    if (e.eigenvalue != LinearForm::sum_of(n, e.x)) return "eigenvalue for " + e.x.to_string() + " is not x_S";
  }
  if (total != static_cast<std::int64_t>(ext.size())) return "monoid multiplicities do not sum to |L|";
  for (std::size_t k = 0; k < d.upper.size(); ++k) {
    std::int64_t mult = 0;
    for (const auto& e : table) {
      if (e.x == d.upper[k]) mult = e.multiplicity;
    }
    if (d.d[k] != mult) {
      return "monoid multiplicity " + std::to_string(mult) + " differs from d = " + d.d[k].get_str() +
             " at " + d.upper[k].to_string();
    }
  }
  FormMatrix shifted = generator_matrix(build_graph(ext, ChainKind::Promotion)).shifted(all_variables(n));
  FormMatrix cm = chamber_matrix(m);
  if (cm != shifted) return "chamber matrix differs from the shifted promotion generator";
  Spectrum spec = rtrivial_spectrum(m, s);
  for (const auto& v : vs) {
    if (!spectrum_matches(cm.evaluate(v), spec, v)) return "chamber matrix spectrum differs" + at(v);
  }
  return std::nullopt;
}

CheckOutcome check_sampler(const ExtensionIndex& ext, std::size_t steps) {
  const int n = ext.poset().size();
  RationalMatrix t = step_kernel(ext, RationalAssignment::uniform(n));
  if (!is_doubly_stochastic(t)) return "step kernel is not doubly stochastic";
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::uint32_t a = 0; a < t.cols(); ++a) {
    for (std::uint32_t b = 0; b < t.rows(); ++b) {
      if (sgn(t(b, a)) != 0) arcs.emplace_back(a, b);
    }
  }
  if (!is_strongly_connected(t.rows(), arcs)) return "step kernel is not irreducible";
  DistributionTrace trace = iterate_distribution(t, 0, steps);
  if (trace.tv.back() >= Rational(1, 1000000)) {
    return "distance to uniform after " + std::to_string(steps) + " steps is " + trace.tv.back().get_str();
  }
  return std::nullopt;
}

std::vector<CheckResult> verify_entry(const CorpusEntry& entry, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const Poset& poset = entry.poset;
  auto run = [&](const std::string& invariant, const std::function<CheckOutcome()>& check) {
    CheckResult r{invariant, entry.name, true, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      if (auto failure = check()) {
        r.ok = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
    return r.ok;
  };
  if (!run("poset.structure", [&] { return check_poset_structure(poset); })) return out;
  if (entry.large) {
    if (poset.is_union_of_chains()) {
      const int k = static_cast<int>(chains_of(poset).size());
      std::vector<int> even;
      for (int i = 2; i <= k; i += 2) even.push_back(i);
      run("spectral.chain_word_identity", [&]() -> CheckOutcome {
        auto c = chain_word_identity(poset, even);
        if (c.lattice != c.direct) {
          return "lattice count " + c.lattice.get_str() + " != direct count " + std::to_string(c.direct);
        }
        return std::nullopt;
      });
    }
    return out;
  }
  if (!poset.is_naturally_labeled()) return out;
  ExtensionIndex ext = enumerate_extensions(poset);
  auto vs = test_assignments(poset.size(), opts.assignments, opts.seed);
  run("extensions.operator_identities", [&] { return check_operator_identities(ext); });
  run("chains.generators", [&] { return check_generators(ext, vs); });
  run("chains.stationary", [&] { return check_stationary(ext, vs); });
  if (poset.is_rooted_forest()) {
    run("chains.partition_function", [&] { return check_partition_function(ext, vs); });
    run("spectral.forest_spectrum", [&] { return check_forest_spectrum(ext, vs); });
    run("monoid.forest", [&] { return check_forest_monoid(ext, opts.monoid_cap, vs); });
  }
  if (poset.is_union_of_chains()) {
    run("spectral.chain_spectrum", [&] { return check_chain_spectrum(ext, vs); });
  }
  run("sampler.kernel", [&] { return check_sampler(ext, opts.sampler_steps); });
  return out;
}

std::vector<CheckResult> verify_corpus(const VerifyOptions& opts,
                                       const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> all;
  for (const auto& entry : corpus()) {
    if (entry.large && !opts.include_large) continue;
    for (auto& r : verify_entry(entry, opts)) {
      if (progress) progress(r);
      all.push_back(r);
      if (!r.ok) return all;
    }
  }
  return all;
}

}  // namespace lext
