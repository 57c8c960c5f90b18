// Command-line front end: poset JSON in, text/CSV/JSON/DOT out.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lext/chains.hpp"
#include "lext/corpus.hpp"
#include "lext/error.hpp"
#include "lext/io.hpp"
#include "lext/monoid.hpp"
#include "lext/sampler.hpp"
#include "lext/spectral.hpp"
#include "lext/verify.hpp"

namespace {

using namespace lext;

constexpr int kVerificationFailure = 1;
constexpr int kBadInput = 2;

struct VerificationFailed {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("input.file", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset load(const std::string& path) { return parse_poset_json(read_input(path)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_spectrum(const Spectrum& s) {
  for (const auto& e : s) {
    if (e.multiplicity > 0) std::cout << e.eigenvalue.to_string() << " " << e.multiplicity << "\n";
  }
}

void cmd_extensions(const std::string& path) {
  for (const Word& w : enumerate_extensions(load(path))) std::cout << word_to_string(w) << "\n";
}

void cmd_graph(const std::string& path, const std::string& kind, bool dot, bool loops) {
  WeightedDigraph g = build_graph(load(path), parse_chain_kind(kind));
  if (dot) {
    std::cout << graph_to_dot(g, loops);
    return;
  }
  for (const Edge& e : g.edges) {
    if (e.is_loop() && !loops) continue;
    std::cout << word_to_string(g.ext[e.from]) << " -> " << word_to_string(g.ext[e.to]) << " "
              << e.weight.to_string() << "\n";
  }
}

void cmd_matrix(const std::string& path, const std::string& kind, const std::string& format,
                bool shifted) {
  ExtensionIndex ext = enumerate_extensions(load(path));
  FormMatrix m = generator_matrix(build_graph(ext, parse_chain_kind(kind)));
  if (shifted) m = m.shifted(LinearForm::sum_of(ext.poset().size(), ext.poset().labels()));
  if (format == "csv") {
    std::cout << matrix_to_csv(ext, m);
  } else {
    std::cout << matrix_to_json(ext, m) << "\n";
  }
}

void cmd_stationary(const std::string& path, const std::string& kind_name, const std::string& at) {
  ExtensionIndex ext = enumerate_extensions(load(path));
  ChainKind kind = parse_chain_kind(kind_name);
  auto w = stationary_closed_form(ext, kind);
  if (at.empty()) {
    for (std::size_t k = 0; k < ext.size(); ++k) {
      std::cout << word_to_string(ext[k]) << " " << w[k].to_string() << "\n";
    }
    return;
  }
  RationalAssignment v = RationalAssignment::parse(at);
  auto p = stationary_distribution(ext, kind, v);
  auto values = evaluate(w, v);
  for (std::size_t k = 0; k < ext.size(); ++k) {
    std::cout << word_to_string(ext[k]) << " " << w[k].to_string() << " = " << to_string(values[k])
              << " probability " << to_string(p[k]) << "\n";
  }
  bool ok = verify_stationary(ext, kind, v);
  std::cout << "kernel check: " << (ok ? "ok" : "FAILED") << "\n";
  if (!ok) throw VerificationFailed{"chains.stationary: closed form is not the kernel of the generator"};
}

void cmd_spectrum(const std::string& path, const std::string& check_at) {
  Poset poset = load(path);
  ExtensionIndex ext = enumerate_extensions(poset);
  const int n = poset.size();
  const LinearForm all = LinearForm::sum_of(n, poset.labels());
  FormMatrix m = generator_matrix(build_graph(ext, ChainKind::Promotion));
  std::cout << "linear extensions: " << ext.size() << "\n";
  bool failed = false;
  if (poset.is_rooted_forest()) {
    Spectrum bar = predict_spectrum_forest(poset);
    Spectrum spec;
    for (const auto& e : bar) spec.push_back({e.eigenvalue - all, e.multiplicity});
    std::cout << "eigenvalues of the promotion generator:\n";
    print_spectrum(normalized(spec));
    if (!check_at.empty()) {
      RationalAssignment v = RationalAssignment::parse(check_at);
      bool ok = spectrum_matches(m.evaluate(v), spec, v);
      std::cout << "lattice prediction at " << v.to_string() << ": " << (ok ? "ok" : "FAILED") << "\n";
      failed = failed || !ok;
      if (poset.is_union_of_chains()) {
        bool ok2 = spectrum_matches(m.evaluate(v), predict_spectrum_chains(poset), v);
        std::cout << "poset-derangement prediction at " << v.to_string() << ": "
                  << (ok2 ? "ok" : "FAILED") << "\n";
        failed = failed || !ok2;
      }
    }
  } else {
    std::cout << "no closed-form prediction: not a rooted forest\n";
    if (!check_at.empty()) {
      RationalAssignment v = RationalAssignment::parse(check_at);
      RootSplit split = split_rational_eigenvalues(m.evaluate(v));
      std::cout << "rational eigenvalues at " << v.to_string() << ":\n";
      for (const auto& [root, mult] : split.roots) std::cout << to_string(root) << " " << mult << "\n";
      std::cout << "remaining factor degree: " << trimmed(split.residual).size() - 1 << "\n";
    }
  }
  if (failed) throw VerificationFailed{"spectral.forest_spectrum: prediction does not match"};
}

void cmd_monoid(const std::string& path, std::size_t cap) {
  Poset poset = load(path);
  PromotionMonoid m = generate_monoid(poset, cap);
  std::cout << "elements: " << m.size() << "\n";
  RTrivialReport r = is_r_trivial(m);
  std::cout << "R-trivial: " << yes_no(r.r_trivial) << "\n";
  std::size_t idempotents = 0;
  for (std::size_t x = 0; x < m.size(); ++x) idempotents += m.multiply(x, x) == x;
  std::cout << "idempotents: " << idempotents << "\n";
  if (!r.r_trivial) {
    auto [a, b] = *r.witness;
    auto table = [&](std::size_t x) {
      std::string s;
      for (std::size_t k = 0; k < m[x].table.size(); ++k) {
        s += (k ? ", " : "") + word_to_string(m.extensions()[k], true) + "->" +
             word_to_string(m.extensions()[m[x].table[k]], true);
      }
      return s;
    };
    std::cout << "same R-class: " << m[a].word_string() << " [" << table(a) << "] and "
              << m[b].word_string() << " [" << table(b) << "]\n";
    if (auto w = non_aperiodic_witness(m)) {
      std::cout << "aperiodic: no (" << m[w->first].word_string() << " has period "
                << w->second.period << ")\n";
    } else {
      std::cout << "aperiodic: yes\n";
    }
    return;
  }
  SuppDes s = supp_des(m);
  std::cout << "L^M:";
  for (LabelSet l : s.lattice) std::cout << " " << l.to_string();
  std::cout << "\nsupp/des:\n";
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::cout << m[x].word_string() << (s.idempotent[x] ? " idempotent" : "") << " supp="
              << s.supp[x].to_string() << " des=" << s.des[x].to_string() << "\n";
  }
  AxiomReport axioms = check_axioms(m, s);
  std::cout << "axioms: " << (axioms.ok() ? "ok" : "FAILED: " + axioms.first_failure) << "\n";
  std::cout << "spectrum (eigenvalue, chambers, multiplicity):\n";
  for (const auto& e : rtrivial_spectrum_table(m, s)) {
    std::cout << e.x.to_string() << " " << e.eigenvalue.to_string() << " " << e.chambers << " "
              << e.multiplicity << "\n";
  }
  if (!axioms.ok()) throw VerificationFailed{"monoid.axioms: " + axioms.first_failure};
}

struct SampleArgs {
  std::string x;
  std::uint64_t steps = 10000;
  std::uint64_t burnin = 0;
  std::uint64_t seed = 1;
  bool trace = false;
  bool tv = false;
  std::size_t tv_steps = 50;
};

void cmd_sample(const std::string& path, const SampleArgs& a) {
  ExtensionIndex ext = enumerate_extensions(load(path));
  const int n = ext.poset().size();
  WalkConfig cfg{a.x.empty() ? RationalAssignment::uniform(n) : RationalAssignment::parse(a.x),
                 a.steps, a.burnin, a.seed, 0};
  std::cout << "# seed=" << cfg.seed << " x=" << cfg.x.to_string() << " steps=" << cfg.steps
            << " burnin=" << cfg.burnin << "\n";
  if (a.trace) {
    sample_walk(ext, cfg, [&](std::size_t k) { std::cout << word_to_string(ext[k]) << "\n"; });
  } else {
    auto counts = sample_counts(ext, cfg);
    std::cout << "extension,count\n";
    for (std::size_t k = 0; k < ext.size(); ++k) std::cout << word_to_string(ext[k]) << "," << counts[k] << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", chi_square_uniform(counts));
    std::cout << "# chi-square=" << buf << " df=" << ext.size() - 1 << "\n";
  }
  if (a.tv) std::cout << tv_to_csv(iterate_distribution(step_kernel(ext, cfg.x), 0, a.tv_steps));
}

void cmd_verify(const VerifyOptions& opts, bool quiet) {
  std::size_t passed = 0;
  auto results = verify_corpus(opts, [&](const CheckResult& r) {
    if (r.ok) {
      ++passed;
      if (!quiet) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
        std::cout << "ok   " << r.invariant << " " << r.subject << " (" << buf << ")\n";
      }
    } else {
      std::cout << "FAIL " << r.invariant << " " << r.subject << ": " << r.detail << "\n";
    }
  });
  if (!results.empty() && !results.back().ok) {
    throw VerificationFailed{results.back().invariant + ": " + results.back().detail};
  }
  std::cout << passed << " checks passed\n";
}

void cmd_relabel(const std::string& path) {
  LabeledPoset lp = parse_labeled_poset_json(read_input(path));
  std::cout << poset_to_json(lp.poset) << "\n";
  for (std::size_t k = 0; k < lp.names.size(); ++k) std::cout << k + 1 << " " << lp.names[k] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov chains on linear extensions of finite posets"};
  app.require_subcommand(1);
  std::string path, kind = "promotion", format = "csv", at, check_at;
  bool dot = false, loops = false, shifted = false;

  auto* ext = app.add_subcommand("extensions", "List the linear extensions, one per line");
  ext->add_option("poset", path, "Poset JSON file ('-' for stdin)")->required();

  auto* graph = app.add_subcommand("graph", "Edges of a chain's weighted graph");
  graph->add_option("poset", path)->required();
  graph->add_option("--kind", kind, "uniform-transposition|transposition|uniform-promotion|promotion");
  graph->add_flag("--dot", dot, "Emit Graphviz DOT");
  graph->add_flag("--loops", loops, "Include loops");

  auto* matrix = app.add_subcommand("matrix", "Symbolic generator matrix");
  matrix->add_option("poset", path)->required();
  matrix->add_option("--kind", kind);
  matrix->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  matrix->add_flag("--shifted", shifted, "Add x1+...+xn on the diagonal");

  auto* stat = app.add_subcommand("stationary", "Closed-form stationary weights");
  stat->add_option("poset", path)->required();
  stat->add_option("--kind", kind);
  stat->add_option("--at", at, "Evaluate and check at x, e.g. 1/10,2/10,3/10,4/10");

  auto* spec = app.add_subcommand("spectrum", "Predicted spectrum of the promotion generator");
  spec->add_option("poset", path)->required();
  spec->add_option("--check-at", check_at, "Compare with the characteristic polynomial at x");

  std::size_t cap = kDefaultMonoidCap;
  auto* mon = app.add_subcommand("monoid", "Promotion monoid structure");
  mon->add_option("poset", path)->required();
  mon->add_option("--cap", cap, "Element budget")->check(CLI::PositiveNumber);

  SampleArgs sargs;
  auto* sample = app.add_subcommand("sample", "Random walk with the uniform promotion chain");
  sample->add_option("poset", path)->required();
  sample->add_option("--x", sargs.x, "Probabilities summing to 1 (default uniform)");
  sample->add_option("--steps", sargs.steps);
  sample->add_option("--burnin", sargs.burnin);
  sample->add_option("--seed", sargs.seed);
  sample->add_flag("--trace", sargs.trace, "Print every state instead of counts");
  sample->add_flag("--tv", sargs.tv, "Append the exact distance-to-uniform trace as CSV");
  sample->add_option("--tv-steps", sargs.tv_steps);

  VerifyOptions vopts;
  bool skip_large = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite on the bundled corpus");
  verify->add_option("--seed", vopts.seed, "Seed of the first random assignment");
  verify->add_option("--cap", vopts.monoid_cap);
  verify->add_flag("--skip-large", skip_large);
  verify->add_flag("--quiet", quiet);

  auto* relabel = app.add_subcommand("relabel", "Natural labeling of a poset on named elements");
  relabel->add_option("poset", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*ext) cmd_extensions(path);
    if (*graph) cmd_graph(path, kind, dot, loops);
    if (*matrix) cmd_matrix(path, kind, format, shifted);
    if (*stat) cmd_stationary(path, kind, at);
    if (*spec) cmd_spectrum(path, check_at);
    if (*mon) cmd_monoid(path, cap);
    if (*sample) cmd_sample(path, sargs);
    if (*verify) {
      vopts.include_large = !skip_large;
      cmd_verify(vopts, quiet);
    }
    if (*relabel) cmd_relabel(path);
  } catch (const VerificationFailed& f) {
    std::cerr << "verification failed: " << f.message << "\n";
    return kVerificationFailure;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
