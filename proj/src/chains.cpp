#include "lext/chains.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lext/error.hpp"

namespace lext {

std::string_view to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::UniformTransposition: return "uniform-transposition";
    case ChainKind::Transposition: return "transposition";
    case ChainKind::UniformPromotion: return "uniform-promotion";
    case ChainKind::Promotion: return "promotion";
  }
  return "?";
}

ChainKind parse_chain_kind(std::string_view name) {
  for (ChainKind k : kAllChainKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error("chains.kind", "unknown chain kind '" + std::string(name) + "'");
}

bool is_uniform(ChainKind kind) {
  return kind == ChainKind::UniformTransposition || kind == ChainKind::UniformPromotion;
}

bool uses_promotion(ChainKind kind) {
  return kind == ChainKind::UniformPromotion || kind == ChainKind::Promotion;
}

WeightedDigraph build_graph(const ExtensionIndex& ext, ChainKind kind) {
  const Poset& poset = ext.poset();
  const int n = poset.size();
  WeightedDigraph g{ext, kind, {}};
  const int last = uses_promotion(kind) ? n : n - 1;
  for (int j = 1; j <= last; ++j) {
    Operator op{uses_promotion(kind) ? OperatorKind::Promotion : OperatorKind::Tau, j};
    Table t = operator_table(ext, op);
    for (std::size_t k = 0; k < ext.size(); ++k) {
      int var = is_uniform(kind) ? j : ext[k][j - 1];
      g.edges.push_back({static_cast<std::uint32_t>(k), t[k], j, LinearForm::variable(n, var)});
    }
  }
  return g;
}

WeightedDigraph build_graph(const Poset& poset, ChainKind kind) {
  return build_graph(enumerate_extensions(poset), kind);
}

FormMatrix generator_matrix(const WeightedDigraph& graph) {
  FormMatrix m(graph.ext.size(), graph.ext.poset().size());
  for (const Edge& e : graph.edges) {
    if (e.is_loop()) continue;
    m(e.to, e.from) += e.weight;
    m(e.from, e.from) -= e.weight;
  }
  return m;
}

bool is_strongly_connected(std::size_t vertices,
                           std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs) {
  if (vertices <= 1) return true;
  std::vector<std::vector<std::uint32_t>> fwd(vertices), bwd(vertices);
  for (auto [a, b] : arcs) {
    if (a == b) continue;
    fwd[a].push_back(b);
    bwd[b].push_back(a);
  }
  auto reaches_all = [&](const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<bool> seen(vertices, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertices;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

bool is_strongly_connected(const WeightedDigraph& graph) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  arcs.reserve(graph.edges.size());
  for (const Edge& e : graph.edges) arcs.emplace_back(e.from, e.to);
  return is_strongly_connected(graph.ext.size(), arcs);
}

RationalFunction RationalFunction::reduced() const {
  std::vector<LinearForm> num = numerator, den = denominator;
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  RationalFunction out;
  std::size_t i = 0, j = 0;
  while (i < num.size() || j < den.size()) {
    if (j == den.size() || (i < num.size() && num[i] < den[j])) {
      out.numerator.push_back(num[i++]);
    } else if (i == num.size() || den[j] < num[i]) {
      out.denominator.push_back(den[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

Rational RationalFunction::evaluate(const RationalAssignment& v) const {
  Rational num = 1, den = 1;
  for (const auto& f : numerator) num *= f.evaluate(v);
  for (const auto& f : denominator) den *= f.evaluate(v);
  if (sgn(den) == 0) throw Error("chains.pole", "denominator vanishes at " + v.to_string());
  return num / den;
}

namespace {

std::string product_string(const std::vector<LinearForm>& factors, bool as_divisor) {
  if (factors.empty()) return "1";
  // Equal neighbours (the lists are sorted) are written as powers.
  std::vector<std::pair<LinearForm, int>> runs;
  for (const auto& f : factors) {
    if (!runs.empty() && runs.back().first == f) {
      ++runs.back().second;
    } else {
      runs.emplace_back(f, 1);
    }
  }
  // Display order: single variables first, then by lowest variable and number of terms.
  auto key = [](const LinearForm& f) {
    const auto& c = f.coeffs();
    auto first = std::find_if(c.begin(), c.end(), [](std::int64_t a) { return a != 0; }) - c.begin();
    auto terms = std::count_if(c.begin(), c.end(), [](std::int64_t a) { return a != 0; });
    return std::tuple(terms > 1, first, terms);
  };
  std::stable_sort(runs.begin(), runs.end(), [&](const auto& a, const auto& b) {
    return key(a.first) < key(b.first) || (key(a.first) == key(b.first) && b.first < a.first);
  });
  std::string s;
  for (const auto& [f, e] : runs) {
    std::string t = f.to_string();
    if (t.find_first_of("+-", 1) != std::string::npos) t = "(" + t + ")";
    s += t;
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (as_divisor && runs.size() > 1) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string RationalFunction::to_string() const {
  std::string num = product_string(numerator, false);
  if (denominator.empty()) return num;
  return num + "/" + product_string(denominator, true);
}

std::vector<RationalFunction> stationary_closed_form(const ExtensionIndex& ext, ChainKind kind) {
  const int n = ext.poset().size();
  std::vector<RationalFunction> out;
  out.reserve(ext.size());
  for (const Word& w : ext) {
    RationalFunction r;
    if (kind == ChainKind::Promotion) {
      LinearForm prefix(n), sorted_prefix(n);
      for (int i = 1; i <= n; ++i) {
        sorted_prefix += LinearForm::variable(n, i);
        prefix += LinearForm::variable(n, w[i - 1]);
        r.numerator.push_back(sorted_prefix);
        r.denominator.push_back(prefix);
      }
    } else if (kind == ChainKind::Transposition) {
      for (int i = 1; i <= n; ++i) {
        int e = i - w[i - 1];
        auto& side = e > 0 ? r.numerator : r.denominator;
        for (int k = 0; k < std::abs(e); ++k) side.push_back(LinearForm::variable(n, w[i - 1]));
      }
    }
    out.push_back(r.reduced());
  }
  return out;
}

std::vector<Rational> evaluate(std::span<const RationalFunction> w, const RationalAssignment& v) {
  std::vector<Rational> out;
  out.reserve(w.size());
  for (const auto& f : w) out.push_back(f.evaluate(v));
  return out;
}

bool is_stationary_vector(const RationalMatrix& m, std::span<const Rational> w) {
  if (w.size() != m.cols()) return false;
  for (const auto& x : m * w) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool verify_stationary(const ExtensionIndex& ext, ChainKind kind, const RationalAssignment& v) {
  RationalMatrix m = generator_matrix(build_graph(ext, kind)).evaluate(v);
  std::vector<Rational> w = evaluate(stationary_closed_form(ext, kind), v);
  if (!is_stationary_vector(m, w)) return false;
  std::vector<Rational> k = kernel_vector(m);
  if (sgn(w[0]) == 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] / w[0] != k[i]) return false;
  }
  return true;
}

Rational partition_function(const Poset& poset, const RationalAssignment& v) {
  if (!poset.is_rooted_forest()) {
    throw Error("chains.rooted_forest", "the partition function formula needs a rooted forest");
  }
  const int n = poset.size();
  Rational z = 1, prefix = 0;
  for (int i = 1; i <= n; ++i) {
    prefix += v[i];
    z *= LinearForm::sum_of(n, poset.down_set(i)).evaluate(v) / prefix;
  }
  return z;
}

std::vector<Rational> stationary_distribution(const ExtensionIndex& ext, ChainKind kind,
                                              const RationalAssignment& v) {
  std::vector<Rational> w = evaluate(stationary_closed_form(ext, kind), v);
  Rational scale;
  if (kind == ChainKind::Promotion && ext.poset().is_rooted_forest()) {
    scale = partition_function(ext.poset(), v);
  } else {
    Rational total = 0;
    for (const auto& x : w) total += x;
    scale = 1 / total;
  }
  for (auto& x : w) x *= scale;
  return w;
}

}  // namespace lext
