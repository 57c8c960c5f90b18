#include "lext/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lext/error.hpp"

namespace lext {

using nlohmann::json;

Poset parse_poset_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("input.json", e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error("input.poset_shape", "expected an object with integer field \"n\"");
  }
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error("input.poset_shape", "\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
        throw Error("input.poset_shape", "each cover must be a pair of integers");
      }
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  return Poset::build(n, covers);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("input.file", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poset_json(ss.str());
}

std::string poset_to_json(const Poset& poset) {
  json covers = json::array();
  for (auto [a, b] : poset.covers()) covers.push_back({a, b});
  return json{{"n", poset.size()}, {"covers", covers}}.dump();
}

LabeledPoset parse_labeled_poset_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("input.json", e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw Error("input.poset_shape", "expected an object with an \"elements\" array");
  }
  auto name_of = [](const json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    throw Error("input.poset_shape", "element names must be strings or integers");
  };
  std::vector<std::string> names;
  std::map<std::string, int> position;
  for (const auto& e : j["elements"]) {
    std::string name = name_of(e);
    if (!position.emplace(name, static_cast<int>(names.size())).second) {
      throw Error("input.poset_shape", "element '" + name + "' listed twice");
    }
    names.push_back(name);
  }
  const int n = static_cast<int>(names.size());
  std::vector<std::pair<int, int>> rel;
  if (j.contains("covers")) {
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2) throw Error("input.poset_shape", "each cover must be a pair");
      auto a = position.find(name_of(c[0])), b = position.find(name_of(c[1]));
      if (a == position.end() || b == position.end()) {
        throw Error("poset.label_range", "cover mentions an unknown element");
      }
      rel.emplace_back(a->second + 1, b->second + 1);
    }
  }
  // Validates (cycles, duplicates) on the input positions first.
  Poset raw = Poset::build(n, rel);
  std::vector<int> label(n + 1, 0);
  LabelSet placed;
  LabeledPoset out;
  for (int next = 1; next <= n; ++next) {
    for (int a = 1; a <= n; ++a) {
      if (placed.contains(a)) continue;
      if ((raw.down_set(a) - LabelSet::of({a})).is_subset_of(placed)) {
        placed.insert(a);
        label[a] = next;
        out.names.push_back(names[a - 1]);
        break;
      }
    }
  }
  std::vector<std::pair<int, int>> relabeled;
  for (auto [a, b] : raw.covers()) relabeled.emplace_back(label[a], label[b]);
  out.poset = Poset::build(n, relabeled);
  return out;
}

std::string matrix_to_json(const ExtensionIndex& ext, const FormMatrix& m) {
  json basis = json::array(), rows = json::array();
  for (const Word& w : ext) basis.push_back(word_to_string(w));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).coeffs());
    rows.push_back(row);
  }
  return json{{"variables", m.num_vars()}, {"basis", basis}, {"entries", rows}}.dump();
}

std::string matrix_to_csv(const ExtensionIndex& ext, const FormMatrix& m) {
  std::string out;
  for (const Word& w : ext) out += "," + word_to_string(w);
  out += '\n';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += word_to_string(ext[r]);
    for (std::size_t c = 0; c < m.dim(); ++c) out += "," + m(r, c).to_string();
    out += '\n';
  }
  return out;
}

std::string graph_to_dot(const WeightedDigraph& g, bool include_loops) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, LinearForm> merged;
  const int n = g.ext.poset().size();
  for (const Edge& e : g.edges) {
    if (e.is_loop() && !include_loops) continue;
    auto [it, inserted] = merged.try_emplace({e.from, e.to}, LinearForm(n));
    it->second += e.weight;
  }
  std::string out = "digraph \"" + std::string(to_string(g.kind)) + "\" {\n";
  for (std::size_t k = 0; k < g.ext.size(); ++k) {
    out += "  v" + std::to_string(k) + " [label=\"" + word_to_string(g.ext[k], true) + "\"];\n";
  }
  for (const auto& [ends, w] : merged) {
    out += "  v" + std::to_string(ends.first) + " -> v" + std::to_string(ends.second) +
           " [label=\"" + w.to_string() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_decimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  std::string fmt = "%." + std::to_string(digits) + "Fg";
  std::vector<char> buf(digits + 32);
  gmp_snprintf(buf.data(), buf.size(), fmt.c_str(), f.get_mpf_t());
  return buf.data();
}

std::string tv_to_csv(const DistributionTrace& trace) {
  std::string out = "step,tv,tv_exact\n";
  for (std::size_t s = 0; s < trace.tv.size(); ++s) {
    out += std::to_string(s) + "," + to_decimal(trace.tv[s]) + "," + to_string(trace.tv[s]) + "\n";
  }
  return out;
}

}  // namespace lext
