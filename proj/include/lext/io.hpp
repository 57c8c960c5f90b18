#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lext/chains.hpp"
#include "lext/sampler.hpp"

namespace lext {

/// {"n": 4, "covers": [[1,3],[1,4],[2,3]]}
Poset parse_poset_json(std::string_view text);
Poset read_poset_file(const std::string& path);
std::string poset_to_json(const Poset& poset);

/// A poset on arbitrary element names, relabeled naturally: labels follow a
/// topological order that breaks ties by input position.
struct LabeledPoset {
  Poset poset;
  std::vector<std::string> names;  // names[k] carries label k+1
};

/// {"elements": ["a", "b", ...], "covers": [["a", "b"], ...]}; elements may be
/// strings or integers.
LabeledPoset parse_labeled_poset_json(std::string_view text);

/// {"variables": n, "basis": ["1 2 3 4", ...], "entries": [[[c1..cn], ...], ...]}
std::string matrix_to_json(const ExtensionIndex& ext, const FormMatrix& m);
/// Header row of basis words, then one row per extension with forms like "-x1-x3".
std::string matrix_to_csv(const ExtensionIndex& ext, const FormMatrix& m);

/// Edges labeled by their weight; parallel edges merged by summing weights.
std::string graph_to_dot(const WeightedDigraph& g, bool include_loops);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& q, int digits = 12);

/// "step,tv,tv_exact" rows.
std::string tv_to_csv(const DistributionTrace& trace);

}  // namespace lext
