#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lext/poset.hpp"

namespace lext {

struct CorpusEntry {
  std::string name;
  Poset poset;
  bool large = false;  // too many extensions for the matrix and monoid checks
};

/// The bundled posets, in a fixed order.
const std::vector<CorpusEntry>& corpus();
const Poset& corpus_poset(std::string_view name);

namespace examples {
/// 1<3, 1<4, 2<3.
Poset p0();
/// 1<2, with 3 unrelated.
Poset p1();
/// 1<2, 1<3.
Poset p2();
/// 1<2, 1<3, 1<4.
Poset claw();
}  // namespace examples

}  // namespace lext
