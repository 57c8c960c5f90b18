#include "lext/corpus.hpp"

#include "lext/error.hpp"

namespace lext {

namespace examples {
Poset p0() { return Poset::build(4, {{1, 3}, {1, 4}, {2, 3}}); }
Poset p1() { return Poset::build(3, {{1, 2}}); }
Poset p2() { return Poset::build(3, {{1, 2}, {1, 3}}); }
Poset claw() { return Poset::build(4, {{1, 2}, {1, 3}, {1, 4}}); }
}  // namespace examples

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"P0", examples::p0()});
  c.push_back({"P1", examples::p1()});
  c.push_back({"P2", examples::p2()});
  c.push_back({"claw", examples::claw()});
  for (int n = 1; n <= 6; ++n) c.push_back({"chain" + std::to_string(n), Poset::chain(n)});
  for (int n = 2; n <= 5; ++n) c.push_back({"antichain" + std::to_string(n), Poset::antichain(n)});

  c.push_back({"chains-2+2", Poset::chain_union({2, 2})});
  c.push_back({"chains-2+2-crossed", Poset::build(4, {{1, 4}, {2, 3}})});
  c.push_back({"chains-1+1+2", Poset::chain_union({1, 1, 2})});
  c.push_back({"chains-2+1", Poset::chain_union({2, 1})});
  c.push_back({"chains-3+2", Poset::chain_union({3, 2})});
  c.push_back({"chains-4+4", Poset::chain_union({4, 4})});
  c.push_back({"chains-5+3", Poset::chain_union({5, 3})});
  c.push_back({"chains-2+2+2", Poset::chain_union({2, 2, 2})});
  c.push_back({"chains-3+2+1", Poset::chain_union({3, 2, 1})});

  c.push_back({"forest-v", Poset::build(3, {{1, 3}, {2, 3}})});
  c.push_back({"forest-star4", Poset::build(4, {{1, 4}, {2, 4}, {3, 4}})});
  c.push_back({"forest-v+1", Poset::build(4, {{1, 3}, {2, 3}})});
  c.push_back({"forest-5", Poset::build(5, {{1, 3}, {2, 3}, {3, 5}, {4, 5}})});
  c.push_back({"forest-6", Poset::build(6, {{1, 2}, {2, 4}, {3, 4}, {5, 6}})});
  c.push_back({"forest-6b", Poset::build(6, {{1, 4}, {2, 4}, {3, 5}, {4, 6}, {5, 6}})});
  c.push_back({"forest-7", Poset::build(7, {{1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}})});

  c.push_back({"chains-3+4+2+5", Poset::chain_union({3, 4, 2, 5}), true});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const Poset& corpus_poset(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e.poset;
  }
  throw Error("corpus.name", "no corpus poset named '" + std::string(name) + "'");
}

}  // namespace lext
