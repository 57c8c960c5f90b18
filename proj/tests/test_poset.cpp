#include <doctest.h>

#include <functional>

#include "lext/corpus.hpp"
#include "lext/error.hpp"
#include "lext/poset.hpp"

using namespace lext;

namespace {

std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("building P0") {
  Poset p = examples::p0();
  CHECK(p.size() == 4);
  CHECK(p.leq(1, 3));
  CHECK(p.leq(1, 4));
  CHECK(p.leq(2, 3));
  CHECK_FALSE(p.comparable(2, 4));
  CHECK_FALSE(p.comparable(1, 2));
  CHECK_FALSE(p.comparable(3, 4));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}});
}

TEST_CASE("transitive reduction") {
  Poset a = Poset::build(3, {{1, 2}, {2, 3}, {1, 3}});
  Poset b = Poset::build(3, {{1, 2}, {2, 3}});
  CHECK(a == b);
  CHECK(a.covers().size() == 2);
  CHECK(Poset::build(3, a.covers()) == a);
  CHECK(Poset::build(1, {}).size() == 1);
}

TEST_CASE("invalid relations are rejected") {
  CHECK(invariant_of([] { Poset::build(3, {{1, 2}, {2, 3}, {3, 1}}); }) == "poset.acyclic");
  CHECK(invariant_of([] { Poset::build(2, {{1, 1}}); }) == "poset.acyclic");
  CHECK(invariant_of([] { Poset::build(3, {{1, 4}}); }) == "poset.label_range");
  CHECK(invariant_of([] { Poset::build(3, {{0, 2}}); }) == "poset.label_range");
  CHECK(invariant_of([] { Poset::build(3, {{1, 2}, {1, 2}}); }) == "poset.duplicate_pair");
}

TEST_CASE("natural labeling") {
  CHECK(examples::p0().is_naturally_labeled());
  CHECK_FALSE(Poset::build(2, {{2, 1}}).is_naturally_labeled());
  CHECK(Poset::build(4, {{1, 4}, {2, 3}}).is_naturally_labeled());
}

TEST_CASE("forests and unions of chains") {
  CHECK_FALSE(examples::p0().is_rooted_forest());
  CHECK(Poset::chain_union({3, 2}).is_rooted_forest());
  CHECK(Poset::build(3, {{1, 2}}).is_rooted_forest());
  CHECK(Poset::chain_union({3, 2}).is_union_of_chains());
  CHECK_FALSE(examples::p0().is_union_of_chains());
  CHECK(Poset::antichain(4).is_union_of_chains());
  CHECK_FALSE(Poset::build(3, {{1, 3}, {2, 3}}).is_union_of_chains());
  CHECK(Poset::build(3, {{1, 3}, {2, 3}}).is_rooted_forest());
  for (const auto& e : corpus()) {
    if (e.poset.is_union_of_chains()) CHECK(e.poset.is_rooted_forest());
  }
}

TEST_CASE("upper and lower sets") {
  auto ups = examples::p1().upper_sets();
  std::vector<LabelSet> expected = {LabelSet{},           LabelSet::of({2}),    LabelSet::of({3}),
                                    LabelSet::of({1, 2}), LabelSet::of({2, 3}), LabelSet::of({1, 2, 3})};
  CHECK(ups == expected);
  CHECK(Poset::antichain(4).upper_sets().size() == 16);
  CHECK(Poset::chain(5).upper_sets().size() == 6);
  for (const auto& e : corpus()) {
    if (e.large) continue;
    auto u = e.poset.upper_sets();
    auto l = e.poset.lower_sets();
    REQUIRE(u.size() == l.size());
    for (LabelSet s : u) {
      CHECK(e.poset.is_upper_set(s));
      CHECK(e.poset.is_lower_set(s.complement(e.poset.size())));
      for (LabelSet t : u) {
        CHECK(e.poset.is_upper_set(s | t));
        CHECK(e.poset.is_upper_set(s & t));
      }
    }
  }
}

TEST_CASE("restriction relabels order-isomorphically") {
  Poset p = examples::p0();
  Poset r = p.restrict(LabelSet::of({2, 3, 4}));
  CHECK(r == Poset::build(3, {{1, 2}}));
  CHECK(p.restrict(p.labels()) == p);
  CHECK(p.restrict(LabelSet{}).size() == 0);
}

TEST_CASE("label sets") {
  CHECK(LabelSet::of({1, 3, 4}).to_string() == "{1,3,4}");
  CHECK(LabelSet{}.to_string() == "{}");
  CHECK(LabelSet::of({1, 3}).complement(4) == LabelSet::of({2, 4}));
  CHECK(canonical_less(LabelSet::of({3}), LabelSet::of({1, 2})));
  CHECK(canonical_less(LabelSet::of({1, 3}), LabelSet::of({2, 3})));
  CHECK_FALSE(canonical_less(LabelSet::of({2}), LabelSet::of({2})));
}
