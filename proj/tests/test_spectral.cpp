#include <doctest.h>

#include "lext/chains.hpp"
#include "lext/corpus.hpp"
#include "lext/error.hpp"
#include "lext/spectral.hpp"
#include "lext/verify.hpp"
#include "oracles.hpp"

using namespace lext;

namespace {

std::vector<std::string> words(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(word_to_string(w, true));
  return out;
}

std::uint64_t multiplicity_of(const Spectrum& s, const LinearForm& f) {
  for (const auto& e : normalized(s)) {
    if (e.eigenvalue == f) return e.multiplicity;
  }
  return 0;
}

}  // namespace

TEST_CASE("upper-set lattice of P1") {
  UpperSetLattice l = UpperSetLattice::build(examples::p1());
  CHECK(l.size() == 6);
  CHECK(l.elements().front().empty());
  CHECK(l.elements().back() == LabelSet::of({1, 2, 3}));
  CHECK(l.index_of(LabelSet::of({2, 3})) == 4);
  CHECK_THROWS_AS(l.index_of(LabelSet::of({1})), Error);
  CHECK(l.chain_count(l.bottom()) == 3);
}

TEST_CASE("Boolean lattice Moebius function") {
  UpperSetLattice l = UpperSetLattice::build(Poset::antichain(4));
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      LabelSet a = l.elements()[x], b = l.elements()[y];
      std::int64_t expected = a.is_subset_of(b) ? ((b.size() - a.size()) % 2 ? -1 : 1) : 0;
      CHECK(l.mobius(x, y) == expected);
    }
  }
}

TEST_CASE("Moebius sums vanish on every corpus lattice") {
  for (const auto& e : corpus()) {
    if (e.large) continue;
    UpperSetLattice l = UpperSetLattice::build(e.poset);
    for (std::size_t x = 0; x < l.size(); ++x) {
      CHECK(l.mobius(x, x) == 1);
      for (std::size_t y = 0; y < l.size(); ++y) {
        if (x == y || !l.elements()[x].is_subset_of(l.elements()[y])) continue;
        std::int64_t sum = 0;
        for (std::size_t z = 0; z < l.size(); ++z) {
          if (l.elements()[x].is_subset_of(l.elements()[z]) && l.elements()[z].is_subset_of(l.elements()[y])) {
            sum += l.mobius(x, z);
          }
        }
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("maximal chains above an upper set count extensions of its complement") {
  for (const auto& e : corpus()) {
    if (e.large) continue;
    UpperSetLattice l = UpperSetLattice::build(e.poset);
    for (std::size_t k = 0; k < l.size(); ++k) {
      CHECK(l.chain_count(k) == count_extensions(e.poset.restrict(l.elements()[k].complement(e.poset.size()))));
    }
  }
  UpperSetLattice c = UpperSetLattice::build(Poset::chain(5));
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(c.chain_count(k) == 1);
}

TEST_CASE("derangement numbers") {
  for (int n = 2; n <= 5; ++n) {
    UpperSetLattice l = UpperSetLattice::build(Poset::antichain(n));
    DerangementTable t = derangement_numbers(l);
    for (std::size_t k = 0; k < l.size(); ++k) {
      CHECK(t.d[k] == oracle::derangements(n - t.upper[k].size()));
    }
  }
  DerangementTable c = derangement_numbers(UpperSetLattice::build(Poset::chain(4)));
  for (std::size_t k = 0; k + 1 < c.d.size(); ++k) CHECK(c.d[k] == 0);
  CHECK(c.d.back() == 1);

  UpperSetLattice p1 = UpperSetLattice::build(examples::p1());
  DerangementTable t1 = derangement_numbers(p1);
  for (std::size_t k = 0; k < p1.size(); ++k) {
    if (p1.upper_covers(k).size() == 1) CHECK(t1.d[k] == 0);
  }
}

TEST_CASE("poset derangements") {
  CHECK(words(poset_derangements(Poset::chain_union({2, 2}))) == std::vector<std::string>{"3142", "3412"});
  CHECK(words(poset_derangements(Poset::build(4, {{1, 4}, {2, 3}}))) == std::vector<std::string>{"2143"});
  CHECK(poset_derangements(Poset::chain(4)).empty());
}

TEST_CASE("forest spectrum predictions") {
  Spectrum two = predict_spectrum_forest(Poset::antichain(2));
  CHECK(multiplicity_of(two, LinearForm::parse("x1+x2", 2)) == 1);
  CHECK(multiplicity_of(two, LinearForm(2)) == 1);
  CHECK(multiplicity_of(two, LinearForm::parse("x1", 2)) == 0);
  CHECK(multiplicity_of(two, LinearForm::parse("x2", 2)) == 0);

  Spectrum chain = normalized(predict_spectrum_forest(Poset::chain(4)));
  CHECK(chain == Spectrum{{LinearForm::parse("x1+x2+x3+x4", 4), 1}});

  for (const Poset& p : {Poset::chain_union({2, 2}), Poset::build(4, {{1, 4}, {2, 3}})}) {
    CHECK(multiplicity_of(predict_spectrum_forest(p), LinearForm(4)) == 2);
    CHECK(multiplicity_of(predict_spectrum_chains(p), LinearForm::parse("-x1-x2-x3-x4", 4)) == 2);
  }
  CHECK_THROWS_AS(predict_spectrum_forest(examples::p0()), Error);
  CHECK_THROWS_AS(predict_spectrum_chains(Poset::build(3, {{1, 3}, {2, 3}})), Error);
}

TEST_CASE("forest spectra match characteristic polynomials") {
  for (const auto& e : corpus()) {
    if (e.large || !e.poset.is_rooted_forest()) continue;
    CAPTURE(e.name);
    auto failure = check_forest_spectrum(enumerate_extensions(e.poset), test_assignments(e.poset.size(), 3, 31));
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}

TEST_CASE("union-of-chains spectra") {
  Spectrum ts = predict_spectrum_chains(Poset::antichain(4));
  for (const auto& e : ts) {
    int size = 0;
    for (auto c : e.eigenvalue.coeffs()) size += c != 0;
    if (size > 0) CHECK(e.multiplicity == oracle::derangements(size));
  }
  Poset p = Poset::chain_union({1, 1, 2});
  CHECK(total_multiplicity(predict_spectrum_chains(p)) == count_extensions(p));
  for (const auto& e : corpus()) {
    if (e.large || !e.poset.is_union_of_chains()) continue;
    CAPTURE(e.name);
    auto failure = check_chain_spectrum(enumerate_extensions(e.poset), test_assignments(e.poset.size(), 3, 41));
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}

TEST_CASE("the determinant factors are lambda plus x_S") {
  // Factors (λ − x_S) over lower sets S fail; (λ + x_S) hold.
  Poset p = Poset::chain_union({2, 2});
  ExtensionIndex ext = enumerate_extensions(p);
  auto v = RationalAssignment::random(4, 77);
  RationalMatrix m = generator_matrix(build_graph(ext, ChainKind::Promotion)).evaluate(v);
  Spectrum minus = predict_spectrum_chains(p);
  Spectrum plus;
  for (const auto& e : minus) plus.push_back({-e.eigenvalue, e.multiplicity});
  CHECK(spectrum_matches(m, minus, v));
  CHECK_FALSE(spectrum_matches(m, plus, v));
}

TEST_CASE("chain word identity") {
  Poset p = Poset::chain_union({2, 2});
  auto none = chain_word_identity(p, std::vector<int>{});
  CHECK(none.lattice == 6);
  CHECK(none.direct == 6);
  auto both = chain_word_identity(p, std::vector<int>{1, 2});
  CHECK(both.lattice == both.direct);
  auto c = chain_word_identity(Poset::chain_union({3, 2, 1}), std::vector<int>{1, 3});
  CHECK(c.lattice == c.direct);
  CHECK_THROWS_AS(chain_word_identity(p, std::vector<int>{3}), Error);
}

TEST_CASE("relabeling unions of chains") {
  Poset crossed = Poset::build(4, {{1, 4}, {2, 3}});
  CHECK(chains_of(crossed) == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK(relabel_consecutively(crossed) == Poset::chain_union({2, 2}));
}
