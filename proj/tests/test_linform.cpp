#include <doctest.h>

#include <random>

#include "lext/chains.hpp"
#include "lext/corpus.hpp"
#include "lext/error.hpp"
#include "lext/linform.hpp"
#include "oracles.hpp"

using namespace lext;

namespace {

RationalMatrix from_rows(std::vector<std::vector<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("evaluating forms") {
  auto v = RationalAssignment::parse("1/2,1/3,1/6");
  CHECK((LinearForm::variable(3, 1) + LinearForm::variable(3, 2)).evaluate(v) == q(5, 6));
  CHECK(LinearForm(3).evaluate(v) == 0);
  CHECK(LinearForm::parse("-x1-x3", 4).evaluate(RationalAssignment::parse("1,1,1,1")) == -2);
  CHECK_THROWS_AS(LinearForm(2).evaluate(v), Error);
}

TEST_CASE("form syntax") {
  for (const char* s : {"x1", "-x1", "x2+x3", "-x1-x2-x3", "2x1+x4", "-3x2", "0"}) {
    CHECK(LinearForm::parse(s, 4).to_string() == s);
  }
  CHECK(LinearForm::parse("x1 + x1", 2).to_string() == "2x1");
  CHECK(LinearForm::parse("x1-x1", 2).is_zero());
  CHECK_THROWS_AS(LinearForm::parse("x5", 4), Error);
  CHECK_THROWS_AS(LinearForm::parse("x1x2", 4), Error);
  CHECK_THROWS_AS(LinearForm::parse("y1", 4), Error);
  CHECK(LinearForm::sum_of(4, LabelSet::of({1, 3})).to_string() == "x1+x3");
}

TEST_CASE("rationals and assignments") {
  CHECK(to_string(parse_rational("2/10")) == "1/5");
  CHECK(to_string(parse_rational("-4")) == "-4");
  CHECK(to_string(parse_rational(" 3/1 ")) == "3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(RationalAssignment::parse("1,0,2"), Error);
  CHECK_THROWS_AS(RationalAssignment::parse("1,-1/2"), Error);
  auto a = RationalAssignment::random(6, 42);
  auto b = RationalAssignment::random(6, 42);
  CHECK(a.values() == b.values());
  std::set<Rational> distinct(a.values().begin(), a.values().end());
  CHECK(distinct.size() == 6);
  CHECK(RationalAssignment::uniform(4).sum() == 1);
  CHECK(RationalAssignment::parse("1/10,2/10,3/10,4/10").to_string() == "1/10,1/5,3/10,2/5");
}

TEST_CASE("kernel vectors") {
  CHECK(kernel_vector(RationalMatrix(1, 1)) == std::vector<Rational>{1});
  CHECK_THROWS_AS(kernel_vector(RationalMatrix(2, 2)), Error);
  CHECK_THROWS_AS(kernel_vector(RationalMatrix::identity(2)), Error);

  ExtensionIndex ext = enumerate_extensions(examples::p0());
  FormMatrix t = generator_matrix(build_graph(ext, ChainKind::Transposition));
  FormMatrix ut = generator_matrix(build_graph(ext, ChainKind::UniformTransposition));
  for (std::uint64_t seed : {1, 2, 3}) {
    auto v = RationalAssignment::random(4, seed);
    std::vector<Rational> expected = {1, v[3] / v[4], v[2] * v[3] / (v[4] * v[4]), v[1] / v[2],
                                      v[1] * v[3] / (v[2] * v[4])};
    CHECK(kernel_vector(t.evaluate(v)) == expected);
    CHECK(kernel_vector(ut.evaluate(v)) == std::vector<Rational>(5, 1));
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(RationalMatrix::identity(3)) == Polynomial{1, -3, 3, -1});
  CHECK(char_poly(RationalMatrix(0, 0)) == Polynomial{1});

  auto v = RationalAssignment::parse("2/3,5/7");
  RationalMatrix two = generator_matrix(build_graph(Poset::antichain(2), ChainKind::Promotion)).evaluate(v);
  CHECK(char_poly(two) == Polynomial{0, v.sum(), 1});

  RationalMatrix p0 = generator_matrix(build_graph(examples::p0(), ChainKind::Promotion))
                          .evaluate(RationalAssignment::parse("1,1,1,1"));
  Polynomial expected{1};
  for (long root : {0, -2, -3, -4, -5}) expected = multiply(expected, {q(-root), 1});
  for (auto& c : expected) c = -c;
  CHECK(char_poly(p0) == expected);
}

TEST_CASE("characteristic polynomial agrees with interpolated determinants") {
  std::mt19937_64 rng(7);
  for (int size = 1; size <= 9; ++size) {
    RationalMatrix m(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = static_cast<long>(rng() % 7) + 1;
        if (rng() % 3 == 0) num = 0;
        m(r, c) = q(num, den);
      }
    }
    CAPTURE(size);
    CHECK(char_poly(m) == oracle::char_poly_by_interpolation(m));
  }
  // Large entries force several primes in the reconstruction.
  RationalMatrix big(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) big(r, c) = Rational(mpz_class("123456789012345678901") * (r + 2 * c + 1) - c, 7 + r);
  }
  CHECK(char_poly(big) == oracle::char_poly_by_interpolation(big));
  for (const char* name : {"P0", "forest-5", "chains-3+2"}) {
    auto ext = enumerate_extensions(corpus_poset(name));
    auto m = generator_matrix(build_graph(ext, ChainKind::Promotion)).evaluate(RationalAssignment::random(ext.poset().size(), 11));
    CHECK(char_poly(m) == oracle::char_poly_by_interpolation(m));
  }
}

TEST_CASE("spectrum comparison") {
  auto v = RationalAssignment::parse("1/2,1/3");
  RationalMatrix two = generator_matrix(build_graph(Poset::antichain(2), ChainKind::Promotion)).evaluate(v);
  Spectrum good = {{LinearForm(2), 1}, {LinearForm::parse("-x1-x2", 2), 1}};
  CHECK(spectrum_matches(two, good, v));
  Spectrum perturbed = {{LinearForm(2), 2}, {LinearForm::parse("-x1-x2", 2), 0}};
  CHECK_FALSE(spectrum_matches(two, perturbed, v));
  Spectrum short_one = {{LinearForm(2), 1}};
  CHECK_FALSE(spectrum_matches(two, short_one, v));
  RationalMatrix one(1, 1);
  CHECK(spectrum_matches(one, {{LinearForm(2), 1}}, v));
  CHECK(normalized({{LinearForm::parse("x1", 2), 1}, {LinearForm::parse("x1", 2), 2}, {LinearForm(2), 0}}) ==
        Spectrum{{LinearForm::parse("x1", 2), 3}});
}

TEST_CASE("rational eigenvalue splitting") {
  RationalMatrix d = from_rows({{q(1, 2), 0, 0}, {0, q(-3), 0}, {0, 0, q(1, 2)}});
  RootSplit s = split_rational_eigenvalues(d);
  CHECK(s.roots == std::vector<std::pair<Rational, int>>{{q(-3), 1}, {q(1, 2), 2}});
  CHECK(s.residual == Polynomial{1});
  RationalMatrix irr = from_rows({{0, 1}, {2, 0}});  // λ² − 2
  RootSplit t = split_rational_eigenvalues(irr);
  CHECK(t.roots.empty());
  CHECK(t.residual == Polynomial{-2, 0, 1});
}

TEST_CASE("form matrices") {
  FormMatrix m(2, 3);
  m(0, 1) = LinearForm::parse("x1+x2", 3);
  m(1, 0) = LinearForm::parse("x1+x2", 3);
  CHECK(m.is_symmetric());
  CHECK(m.row_sum(0) == LinearForm::parse("x1+x2", 3));
  FormMatrix s = m.shifted(LinearForm::parse("x3", 3));
  CHECK(s(0, 0) == LinearForm::parse("x3", 3));
  RationalMatrix e = s.evaluate(RationalAssignment::parse("1,2,3"));
  CHECK(e(0, 1) == 3);
  CHECK(e(1, 1) == 3);
  CHECK((e * RationalMatrix::identity(2)) == e);
}
