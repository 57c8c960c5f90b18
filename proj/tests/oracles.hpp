// Brute-force reference computations used to cross-check the library.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "lext/linform.hpp"
#include "lext/monoid.hpp"
#include "lext/poset.hpp"

namespace oracle {

using lext::Poset;
using lext::Rational;
using lext::RationalMatrix;

// Every permutation of 1..n, kept if it respects the order pairwise.
inline std::vector<std::vector<int>> extensions_by_permutation(const Poset& p) {
  const int n = p.size();
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) ok = !p.less(w[b], w[a]);
    }
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Fixed-point-free permutations of m letters, by enumeration.
inline std::uint64_t derangements(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 0);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < m; ++i) fixed = fixed || w[i] == i;
    count += !fixed;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

// Determinant by rational Gaussian elimination.
inline Rational det(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

// det(M − λ) from its values at λ = 0..N, by Lagrange interpolation.
inline lext::Polynomial char_poly_by_interpolation(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    RationalMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= Rational(static_cast<long>(k));
    xs.push_back(Rational(static_cast<long>(k)));
    ys.push_back(det(a));
  }
  lext::Polynomial result(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    lext::Polynomial basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = lext::multiply(basis, {-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += ys[i] * basis[k] / denom;
  }
  return result;
}

// x·M as a set of element indices, computed by multiplying with every element.
inline std::vector<std::set<std::size_t>> right_ideals(const lext::PromotionMonoid& m) {
  std::vector<std::set<std::size_t>> out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) out[x].insert(m.multiply(x, y));
  }
  return out;
}

}  // namespace oracle
