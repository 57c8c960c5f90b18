#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lext/poset.hpp"

namespace lext {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Exact strictly positive values for x_1..x_n.
class RationalAssignment {
 public:
  RationalAssignment() = default;
  explicit RationalAssignment(std::vector<Rational> values);
  /// Comma-separated rationals: "1/10,2/10,3/10,4/10".
  static RationalAssignment parse(std::string_view text);
  /// Reproducible assignment with pairwise distinct coordinates p/q, p ≤ 20, q ≤ 9.
  static RationalAssignment random(int n, std::uint64_t seed);
  static RationalAssignment uniform(int n);  // every x_i = 1/n

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based.
  const Rational& operator[](int i) const { return values_[i - 1]; }
  const std::vector<Rational>& values() const { return values_; }
  Rational sum() const;
  std::string to_string() const;

 private:
  std::vector<Rational> values_;
};

/// Σ c_i x_i with integer coefficients; no constant term.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(int num_vars) : c_(num_vars, 0) {}
  explicit LinearForm(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}

  static LinearForm variable(int num_vars, int i);
  /// x_S = Σ_{i∈S} x_i.
  static LinearForm sum_of(int num_vars, LabelSet s);
  /// Parses "-x1-x3", "x2+x3", "2x1+x4", "0".
  static LinearForm parse(std::string_view text, int num_vars);

  int num_vars() const { return static_cast<int>(c_.size()); }
  std::int64_t coeff(int i) const { return c_[i - 1]; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator-(LinearForm a);
  friend LinearForm operator*(std::int64_t k, LinearForm a);

  Rational evaluate(const RationalAssignment& v) const;
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<std::int64_t> c_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Rational> operator*(std::span<const Rational> v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Square matrix of linear forms.
class FormMatrix {
 public:
  FormMatrix() = default;
  FormMatrix(std::size_t dim, int num_vars)
      : dim_(dim), num_vars_(num_vars), a_(dim * dim, LinearForm(num_vars)) {}

  std::size_t dim() const { return dim_; }
  int num_vars() const { return num_vars_; }
  LinearForm& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const LinearForm& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  LinearForm row_sum(std::size_t r) const;
  LinearForm column_sum(std::size_t c) const;
  bool is_symmetric() const;
  /// Adds `form` to every diagonal entry (M̄ = M + x_[n]·Id uses the all-ones form).
  FormMatrix shifted(const LinearForm& form) const;
  RationalMatrix evaluate(const RationalAssignment& v) const;

  friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  int num_vars_ = 0;
  std::vector<LinearForm> a_;
};

/// Dense coefficients, index k holds the coefficient of λ^k.
using Polynomial = std::vector<Rational>;

Polynomial trimmed(Polynomial p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Rational evaluate(const Polynomial& p, const Rational& x);
std::string to_string(const Polynomial& p);

/// Rank of an exact rational matrix by Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

/// The right null vector of M, normalized to first entry 1. Throws when the
/// null space is not one-dimensional or the first entry vanishes. The result
/// is re-multiplied and checked to satisfy M v = 0.
std::vector<Rational> kernel_vector(const RationalMatrix& m);

/// Coefficients of det(M − λ·Id); leading coefficient (−1)^dim. Exact: the
/// matrix is scaled to integers, the characteristic polynomial is computed
/// modulo enough 62-bit primes via Hessenberg reduction, and lifted by CRT.
Polynomial char_poly(const RationalMatrix& m);

struct SpectrumEntry {
  LinearForm eigenvalue;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of linear-form eigenvalues.
using Spectrum = std::vector<SpectrumEntry>;

/// Merges equal eigenvalues, drops zero multiplicities, sorts by form.
Spectrum normalized(Spectrum s);
std::uint64_t total_multiplicity(const Spectrum& s);

/// (−1)^N ∏ (λ − e(v))^m, the polynomial det(M − λ·Id) the spectrum predicts.
Polynomial predicted_char_poly(const Spectrum& s, const RationalAssignment& v);

/// True iff char_poly(M) equals the prediction evaluated at v.
bool spectrum_matches(const RationalMatrix& m, const Spectrum& predicted,
                      const RationalAssignment& v);

/// Rational eigenvalues of M (with multiplicity) and the leftover factor of
/// det(M − λ·Id) that has no rational roots.
struct RootSplit {
  std::vector<std::pair<Rational, int>> roots;
  Polynomial residual;
};
RootSplit split_rational_eigenvalues(const RationalMatrix& m);

}  // namespace lext
