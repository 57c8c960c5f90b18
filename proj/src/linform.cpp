#include "lext/linform.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "lext/error.hpp"

namespace lext {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto bad = [&] { return Error("rational.syntax", "cannot parse '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num), q(den);
  if (q == 0) throw Error("rational.zero_denominator", "'" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RationalAssignment::RationalAssignment(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i].canonicalize();
    if (values_[i] <= 0) {
      throw Error("assignment.positive", "x" + std::to_string(i + 1) + " = " +
                                             lext::to_string(values_[i]) + " is not positive");
    }
  }
}

RationalAssignment RationalAssignment::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    values.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return RationalAssignment(std::move(values));
}

RationalAssignment RationalAssignment::random(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Rational> used;
  std::vector<Rational> values;
  while (static_cast<int>(values.size()) < n) {
    Rational q(static_cast<long>(rng() % 20 + 1), static_cast<long>(rng() % 9 + 1));
    q.canonicalize();
    if (used.insert(q).second) values.push_back(q);
  }
  return RationalAssignment(std::move(values));
}

RationalAssignment RationalAssignment::uniform(int n) {
  return RationalAssignment(std::vector<Rational>(n, Rational(1, n)));
}

Rational RationalAssignment::sum() const {
  Rational s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

std::string RationalAssignment::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) s += ',';
    s += lext::to_string(values_[i]);
  }
  return s;
}

LinearForm LinearForm::variable(int num_vars, int i) {
  LinearForm f(num_vars);
  f.c_[i - 1] = 1;
  return f;
}

LinearForm LinearForm::sum_of(int num_vars, LabelSet s) {
  LinearForm f(num_vars);
  for (int i : s.members()) f.c_[i - 1] = 1;
  return f;
}

LinearForm LinearForm::parse(std::string_view text, int num_vars) {
  LinearForm f(num_vars);
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto bad = [&](const std::string& why) {
    return Error("linform.syntax", "'" + std::string(text) + "': " + why);
  };
  if (s == "0") return f;
  std::size_t k = 0;
  while (k < s.size()) {
    std::int64_t sign = 1;
    if (s[k] == '+' || s[k] == '-') {
      sign = s[k] == '-' ? -1 : 1;
      ++k;
    } else if (k != 0) {
      throw bad("missing sign between terms");
    }
    std::int64_t coef = 1;
    std::size_t d = k;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    if (d > k) coef = std::stoll(s.substr(k, d - k));
    k = d;
    if (k >= s.size() || s[k] != 'x') throw bad("expected x<index>");
    ++k;
    d = k;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    if (d == k) throw bad("missing variable index");
    int var = std::stoi(s.substr(k, d - k));
    if (var < 1 || var > num_vars) throw bad("variable index out of range");
    f.c_[var - 1] += sign * coef;
    k = d;
  }
  return f;
}

bool LinearForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; });
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LinearForm operator-(LinearForm a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

LinearForm operator*(std::int64_t k, LinearForm a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

Rational LinearForm::evaluate(const RationalAssignment& v) const {
  if (v.size() != num_vars()) {
    throw Error("linform.dimension", "form in " + std::to_string(num_vars()) +
                                         " variables evaluated at " + std::to_string(v.size()) +
                                         " values");
  }
  Rational s = 0;
  for (int i = 0; i < num_vars(); ++i) {
    if (c_[i] != 0) s += Rational(static_cast<long>(c_[i])) * v.values()[i];
  }
  return s;
}

std::string LinearForm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += 'x' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) s += (*this)(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

LinearForm FormMatrix::row_sum(std::size_t r) const {
  LinearForm s(num_vars_);
  for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c);
  return s;
}

LinearForm FormMatrix::column_sum(std::size_t c) const {
  LinearForm s(num_vars_);
  for (std::size_t r = 0; r < dim_; ++r) s += (*this)(r, c);
  return s;
}

bool FormMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r + 1; c < dim_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

FormMatrix FormMatrix::shifted(const LinearForm& form) const {
  FormMatrix out = *this;
  for (std::size_t k = 0; k < dim_; ++k) out(k, k) += form;
  return out;
}

RationalMatrix FormMatrix::evaluate(const RationalAssignment& v) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const LinearForm& f = (*this)(r, c);
      if (!f.is_zero()) m(r, c) = f.evaluate(v);
    }
  }
  return m;
}

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const Polynomial& p) {
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (sgn(p[k]) == 0) continue;
    if (!s.empty()) s += sgn(p[k]) > 0 ? " + " : " - ";
    else if (sgn(p[k]) < 0) s += "-";
    Rational m = abs(p[k]);
    if (m != 1 || k == 0) s += lext::to_string(m);
    if (k >= 1) s += (m != 1 ? "*" : "") + std::string("l");
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (sgn(a(row, c)) != 0) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e != 0; e >>= 1) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// Primes just below 2^62, generated on demand.
u64 nth_prime(std::size_t k) {
  static std::vector<u64> primes;
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[k];
}

// Coefficients (low to high) of det(μ·Id − A) mod p, via Hessenberg reduction.
std::vector<u64> char_poly_mod(std::vector<u64> h, std::size_t n, u64 p) {
  auto at = [&](std::size_t r, std::size_t c) -> u64& { return h[r * n + c]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, m));
    }
    u64 inv = pow_mod(at(m, m - 1), p - 2, p);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 u = mul_mod(at(i, m - 1), inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        at(i, c) = (at(i, c) + p - mul_mod(u, at(m, c), p)) % p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        at(r, m) = (at(r, m) + mul_mod(u, at(r, i), p)) % p;
      }
    }
  }
  // p_k(μ) = (μ − h_kk) p_{k−1} − Σ_{i<k} h_ik (∏_{j=i+1..k} h_{j,j−1}) p_{i−1}
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    const auto& prev = poly[k - 1];
    u64 hkk = at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mul_mod(hkk, prev[d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = mul_mod(t, at(i, i - 1), p);
      if (t == 0) break;
      u64 f = mul_mod(at(i - 1, k - 1), t, p);
      if (f == 0) continue;
      const auto& q = poly[i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = (cur[d] + p - mul_mod(f, q[d], p)) % p;
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

struct IntegerScaling {
  mpz_class denominator;       // D with D·M integral
  std::vector<mpz_class> a;    // D·M, row-major
};

IntegerScaling scale_to_integers(const RationalMatrix& m) {
  IntegerScaling s;
  s.denominator = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(),
              m(r, c).get_den_mpz_t());
    }
  }
  s.a.resize(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      s.a[r * m.cols() + c] = m(r, c).get_num() * (s.denominator / m(r, c).get_den());
    }
  }
  return s;
}

// det(A − μ·Id) for an integer matrix, exact.
std::vector<mpz_class> integer_char_poly(const std::vector<mpz_class>& a, std::size_t n) {
  // Every eigenvalue is bounded by the max absolute column sum R, so each
  // coefficient is at most (R+1)^n in absolute value.
  mpz_class r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    mpz_class s = 0;
    for (std::size_t k = 0; k < n; ++k) s += abs(a[k * n + c]);
    if (s > r) r = s;
  }
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), mpz_class(r + 1).get_mpz_t(), n);
  mpz_class need = 2 * bound + 1;

  std::vector<mpz_class> value(n + 1, 0);
  mpz_class modulus = 1;
  std::vector<u64> reduced(n * n);
  for (std::size_t k = 0; modulus <= need; ++k) {
    u64 p = nth_prime(k);
    for (std::size_t e = 0; e < n * n; ++e) reduced[e] = mpz_fdiv_ui(a[e].get_mpz_t(), p);
    std::vector<u64> res = char_poly_mod(reduced, n, p);
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t d = 0; d <= n; ++d) {
      mpz_class rz;
      mpz_import(rz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &res[d]);
      mpz_class delta = rz - value[d];
      delta = (delta * minv) % pz;
      if (delta < 0) delta += pz;
      value[d] += modulus * delta;
    }
    modulus *= pz;
  }
  mpz_class half = modulus / 2;
  for (auto& v : value) {
    if (v > half) v -= modulus;
  }
  // det(A − μ) = (−1)^n det(μ − A)
  if (n % 2 == 1) {
    for (auto& v : value) v = -v;
  }
  return value;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a).size();
}

std::vector<Rational> kernel_vector(const RationalMatrix& m) {
  // Fraction-free (Bareiss) echelon form of the integer matrix D·M, which has
  // the same kernel, followed by rational back substitution.
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerScaling s = scale_to_integers(m);
  auto a = [&](std::size_t r, std::size_t c) -> mpz_class& { return s.a[r * cols + c]; };
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(a(p, col)) == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a(p, c), a(row, c));
    }
    const mpz_class& piv = a(row, col);
    for (std::size_t r = row + 1; r < rows; ++r) {
      const mpz_class lead = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = piv * a(r, c);
        if (sgn(lead) != 0 && sgn(a(row, c)) != 0) v -= lead * a(row, c);
        if (prev != 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(r, c) = std::move(v);
      }
      a(r, col) = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  std::size_t nullity = cols - pivots.size();
  if (nullity != 1) {
    throw Error("linform.kernel_dimension",
                "null space has dimension " + std::to_string(nullity) + ", expected 1");
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(cols, 0);
  v[free_col] = 1;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    Rational acc = 0;
    for (std::size_t c = pivots[r] + 1; c < cols; ++c) {
      if (sgn(a(r, c)) != 0 && sgn(v[c]) != 0) acc += Rational(a(r, c)) * v[c];
    }
    v[pivots[r]] = -acc / Rational(a(r, pivots[r]));
  }
  if (sgn(v[0]) == 0) {
    throw Error("linform.kernel_normalization", "null vector has a zero first entry");
  }
  Rational first = v[0];
  for (auto& x : v) x /= first;
  for (const auto& x : m * v) {
    if (sgn(x) != 0) throw std::logic_error("kernel_vector: M v != 0 after elimination");
  }
  return v;
}

Polynomial char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error("linform.square", "char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {Rational(1)};
  IntegerScaling s = scale_to_integers(m);
  std::vector<mpz_class> a = integer_char_poly(s.a, n);
  // det(M − λ) = D^{-n} det(A − Dλ): coefficient of λ^k is a_k D^{k−n}.
  Polynomial out(n + 1);
  mpz_class dpow = 1;
  std::vector<mpz_class> powers(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    powers[k] = dpow;
    dpow *= s.denominator;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = Rational(a[k], powers[n - k]);
    out[k].canonicalize();
  }
  return out;
}

Spectrum normalized(Spectrum s) {
  std::map<LinearForm, std::uint64_t> merged;
  int nvars = 0;
  for (auto& e : s) {
    nvars = std::max(nvars, e.eigenvalue.num_vars());
  }
  for (auto& e : s) {
    if (e.multiplicity == 0) continue;
    LinearForm f(nvars);
    f += e.eigenvalue;
    merged[f] += e.multiplicity;
  }
  Spectrum out;
  for (auto& [f, m] : merged) out.push_back({f, m});
  return out;
}

std::uint64_t total_multiplicity(const Spectrum& s) {
  std::uint64_t t = 0;
  for (const auto& e : s) t += e.multiplicity;
  return t;
}

Polynomial predicted_char_poly(const Spectrum& s, const RationalAssignment& v) {
  Polynomial p{Rational(1)};
  for (const auto& e : s) {
    Polynomial factor{-e.eigenvalue.evaluate(v), Rational(1)};
    for (std::uint64_t k = 0; k < e.multiplicity; ++k) p = multiply(p, factor);
  }
  if (total_multiplicity(s) % 2 == 1) {
    for (auto& c : p) c = -c;
  }
  return p;
}

bool spectrum_matches(const RationalMatrix& m, const Spectrum& predicted,
                      const RationalAssignment& v) {
  if (total_multiplicity(predicted) != m.rows()) return false;
  return trimmed(char_poly(m)) == trimmed(predicted_char_poly(predicted, v));
}

RootSplit split_rational_eigenvalues(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  IntegerScaling s = scale_to_integers(m);
  std::vector<mpz_class> poly = integer_char_poly(s.a, n);  // det(A − μ), integer, leading ±1
  mpz_class bound = 0;
  for (std::size_t c = 0; c < n; ++c) {
    mpz_class col = 0;
    for (std::size_t k = 0; k < n; ++k) col += abs(s.a[k * n + c]);
    if (col > bound) bound = col;
  }
  if (bound > 50'000'000) {
    throw Error("linform.root_search", "eigenvalue bound too large for integer root search");
  }
  RootSplit out;
  const u64 p = nth_prime(0);
  std::vector<u64> poly_mod;
  auto reduce = [&] {
    poly_mod.resize(poly.size());
    for (std::size_t d = 0; d < poly.size(); ++d) poly_mod[d] = mpz_fdiv_ui(poly[d].get_mpz_t(), p);
  };
  auto vanishes_mod_p = [&](long mu) {
    u64 x = mu >= 0 ? static_cast<u64>(mu) % p : p - static_cast<u64>(-mu) % p;
    u64 acc = 0;
    for (auto it = poly_mod.rbegin(); it != poly_mod.rend(); ++it) acc = (mul_mod(acc, x, p) + *it) % p;
    return acc == 0;
  };
  reduce();
  const long lim = bound.get_si();
  for (long mu = -lim; mu <= lim && poly.size() > 1; ++mu) {
    while (poly.size() > 1 && vanishes_mod_p(mu)) {
      // Exact synthetic division by (μ − mu).
      std::vector<mpz_class> q(poly.size() - 1);
      mpz_class carry = 0;
      for (std::size_t d = poly.size(); d-- > 1;) {
        carry = poly[d] + carry * mu;
        q[d - 1] = carry;
      }
      if (poly[0] + carry * mu != 0) break;
      poly = std::move(q);
      reduce();
      Rational root(mpz_class(mu), s.denominator);
      root.canonicalize();
      if (!out.roots.empty() && out.roots.back().first == root) {
        ++out.roots.back().second;
      } else {
        out.roots.emplace_back(root, 1);
      }
    }
  }
  // Residual in λ: q(Dλ), made monic.
  Polynomial res(poly.size());
  mpz_class dpow = 1;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    res[k] = Rational(poly[k] * dpow);
    dpow *= s.denominator;
  }
  Rational lead = res.back();
  for (auto& c : res) c /= lead;
  out.residual = res;
  return out;
}

}  // namespace lext
