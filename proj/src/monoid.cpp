#include "lext/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "lext/error.hpp"
#include "lext/spectral.hpp"

namespace lext {

namespace {

std::string key_of(const Table& t) {
  return std::string(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(t[0]));
}

}  // namespace

std::string MonoidElement::word_string() const {
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "G" + std::to_string(i);
  return s;
}

Table compose(const Table& x, const Table& y) {
  Table out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = x[y[k]];
  return out;
}

std::optional<std::size_t> PromotionMonoid::find(const Table& t) const {
  auto it = lookup_.find(key_of(t));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t PromotionMonoid::multiply(std::size_t x, std::size_t y) const {
  auto k = find(compose(elements_[x].table, elements_[y].table));
  if (!k) throw std::logic_error("monoid not closed under multiplication");
  return *k;
}

PromotionMonoid generate_monoid(const Poset& poset, std::size_t cap) {
  if (cap == 0) throw Error("monoid.cap", "element budget must be positive");
  PromotionMonoid m;
  m.ext_ = enumerate_extensions(poset);
  const int n = poset.size();
  std::vector<Table> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(operator_table(m.ext_, {OperatorKind::PromotionHat, i}));

  auto add = [&](Table t, std::vector<int> word) -> std::size_t {
    auto [it, inserted] = m.lookup_.try_emplace(key_of(t), m.elements_.size());
    if (inserted) {
      if (m.elements_.size() >= cap) {
        throw BudgetExceeded("monoid.budget", "more than " + std::to_string(cap) +
                                                  " elements in the promotion monoid");
      }
      m.elements_.push_back({std::move(t), std::move(word)});
    }
    return it->second;
  };

  add(identity_table(m.ext_.size()), {});
  for (std::size_t x = 0; x < m.elements_.size(); ++x) {
    std::vector<std::size_t> row(n);
    for (int i = 1; i <= n; ++i) {
      Table t = compose(m.elements_[x].table, gens[i - 1]);
      std::vector<int> w = m.elements_[x].word;
      w.push_back(i);
      row[i - 1] = add(std::move(t), std::move(w));
    }
    m.right_.push_back(std::move(row));
  }
  for (int i = 1; i <= n; ++i) m.generators_.push_back(*m.find(gens[i - 1]));
  m.left_.resize(m.elements_.size());
  for (std::size_t x = 0; x < m.elements_.size(); ++x) {
    for (int i = 1; i <= n; ++i) {
      m.left_[x].push_back(*m.find(compose(gens[i - 1], m.elements_[x].table)));
    }
  }
  return m;
}

RTrivialReport is_r_trivial(const PromotionMonoid& m) {
  // Iterative Tarjan over x → x·G_i.
  const std::size_t n = m.size();
  const int g = m.num_generators();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;
  std::vector<std::pair<std::size_t, int>> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == SIZE_MAX) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < g) {
        std::size_t w = m.right(v, ++next);
        if (index[w] == SIZE_MAX) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  RTrivialReport r;
  r.r_classes = components;
  r.r_trivial = components == n;
  if (!r.r_trivial) {
    std::vector<std::size_t> first(components, SIZE_MAX);
    for (std::size_t x = 0; x < n && !r.witness; ++x) {
      if (first[comp[x]] == SIZE_MAX) {
        first[comp[x]] = x;
      } else {
        r.witness = std::make_pair(first[comp[x]], x);
      }
    }
  }
  return r;
}

OmegaPower omega(const PromotionMonoid& m, std::size_t x) {
  std::map<std::size_t, std::size_t> seen;  // element → exponent
  std::size_t power = x;
  for (std::size_t k = 1;; ++k) {
    auto [it, inserted] = seen.emplace(power, k);
    if (!inserted) {
      std::size_t index = it->second, period = k - it->second;
      // x^j is idempotent for the unique multiple j of the period in [index, index + period).
      std::size_t j = ((index + period - 1) / period) * period;
      std::size_t e = x;
      for (std::size_t t = 1; t < j; ++t) e = m.multiply(e, x);
      return {e, index, period};
    }
    power = m.multiply(power, x);
  }
}

std::optional<std::pair<std::size_t, OmegaPower>> non_aperiodic_witness(const PromotionMonoid& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    OmegaPower w = omega(m, x);
    if (!w.aperiodic()) return std::make_pair(x, w);
  }
  return std::nullopt;
}

std::vector<std::uint32_t> image(const Table& x) {
  std::vector<std::uint32_t> im(x.begin(), x.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

RightFactor rfactor(const PromotionMonoid& m, std::size_t x) {
  const auto& ext = m.extensions();
  std::vector<std::uint32_t> im = image(m[x].table);
  const Word& first = ext[im.front()];
  std::size_t len = first.size();
  for (auto k : im) {
    const Word& w = ext[k];
    std::size_t common = 0;
    while (common < len && w[w.size() - 1 - common] == first[first.size() - 1 - common]) ++common;
    len = common;
  }
  RightFactor r;
  r.suffix.assign(first.end() - static_cast<std::ptrdiff_t>(len), first.end());
  r.letters = LabelSet::of(std::span<const int>(r.suffix));
  return r;
}

LabelSet SuppDes::join(LabelSet a, LabelSet b) const {
  LabelSet u = a | b;
  for (LabelSet s : lattice) {
    if (u.is_subset_of(s)) return s;  // canonical order puts the smallest first
  }
  throw std::logic_error("L^M has no upper bound for " + u.to_string());
}

bool SuppDes::contains(LabelSet s) const {
  return std::find(lattice.begin(), lattice.end(), s) != lattice.end();
}

SuppDes supp_des(const PromotionMonoid& m) {
  if (!is_r_trivial(m).r_trivial) {
    throw Error("monoid.r_trivial", "supp/des need an R-trivial monoid");
  }
  const std::size_t n = m.size();
  SuppDes s;
  s.supp.resize(n);
  s.des.resize(n);
  s.idempotent.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    s.idempotent[x] = m.multiply(x, x) == x;
    for (int i = 1; i <= m.num_generators(); ++i) {
      if (m.right(x, i) == x) s.des[x].insert(i);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (s.idempotent[x]) {
      LabelSet r = rfactor(m, x).letters;
      if (!s.contains(r)) s.lattice.push_back(r);
    }
  }
  sort_canonical(s.lattice);
  for (std::size_t x = 0; x < n; ++x) s.supp[x] = rfactor(m, omega(m, x).idempotent).letters;
  return s;
}

AxiomReport check_axioms(const PromotionMonoid& m, const SuppDes& s) {
  AxiomReport r;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && r.first_failure.empty()) r.first_failure = what;
    flag = false;
  };
  const std::size_t n = m.size();
  for (LabelSet l : s.lattice) {
    if (std::find(s.supp.begin(), s.supp.end(), l) == s.supp.end()) {
      fail(r.supp_surjective, "no element has support " + l.to_string());
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!s.idempotent[x]) continue;
    LabelSet rf = rfactor(m, x).letters;
    if (s.supp[x] != rf || s.des[x] != rf) {
      fail(r.idempotents, m[x].word_string() + ": supp, des and Rfactor differ");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = m.multiply(x, y);
      std::string pair = m[x].word_string() + " * " + m[y].word_string();
      if (s.supp[xy] != s.join(s.supp[x], s.supp[y])) {
        fail(r.supp_join_morphism, "supp(xy) != supp(x) v supp(y) for " + pair);
      }
      // In an R-trivial monoid xy R x means xy = x.
      bool below_des = s.supp[y].is_subset_of(s.des[x]);
      if (xy == x && !below_des) fail(r.r_order, "xy R x but supp(y) not in des(x) for " + pair);
      if (below_des && xy != x) fail(r.stabilizer, "supp(y) in des(x) but xy != x for " + pair);
    }
  }
  return r;
}

std::vector<std::size_t> chambers(const PromotionMonoid& m) {
  std::vector<std::size_t> out(m.extensions().size(), SIZE_MAX);
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto im = image(m[x].table);
    if (im.size() == 1) out[im[0]] = x;
  }
  for (auto c : out) {
    if (c == SIZE_MAX) throw std::logic_error("a constant map is missing from the monoid");
  }
  return out;
}

FormMatrix chamber_matrix(const PromotionMonoid& m) {
  const int n = m.num_generators();
  auto ch = chambers(m);
  FormMatrix t(ch.size(), n);
  for (std::size_t c = 0; c < ch.size(); ++c) {
    for (int i = 1; i <= n; ++i) {
      std::size_t d = image(m[m.left(ch[c], i)].table)[0];
      t(d, c) += LinearForm::variable(n, i);
    }
  }
  return t;
}

std::vector<RTrivialSpectrumEntry> rtrivial_spectrum_table(const PromotionMonoid& m,
                                                           const SuppDes& s) {
  const int n = m.num_generators();
  std::vector<RTrivialSpectrumEntry> out;
  for (LabelSet x : s.lattice) {
    RTrivialSpectrumEntry e{x, LinearForm(n), 0, 0};
    for (int i = 1; i <= n; ++i) {
      if (s.supp[m.generator(i)].is_subset_of(x)) e.eigenvalue += LinearForm::variable(n, i);
    }
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (s.idempotent[y] && s.supp[y] == x) {
        e.chambers = image(m[y].table).size();
        break;
      }
    }
    out.push_back(e);
  }
  auto mu = mobius_by_inclusion(s.lattice);
  const std::size_t k = s.lattice.size();
  for (std::size_t a = 0; a < k; ++a) {
    std::int64_t d = 0;
    for (std::size_t b = a; b < k; ++b) d += mu[a * k + b] * static_cast<std::int64_t>(out[b].chambers);
    out[a].multiplicity = d;
  }
  return out;
}

Spectrum rtrivial_spectrum(const PromotionMonoid& m, const SuppDes& s) {
  Spectrum out;
  for (const auto& e : rtrivial_spectrum_table(m, s)) {
    if (e.multiplicity < 0) {
      throw Error("monoid.multiplicity", "negative multiplicity for " + e.x.to_string());
    }
    out.push_back({e.eigenvalue, static_cast<std::uint64_t>(e.multiplicity)});
  }
  return out;
}

}  // namespace lext
