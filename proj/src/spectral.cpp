#include "lext/spectral.hpp"

#include <algorithm>
#include <unordered_map>

#include "lext/error.hpp"

namespace lext {

std::vector<std::int64_t> mobius_by_inclusion(std::span<const LabelSet> sets) {
  const std::size_t n = sets.size();
  std::vector<std::int64_t> mu(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    mu[x * n + x] = 1;
    // Supersets of x in order; each μ(x, y) closes the sum over [x, y).
    std::vector<std::size_t> above;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!sets[x].is_subset_of(sets[y])) continue;
      std::int64_t s = 1;
      for (std::size_t z : above) {
        if (sets[z].is_subset_of(sets[y])) s += mu[x * n + z];
      }
      mu[x * n + y] = -s;
      above.push_back(y);
    }
  }
  return mu;
}

UpperSetLattice UpperSetLattice::build(const Poset& poset) {
  UpperSetLattice l;
  l.poset_ = poset;
  l.elements_ = poset.upper_sets();
  const std::size_t n = l.elements_.size();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[l.elements_[k].mask()] = k;
  l.covers_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int a : l.elements_[k].complement(poset.size()).members()) {
      LabelSet bigger = l.elements_[k];
      bigger.insert(a);
      auto it = index.find(bigger.mask());
      if (it != index.end()) l.covers_[k].push_back(it->second);
    }
  }
  l.f_.assign(n, 0);
  l.f_[n - 1] = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    for (std::size_t c : l.covers_[k]) l.f_[k] += l.f_[c];
  }
  l.mobius_ = mobius_by_inclusion(l.elements_);
  return l;
}

std::size_t UpperSetLattice::index_of(LabelSet s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s, canonical_less);
  if (it == elements_.end() || *it != s) {
    throw Error("spectral.upper_set", s.to_string() + " is not an upper set");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

DerangementTable derangement_numbers(const UpperSetLattice& lattice) {
  DerangementTable t;
  t.upper = lattice.elements();
  t.d.assign(lattice.size(), 0);
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    for (std::size_t y = x; y < lattice.size(); ++y) {
      std::int64_t mu = lattice.mobius(x, y);
      if (mu != 0) t.d[x] += mpz_class(static_cast<long>(mu)) * lattice.chain_count(y);
    }
  }
  if (lattice.poset().is_union_of_chains()) {
    for (auto& [s, count] : chain_derangement_counts(lattice.poset())) {
      t.lower.push_back(s);
      t.dfrak.push_back(count);
    }
  } else {
    t.lower = lattice.poset().lower_sets();
  }
  return t;
}

std::vector<Word> poset_derangements(const Poset& poset) {
  std::vector<Word> out;
  for (const Word& w : enumerate_extensions(poset)) {
    bool fixed = false;
    for (std::size_t i = 0; i < w.size() && !fixed; ++i) fixed = w[i] == static_cast<int>(i) + 1;
    if (!fixed) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> chains_of(const Poset& poset) {
  if (!poset.is_union_of_chains()) {
    throw Error("spectral.union_of_chains", "poset is not a disjoint union of chains");
  }
  std::vector<std::vector<int>> chains;
  for (int a = 1; a <= poset.size(); ++a) {
    if (!poset.lower_covers(a).empty()) continue;
    std::vector<int> c{a};
    while (!poset.upper_covers(c.back()).empty()) c.push_back(poset.upper_covers(c.back()).members()[0]);
    chains.push_back(std::move(c));
  }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return chains;
}

Poset relabel_consecutively(const Poset& poset) {
  std::vector<int> lengths;
  for (const auto& c : chains_of(poset)) lengths.push_back(static_cast<int>(c.size()));
  return Poset::chain_union(lengths);
}

Spectrum predict_spectrum_forest(const Poset& poset) {
  if (!poset.is_rooted_forest()) {
    throw Error("spectral.rooted_forest", "spectrum prediction needs a rooted forest");
  }
  UpperSetLattice lattice = UpperSetLattice::build(poset);
  DerangementTable t = derangement_numbers(lattice);
  Spectrum s;
  for (std::size_t k = 0; k < t.upper.size(); ++k) {
    if (t.d[k] < 0) {
      throw Error("spectral.nonnegative", "d" + t.upper[k].to_string() + " is negative");
    }
    s.push_back({LinearForm::sum_of(poset.size(), t.upper[k]), t.d[k].get_ui()});
  }
  return s;
}

std::vector<std::pair<LabelSet, std::uint64_t>> chain_derangement_counts(const Poset& poset) {
  chains_of(poset);  // validates the hypothesis
  std::vector<std::pair<LabelSet, std::uint64_t>> out;
  for (LabelSet s : poset.lower_sets()) {
    if (s.empty()) continue;
    Poset sub = relabel_consecutively(poset.restrict(s));
    out.emplace_back(s, poset_derangements(sub).size());
  }
  return out;
}

Spectrum predict_spectrum_chains(const Poset& poset) {
  const int n = poset.size();
  Spectrum s{{LinearForm(n), 1}};
  for (auto& [lower, count] : chain_derangement_counts(poset)) {
    s.push_back({-LinearForm::sum_of(n, lower), count});
  }
  return s;
}

ChainWordCounts chain_word_identity(const Poset& poset, std::span<const int> chain_indices) {
  auto chains = chains_of(poset);
  LabelSet tops;
  std::vector<LabelSet> chosen;
  for (int i : chain_indices) {
    if (i < 1 || i > static_cast<int>(chains.size())) {
      throw Error("spectral.chain_index", "chain " + std::to_string(i) + " does not exist");
    }
    tops.insert(chains[i - 1].back());
    chosen.push_back(LabelSet::of(std::span<const int>(chains[i - 1])));
  }
  ChainWordCounts out{};
  // f([S, 1̂]) directly over the upper sets containing S.
  {
    std::vector<LabelSet> ups = poset.upper_sets();
    std::unordered_map<std::uint64_t, mpz_class> f;
    for (std::size_t k = ups.size(); k-- > 0;) {
      LabelSet u = ups[k];
      if (!tops.is_subset_of(u)) continue;
      if (u == poset.labels()) {
        f[u.mask()] = 1;
        continue;
      }
      mpz_class total = 0;
      for (int a : u.complement(poset.size()).members()) {
        LabelSet b = u;
        b.insert(a);
        auto it = f.find(b.mask());
        if (it != f.end()) total += it->second;
      }
      f[u.mask()] = total;
    }
    out.lattice = f.at(tops.mask());
  }
  for_each_extension(poset, [&](std::span<const int> w) {
    for (LabelSet c : chosen) {
      bool hit = false;
      for (int a : c.members()) hit = hit || w[a - 1] == a;
      if (!hit) return;
    }
    ++out.direct;
  });
  return out;
}

}  // namespace lext
