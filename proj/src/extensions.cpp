#include "lext/extensions.hpp"

#include <algorithm>
#include <numeric>

namespace lext {

namespace {

void check_length(const Poset& poset, std::span<const int> word) {
  if (static_cast<int>(word.size()) != poset.size()) {
    throw Error("extensions.word_length", "word of length " + std::to_string(word.size()) +
                                              " for a poset of size " +
                                              std::to_string(poset.size()));
  }
}

void check_range(const char* invariant, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw Error(invariant, std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                               std::to_string(hi));
  }
}

// In-place bubble of position j (1-based) to the right: τ_j τ_{j+1} ⋯ τ_{n-1}.
void promote_in_place(const Poset& poset, Word& w, int j) {
  const int n = static_cast<int>(w.size());
  for (int i = j; i < n; ++i) {
    if (!poset.comparable(w[i - 1], w[i])) std::swap(w[i - 1], w[i]);
  }
}

int position_of(std::span<const int> word, int letter) {
  auto it = std::find(word.begin(), word.end(), letter);
  if (it == word.end()) {
    throw Error("extensions.letter_range", "letter " + std::to_string(letter) + " not in word");
  }
  return static_cast<int>(it - word.begin()) + 1;
}

}  // namespace

bool is_linear_extension(const Poset& poset, std::span<const int> word) {
  const int n = poset.size();
  if (static_cast<int>(word.size()) != n) return false;
  std::vector<int> pos(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    int a = word[k];
    if (a < 1 || a > n || pos[a] != 0) return false;
    pos[a] = k + 1;
  }
  for (auto [a, b] : poset.covers()) {
    if (pos[a] > pos[b]) return false;
  }
  return true;
}

std::string word_to_string(std::span<const int> word, bool compact) {
  bool single_digits = std::all_of(word.begin(), word.end(), [](int a) { return a < 10; });
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && !(compact && single_digits)) s += ' ';
    s += std::to_string(word[k]);
  }
  return s;
}

ExtensionIndex::ExtensionIndex(Poset poset, std::vector<Word> words)
    : poset_(std::move(poset)), words_(std::move(words)) {}

std::optional<std::size_t> ExtensionIndex::find(std::span<const int> word) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), word,
                             [](const Word& a, std::span<const int> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                   b.end());
                             });
  if (it == words_.end() || !std::equal(it->begin(), it->end(), word.begin(), word.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t ExtensionIndex::index_of(std::span<const int> word) const {
  auto k = find(word);
  if (!k) {
    throw Error("extensions.membership", word_to_string(word) + " is not a linear extension");
  }
  return *k;
}

void for_each_extension(const Poset& poset,
                        const std::function<void(std::span<const int>)>& visit) {
  const int n = poset.size();
  std::vector<std::uint64_t> below(n);
  for (int a = 1; a <= n; ++a) below[a - 1] = poset.down_set(a).mask() & ~(std::uint64_t{1} << (a - 1));
  Word w(n);
  auto rec = [&](auto& self, int depth, std::uint64_t placed) -> void {
    if (depth == n) {
      visit(w);
      return;
    }
    for (int a = 0; a < n; ++a) {
      std::uint64_t bit = std::uint64_t{1} << a;
      if ((placed & bit) != 0 || (below[a] & ~placed) != 0) continue;
      w[depth] = a + 1;
      self(self, depth + 1, placed | bit);
    }
  };
  rec(rec, 0, 0);
}

ExtensionIndex enumerate_extensions(const Poset& poset) {
  if (!poset.is_naturally_labeled()) {
    throw Error("extensions.natural_labeling",
                "the identity is not a linear extension; relabel the poset naturally");
  }
  std::vector<Word> words;
  for_each_extension(poset, [&](std::span<const int> w) { words.emplace_back(w.begin(), w.end()); });
  return ExtensionIndex(poset, std::move(words));
}

std::uint64_t count_extensions(const Poset& poset) {
  std::uint64_t count = 0;
  for_each_extension(poset, [&](std::span<const int>) { ++count; });
  return count;
}

Word tau(const Poset& poset, std::span<const int> word, int i) {
  check_length(poset, word);
  check_range("extensions.tau_index", i, 1, poset.size() - 1);
  Word w(word.begin(), word.end());
  if (!poset.comparable(w[i - 1], w[i])) std::swap(w[i - 1], w[i]);
  return w;
}

Word promotion(const Poset& poset, std::span<const int> word, int j) {
  check_length(poset, word);
  check_range("extensions.promotion_seed", j, 1, poset.size());
  Word w(word.begin(), word.end());
  promote_in_place(poset, w, j);
  return w;
}

Word promotion_by_sliding(const Poset& poset, std::span<const int> word, int j) {
  check_length(poset, word);
  const int n = poset.size();
  check_range("extensions.promotion_seed", j, 1, n);
  // label[a] = position of element a; the extension places label k on element word[k].
  std::vector<int> label(n + 1);
  for (int k = 0; k < n; ++k) label[word[k]] = k + 1;
  int hole = word[j - 1];
  for (;;) {
    int next = 0;
    for (int c : poset.upper_covers(hole).members()) {
      if (next == 0 || label[c] < label[next]) next = c;
    }
    if (next == 0) break;
    label[hole] = label[next];
    hole = next;
  }
  label[hole] = n + 1;
  for (int a = 1; a <= n; ++a) {
    if (label[a] > j) --label[a];
  }
  Word w(n);
  for (int a = 1; a <= n; ++a) w[label[a] - 1] = a;
  return w;
}

Word promotion_hat(const Poset& poset, std::span<const int> word, int letter) {
  check_length(poset, word);
  check_range("extensions.letter_range", letter, 1, poset.size());
  Word w(word.begin(), word.end());
  promote_in_place(poset, w, position_of(word, letter));
  return w;
}

Word promotion_hat_forest(const Poset& poset, std::span<const int> word, int letter) {
  check_length(poset, word);
  check_range("extensions.letter_range", letter, 1, poset.size());
  if (!poset.is_rooted_forest()) {
    throw Error("extensions.rooted_forest", "move-and-reorder form needs a rooted forest");
  }
  Word w(word.begin(), word.end());
  int pos = position_of(word, letter);
  w.erase(w.begin() + (pos - 1));
  w.push_back(letter);
  // In a rooted forest the letters above `letter` form a chain.
  std::vector<int> chain = poset.up_set(letter).members();
  std::sort(chain.begin(), chain.end(), [&](int a, int b) { return poset.less(a, b); });
  LabelSet in_chain = poset.up_set(letter);
  std::size_t next = 0;
  for (int& a : w) {
    if (in_chain.contains(a)) a = chain[next++];
  }
  return w;
}

std::string Operator::to_string() const {
  switch (kind) {
    case OperatorKind::Tau:
      return "tau_" + std::to_string(index);
    case OperatorKind::Promotion:
      return "partial_" + std::to_string(index);
    case OperatorKind::PromotionHat:
      return "partial_hat_" + std::to_string(index);
  }
  return "?";
}

Word apply(const Poset& poset, std::span<const int> word, Operator op) {
  switch (op.kind) {
    case OperatorKind::Tau:
      return tau(poset, word, op.index);
    case OperatorKind::Promotion:
      return promotion(poset, word, op.index);
    case OperatorKind::PromotionHat:
      return promotion_hat(poset, word, op.index);
  }
  return Word(word.begin(), word.end());
}

Table operator_table(const ExtensionIndex& ext, Operator op) {
  Table t(ext.size());
  for (std::size_t k = 0; k < ext.size(); ++k) {
    t[k] = static_cast<std::uint32_t>(ext.index_of(apply(ext.poset(), ext[k], op)));
  }
  return t;
}

Table then(const Table& first, const Table& second) {
  Table t(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) t[k] = second[first[k]];
  return t;
}

Table identity_table(std::size_t size) {
  Table t(size);
  std::iota(t.begin(), t.end(), 0u);
  return t;
}

bool is_bijection(const Table& table) {
  std::vector<bool> hit(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

mpz_class permutation_order(const Table& table) {
  if (!is_bijection(table)) {
    throw Error("extensions.bijection", "operator is not a permutation of L(P)");
  }
  std::vector<bool> done(table.size(), false);
  mpz_class order = 1;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (done[k]) continue;
    unsigned long len = 0;
    for (std::size_t c = k; !done[c]; c = table[c]) {
      done[c] = true;
      ++len;
    }
    mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), len);
  }
  return order;
}

mpz_class operator_order(const ExtensionIndex& ext, Operator op) {
  return permutation_order(operator_table(ext, op));
}

}  // namespace lext
