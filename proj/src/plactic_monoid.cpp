#include "plactic/plactic_monoid.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "plactic/error.hpp"

namespace plactic {

std::set<Word> knuth_neighbors(Word const& word) {
  std::set<Word> result;
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    Letter const a = word[i], b = word[i + 1], c = word[i + 2];
    // xzy <-> zxy, x <= y < z: the first two letters swap.
    if ((a <= c && c < b) || (b <= c && c < a)) {
      Word next = word;
      std::swap(next[i], next[i + 1]);
      result.insert(std::move(next));
    }
    // yxz <-> yzx, x < y <= z: the last two letters swap.
    if ((b < a && a <= c) || (c < a && a <= b)) {
      Word next = word;
      std::swap(next[i + 1], next[i + 2]);
      result.insert(std::move(next));
    }
  }
  return result;
}

std::set<Word> knuth_class(Word const& word, std::size_t max_length) {
  if (word.size() > max_length) {
    throw ResourceError("Knuth closure capped at words of length " +
                        std::to_string(max_length));
  }
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : knuth_neighbors(current)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

bool plactic_equal(Word const& lhs, Word const& rhs) {
  return tableau_of_word(lhs) == tableau_of_word(rhs);
}

bool plactic_equal_by_closure(Word const& lhs, Word const& rhs,
                              std::size_t max_length) {
  if (lhs.size() != rhs.size()) return false;
  return knuth_class(lhs, max_length).count(rhs) > 0;
}

std::size_t longest_nondec_subword(Word const& word) {
  // best[i]: longest non-decreasing subword ending at position i.
  std::vector<std::size_t> best(word.size(), 1);
  std::size_t longest = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (word[j] <= word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    longest = std::max(longest, best[i]);
  }
  return longest;
}

Word longest_column(Letter n) {
  Word column;
  for (Letter a = n; a >= 1; --a) column.push_back(a);
  return column;
}

bool is_central(Word const& word, Letter n) {
  if (n == 0) throw InputError("alphabet bound must be positive");
  validate_letters(word, n);
  Tableau const t = tableau_of_word(word);
  for (Letter a = 1; a <= n; ++a) {
    Tableau const single = tableau_of_word({a});
    if (product(t, single) != product(single, t)) return false;
  }
  return true;
}

bool is_power_of_longest_column(Tableau const& tableau, Letter n) {
  if (tableau.empty()) return true;
  if (tableau.row_count() != n) return false;
  std::size_t const width = tableau.column_count();
  for (std::size_t r = 0; r < n; ++r) {
    Row const& row = tableau.rows()[r];
    Letter const expected = n - static_cast<Letter>(r);
    if (row.size() != width) return false;
    for (Letter a : row.letters()) {
      if (a != expected) return false;
    }
  }
  return true;
}

}  // namespace plactic
