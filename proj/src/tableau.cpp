#include "plactic/tableau.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "plactic/error.hpp"

namespace plactic {

Content content_of(Word const& word) {
  Content counts;
  for (Letter a : word) {
    if (a == 0) throw InputError("letter 0 is not allowed");
    if (counts.size() < a) counts.resize(a, 0);
    ++counts[a - 1];
  }
  return counts;
}

void validate_letters(Word const& word, Letter bound) {
  for (Letter a : word) {
    if (a == 0) throw InputError("letters are positive integers");
    if (bound != 0 && a > bound) {
      throw InputError("letter " + std::to_string(a) +
                       " exceeds alphabet bound " + std::to_string(bound));
    }
  }
}

Row::Row(Word letters) : letters_(std::move(letters)) {
  validate_letters(letters_);
  if (!std::is_sorted(letters_.begin(), letters_.end())) {
    throw InputError("row letters must be non-decreasing");
  }
}

Column::Column(Word letters) : letters_(std::move(letters)) {
  validate_letters(letters_);
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1] <= letters_[i]) {
      throw InputError("column letters must be strictly decreasing");
    }
  }
}

Column Column::from_mask(Mask mask) {
  Word letters;
  for (Letter a = 32; a >= 1; --a) {
    if (mask >> (a - 1) & 1u) letters.push_back(a);
  }
  Column column;
  column.letters_ = std::move(letters);
  return column;
}

Column::Mask Column::mask() const {
  Mask m = 0;
  for (Letter a : letters_) {
    if (a > 32) throw InputError("column mask needs letters <= 32");
    m |= Mask{1} << (a - 1);
  }
  return m;
}

bool row_dominates(Row const& u, Row const& v) {
  if (u.size() > v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > v[i])) return false;
  }
  return true;
}

bool row_dominates_weakly(Row const& u, Row const& v) {
  if (u.size() > v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] >= v[i])) return false;
  }
  return true;
}

bool column_precedes(Column const& u, Column const& v) {
  if (u.size() < v.size()) return false;
  std::size_t const shift = u.size() - v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(u[i + shift] <= v[i])) return false;
  }
  return true;
}

bool order_rel(OrderKind kind, Word const& u, Word const& v) {
  switch (kind) {
    case OrderKind::RowStrict:
      return row_dominates(Row(u), Row(v));
    case OrderKind::RowWeak:
      return row_dominates_weakly(Row(u), Row(v));
    case OrderKind::Column:
      return column_precedes(Column(u), Column(v));
  }
  return false;
}

namespace {

bool is_submultiset(Word sub, Word word) {
  std::sort(sub.begin(), sub.end());
  std::sort(word.begin(), word.end());
  return std::includes(word.begin(), word.end(), sub.begin(), sub.end());
}

}  // namespace

bool is_subrow(Row const& sub, Row const& row) {
  return is_submultiset(sub.letters(), row.letters());
}

bool is_subcolumn(Column const& sub, Column const& column) {
  return is_submultiset(sub.letters(), column.letters());
}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw InputError("tableau rows must be non-empty");
    if (i > 0 && !row_dominates(rows_[i - 1], rows_[i])) {
      throw InputError("row " + std::to_string(i) +
                       " does not strictly dominate the row below it");
    }
  }
}

Tableau Tableau::from_row(Row const& row) {
  if (row.empty()) return {};
  return Tableau({row}, Unchecked{});
}

Tableau Tableau::from_column(Column const& column) {
  std::vector<Row> rows;
  for (Letter a : column.letters()) rows.emplace_back(Word{a});
  return Tableau(std::move(rows), Unchecked{});
}

Tableau Tableau::from_columns(std::vector<Column> const& columns) {
  std::size_t height = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty()) throw InputError("tableau columns must be non-empty");
    if (j > 0 && columns[j].size() > columns[j - 1].size()) {
      throw InputError("column lengths must weakly decrease");
    }
    height = std::max(height, columns[j].size());
  }
  // Row r counted from the bottom holds entry (size - 1 - r) of each column
  // tall enough.
  std::vector<Row> rows;
  for (std::size_t level = height; level-- > 0;) {
    Word letters;
    for (auto const& c : columns) {
      if (c.size() > level) letters.push_back(c[c.size() - 1 - level]);
    }
    rows.emplace_back(std::move(letters));
  }
  return Tableau(std::move(rows));
}

std::vector<Column> Tableau::columns() const {
  std::vector<Column> result;
  std::size_t const width = column_count();
  result.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    Word letters;
    for (auto const& row : rows_) {
      if (row.size() > j) letters.push_back(row[j]);
    }
    result.emplace_back(std::move(letters));
  }
  return result;
}

std::size_t Tableau::cell_count() const noexcept {
  std::size_t total = 0;
  for (auto const& row : rows_) total += row.size();
  return total;
}

Shape Tableau::shape() const {
  Shape lengths;
  for (auto const& row : rows_) lengths.push_back(row.size());
  return lengths;
}

Word Tableau::reading(Reading mode) const {
  Word word;
  word.reserve(cell_count());
  if (mode == Reading::Rows) {
    for (auto const& row : rows_) {
      word.insert(word.end(), row.letters().begin(), row.letters().end());
    }
  } else {
    for (auto const& column : columns()) {
      word.insert(word.end(), column.letters().begin(), column.letters().end());
    }
  }
  return word;
}

Tableau insert_right(Tableau const& tableau, Letter x) {
  if (x == 0) throw InputError("letters are positive integers");
  std::vector<Word> rows;
  rows.reserve(tableau.row_count() + 1);
  for (auto const& row : tableau.rows()) rows.push_back(row.letters());

  std::size_t level = rows.size();
  while (true) {
    if (level == 0) {
      rows.insert(rows.begin(), Word{x});
      break;
    }
    Word& row = rows[level - 1];
    auto bumped = std::upper_bound(row.begin(), row.end(), x);
    if (bumped == row.end()) {
      row.push_back(x);
      break;
    }
    std::swap(*bumped, x);
    --level;
  }

  std::vector<Row> result;
  result.reserve(rows.size());
  for (auto& r : rows) result.emplace_back(std::move(r));
  return Tableau(std::move(result), Tableau::Unchecked{});
}

Tableau insert_left(Letter x, Tableau const& tableau) {
  if (x == 0) throw InputError("letters are positive integers");
  // Columns stored bottom to top (increasing) so that the top is back().
  std::vector<Word> columns;
  for (auto const& c : tableau.columns()) {
    columns.emplace_back(c.letters().rbegin(), c.letters().rend());
  }
  for (std::size_t j = 0;; ++j) {
    if (j == columns.size()) {
      columns.push_back(Word{x});
      break;
    }
    Word& column = columns[j];
    if (x > column.back()) {
      column.push_back(x);
      break;
    }
    auto bumped = std::lower_bound(column.begin(), column.end(), x);
    std::swap(*bumped, x);
  }

  std::size_t const height = columns.front().size();
  std::vector<Row> rows;
  for (std::size_t level = height; level-- > 0;) {
    Word letters;
    for (auto const& c : columns) {
      if (c.size() > level) letters.push_back(c[level]);
    }
    rows.emplace_back(std::move(letters));
  }
  return Tableau(std::move(rows), Tableau::Unchecked{});
}

Tableau tableau_of_word(Word const& word) {
  Tableau result;
  for (Letter x : word) result = insert_right(result, x);
  return result;
}

Tableau product(Tableau const& lhs, Tableau const& rhs) {
  Tableau result = lhs;
  for (Letter x : rhs.reading(Reading::Rows)) result = insert_right(result, x);
  return result;
}

Tableau fill_shape(Word const& word, Shape const& shape) {
  std::size_t total = 0;
  for (auto len : shape) total += len;
  if (total != word.size()) {
    throw InputError("word length does not match the shape");
  }
  std::vector<Row> rows;
  auto it = word.begin();
  for (auto len : shape) {
    rows.emplace_back(Word(it, it + static_cast<std::ptrdiff_t>(len)));
    it += static_cast<std::ptrdiff_t>(len);
  }
  return Tableau(std::move(rows));
}

std::vector<Word> words_of_length(Letter n, std::size_t length) {
  std::vector<Word> result;
  if (n == 0) {
    if (length == 0) result.emplace_back();
    return result;
  }
  Word w(length, 1);
  while (true) {
    result.push_back(w);
    std::size_t pos = length;
    while (pos > 0 && w[pos - 1] == n) {
      w[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return result;
}

std::vector<Word> words_up_to(Letter n, std::size_t max_length) {
  std::vector<Word> result;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto words = words_of_length(n, len);
    result.insert(result.end(), words.begin(), words.end());
  }
  return result;
}

std::vector<Tableau> tableaux_from_words(Letter n, std::size_t max_length) {
  std::set<Tableau> seen;
  for (auto const& w : words_up_to(n, max_length)) seen.insert(tableau_of_word(w));
  return {seen.begin(), seen.end()};
}

}  // namespace plactic
