#pragma once

// Young tableaux over the ordered alphabet {1, 2, ...}, French convention:
// rows are listed top to bottom, the shortest row on top, and columns are
// read top to bottom (strictly decreasing).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace plactic {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Row lengths, top to bottom (weakly increasing).
using Shape = std::vector<std::size_t>;

/// Letter multiplicities: entry a-1 counts the letter a. Trailing zeros are
/// trimmed so that equal multisets compare equal.
using Content = std::vector<std::size_t>;

Content content_of(Word const& word);

/// Throws InputError if some letter is 0 or exceeds `bound` (when non-zero).
void validate_letters(Word const& word, Letter bound = 0);

/// A non-decreasing word. The empty row e_R is allowed.
class Row {
 public:
  Row() = default;
  explicit Row(Word letters);

  Word const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend auto operator<=>(Row const&, Row const&) = default;

 private:
  Word letters_;
};

/// A strictly decreasing word, read top to bottom. The empty column e_C is
/// allowed. Over a bounded alphabet a column is the same thing as a subset of
/// {1..n}; `mask()` and `from_mask()` implement that bijection (bit a-1 set
/// iff a is in the column).
class Column {
 public:
  using Mask = std::uint32_t;

  Column() = default;
  explicit Column(Word letters);

  static Column from_mask(Mask mask);
  Mask mask() const;

  Word const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend auto operator<=>(Column const&, Column const&) = default;

 private:
  Word letters_;
};

enum class OrderKind { RowStrict, RowWeak, Column };

/// u ≻_R v: |u| <= |v| and u_i > v_i for i <= |u|. The empty row dominates
/// every row.
bool row_dominates(Row const& u, Row const& v);
/// u ≽_R v: |u| <= |v| and u_i >= v_i for i <= |u|.
bool row_dominates_weakly(Row const& u, Row const& v);
/// u ≼_C v: |u| >= |v| and u_{i+|u|-|v|} <= v_i for i <= |v| (0-based
/// shifted comparison of the bottom parts).
bool column_precedes(Column const& u, Column const& v);

/// Validating entry point over raw words; throws InputError when u or v is not
/// a row (row kinds) or a column (column kind).
bool order_rel(OrderKind kind, Word const& u, Word const& v);

/// Sub-multiset tests.
bool is_subrow(Row const& sub, Row const& row);
bool is_subcolumn(Column const& sub, Column const& column);

enum class Reading { Rows, Columns };

class Tableau {
 public:
  Tableau() = default;
  /// Rows top to bottom; each must be non-empty and rows[i] ≻_R rows[i+1].
  explicit Tableau(std::vector<Row> rows);

  static Tableau from_row(Row const& row);
  static Tableau from_column(Column const& column);
  /// Columns left to right; lengths must weakly decrease.
  static Tableau from_columns(std::vector<Column> const& columns);

  std::vector<Row> const& rows() const noexcept { return rows_; }
  std::vector<Column> columns() const;
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept {
    return rows_.empty() ? 0 : rows_.back().size();
  }
  std::size_t cell_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  Shape shape() const;
  Word reading(Reading mode) const;
  Content content() const { return content_of(reading(Reading::Rows)); }

  friend auto operator<=>(Tableau const&, Tableau const&) = default;

 private:
  struct Unchecked {};
  Tableau(std::vector<Row> rows, Unchecked) : rows_(std::move(rows)) {}

  friend Tableau insert_right(Tableau const&, Letter);
  friend Tableau insert_left(Letter, Tableau const&);

  std::vector<Row> rows_;
};

/// Right (row-bumping) Schensted insertion T <- x.
Tableau insert_right(Tableau const& tableau, Letter x);
/// Left (column-bumping) Schensted insertion x -> T; equals x * T.
Tableau insert_left(Letter x, Tableau const& tableau);
/// Iterated right insertion into the empty tableau.
Tableau tableau_of_word(Word const& word);
/// T1 * T2 = I(T1, R(T2)).
Tableau product(Tableau const& lhs, Tableau const& rhs);

inline Tableau operator*(Tableau const& lhs, Tableau const& rhs) {
  return product(lhs, rhs);
}

inline Shape shape(Tableau const& tableau) { return tableau.shape(); }
inline Word read(Tableau const& tableau, Reading mode) {
  return tableau.reading(mode);
}

/// Fills `shape` row by row, top row first, each left to right. Throws
/// InputError when the word length does not match or the result is not a
/// tableau.
Tableau fill_shape(Word const& word, Shape const& shape);

/// All distinct tableaux T(w) for words of length <= max_length over A_n,
/// sorted.
std::vector<Tableau> tableaux_from_words(Letter n, std::size_t max_length);

/// All words of exactly `length` letters over A_n, lexicographic.
std::vector<Word> words_of_length(Letter n, std::size_t length);
/// All words of length <= max_length over A_n, shorter first.
std::vector<Word> words_up_to(Letter n, std::size_t max_length);

}  // namespace plactic
