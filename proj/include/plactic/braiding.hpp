#pragma once

// The row and column braidings obtained from the tableau product, their
// N0-decorated extensions to all tableaux, and verifiers for the structural
// properties they satisfy.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plactic/braided_set.hpp"
#include "plactic/report.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

enum class BraidKind { Row, Column };

/// σ_R(r1, r2): the two rows (top, bottom) of r1 * r2, or (e_R, r1 r2) when
/// the product is a single row.
std::pair<Row, Row> sigma_row(Row const& r1, Row const& r2);

/// σ_C(c1, c2): the two columns (left, right) of c1 * c2, or (c1 c2, e_C)
/// when the product is a single column.
std::pair<Column, Column> sigma_col(Column const& c1, Column const& c2);

/// An element of YT_A x N0; alpha counts absorbed empty rows or columns.
struct DecoratedTableau {
  Tableau tableau;
  std::size_t alpha = 0;

  friend auto operator<=>(DecoratedTableau const&, DecoratedTableau const&) = default;
};

std::string format_decorated(DecoratedTableau const& d);

/// rows(T) + alpha for the row kind, cols(T) + alpha for the column kind.
std::size_t level(BraidKind kind, DecoratedTableau const& d);

/// (T1, a1) *_kind (T2, a2) = (T1 * T2, a1 + a2 + m(T1) + m(T2) - m(T1 * T2))
/// with m = rows or cols.
DecoratedTableau decorated_product(BraidKind kind, DecoratedTableau const& u,
                                   DecoratedTableau const& v);

/// The insertion braiding on decorated tableaux. Row kind: the bottom
/// a1 + rows(T1) rows of T1 * T2 go right, the rest left; column kind: the
/// leftmost a2 + cols(T2) columns go left, the rest right. Decorations make up
/// the missing rows or columns.
std::pair<DecoratedTableau, DecoratedTableau> sigma_decorated(
    BraidKind kind, DecoratedTableau const& u, DecoratedTableau const& v);

/// All rows over A_n of length <= max_length, e_R first, sorted.
std::vector<Row> enumerate_rows(Letter n, std::size_t max_length);
/// All 2^n columns over A_n ordered by mask, e_C first.
std::vector<Column> enumerate_columns(Letter n);

BraidedSet<Row> row_braided_set(Letter n, std::size_t max_length);
BraidedSet<Column> column_braided_set(Letter n);
BraidedSet<DecoratedTableau> decorated_braided_set(
    BraidKind kind, std::vector<DecoratedTableau> domain);
/// σ_Ass(v, w) = (1, v * w) on tableaux, with the empty tableau as unit.
BraidedSet<Tableau> associativity_braided_set(std::vector<Tableau> domain);

/// Decorated tableaux T(w) for words of length <= max_length over A_n, with
/// every alpha in 0..alpha_max.
std::vector<DecoratedTableau> decorated_domain(Letter n, std::size_t max_length,
                                               std::size_t alpha_max);

/// Δ_k normal form of single-letter (or arbitrary) factors with e_R / e_C
/// erased; factors are rows (row kind) or columns (column kind), given as
/// words. The result lists rows top to bottom or columns left to right.
std::vector<Word> reduced_normal_form(BraidKind kind,
                                      std::vector<Word> const& factors);

/// Rows (top to bottom) or columns (left to right) of a tableau as words.
std::vector<Word> factorization(BraidKind kind, Tableau const& tableau);

/// Sub-row/sub-column, order comparisons and weak invertibility of σ_R over
/// all rows of length <= max_length on A_n.
Report verify_row_observations(Letter n, std::size_t max_length);
/// The same for σ_C over all columns on A_n, plus the subcolumn
/// characterization.
Report verify_column_observations(Letter n);

/// For every word of length <= max_length over A_n: the reduced normal form
/// of its letters equals the factorization of its tableau, the Δ_k output is
/// fixed by every generator, a greedy normalization reaches the same normal
/// form, and products of normal words are braid-then-concatenate.
Report verify_normal_forms(BraidKind kind, Letter n, std::size_t max_length);

/// Braided commutative monoid axioms for (YT x N0, *_kind, σ_kind), σ³ = σ,
/// idempotency on each level set, YBE, and subadditivity of rows/cols, over
/// decorated_domain(n, max_length, alpha_max).
Report verify_monoid_compat(BraidKind kind, Letter n, std::size_t max_length,
                            std::size_t alpha_max);

}  // namespace plactic
