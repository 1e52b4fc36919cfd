#include <doctest.h>

#include "oracles.hpp"
#include "plactic/error.hpp"
#include "plactic/plactic_monoid.hpp"
#include "plactic/serialize.hpp"
#include "plactic/tableau.hpp"

using namespace plactic;

namespace {
Tableau tab(char const* s) { return parse_tableau(s); }
std::string str(Tableau const& t) { return format_tableau(t); }
}  // namespace

TEST_CASE("order relations") {
  CHECK(order_rel(OrderKind::RowStrict, parse_word("3"), parse_word("266")));
  CHECK(order_rel(OrderKind::Column, parse_word("321"), parse_word("63")));
  CHECK(order_rel(OrderKind::RowStrict, Word{}, parse_word("134")));
  CHECK_FALSE(order_rel(OrderKind::RowStrict, parse_word("2"), parse_word("266")));
  CHECK(order_rel(OrderKind::RowWeak, parse_word("2"), parse_word("266")));
  CHECK_FALSE(order_rel(OrderKind::Column, parse_word("1"), parse_word("21")));
  CHECK_THROWS_AS(order_rel(OrderKind::RowStrict, parse_word("21"), parse_word("3")), InputError);
  CHECK_THROWS_AS(order_rel(OrderKind::Column, parse_word("12"), parse_word("3")), InputError);
}

TEST_CASE("readings") {
  Tableau const t = tab("3/266/134");
  CHECK(format_word(read(t, Reading::Rows)) == "3266134");
  CHECK(format_word(read(t, Reading::Columns)) == "3216364");
  CHECK(read(Tableau{}, Reading::Rows).empty());
}

TEST_CASE("right insertion") {
  CHECK(str(insert_right(tab("3/266/134"), 3)) == "36/246/133");
  CHECK(str(insert_right(Tableau{}, 5)) == "5");
  CHECK(str(insert_right(tab("12"), 1)) == "2/11");
}

TEST_CASE("left insertion") {
  CHECK(str(insert_left(3, tab("3/266/134"))) == "3/266/1334");
  CHECK(str(insert_left(5, Tableau{})) == "5");
  CHECK(insert_left(1, tab("2/12")) == tableau_of_word({1, 2, 1, 2}));
}

TEST_CASE("left insertion is the product with a single cell") {
  for (auto const& t : tableaux_from_words(3, 4)) {
    for (Letter x = 1; x <= 3; ++x) {
      CHECK(insert_left(x, t) == product(tableau_of_word({x}), t));
    }
  }
}

TEST_CASE("tableau of a word") {
  CHECK(str(tableau_of_word(parse_word("3266134"))) == "3/266/134");
  CHECK(str(tableau_of_word(parse_word("3216364"))) == "3/266/134");
  CHECK(tableau_of_word({}).empty());
}

TEST_CASE("product") {
  CHECK(str(product(tab("225778"), tab("145589"))) == "2577/12455889");
  Tableau const t = tab("3/266/134");
  CHECK(product(t, Tableau{}) == t);
  CHECK(product(Tableau{}, t) == t);
  CHECK(str(product(tab("2"), tab("1"))) == "2/1");
  CHECK(product(tab("2"), tab("1")) == tableau_of_word({2, 1}));
}

TEST_CASE("shape") {
  CHECK(format_shape(shape(tab("3/266/134"))) == "[1,3,3]");
  CHECK(shape(Tableau{}).empty());
  CHECK(format_shape(shape(tab("2577/12455889"))) == "[4,8]");
}

TEST_CASE("serialization round trip and rejection") {
  for (auto const& t : tableaux_from_words(3, 5)) {
    CHECK(parse_tableau(format_tableau(t)) == t);
  }
  CHECK(str(tab("e")) == "e");
  CHECK(str(parse_tableau("10 11/1 2 12")) == "10 11/1 2 12");
  CHECK_THROWS_AS(tab("1/2"), InputError);
  CHECK_THROWS_AS(tab("21"), InputError);
  CHECK_THROWS_AS(tab("12/3"), InputError);
  CHECK_THROWS_AS(parse_word("1x"), InputError);
  CHECK_THROWS_AS(parse_word("0"), InputError);
}

TEST_CASE("column masks") {
  CHECK(Column::from_mask(0b101).letters() == Word{3, 1});
  for (Column::Mask m = 0; m < 16; ++m) CHECK(Column::from_mask(m).mask() == m);
}

TEST_CASE("readings are sections of the tableau map and stay in the Knuth class") {
  for (auto const& w : words_up_to(3, 6)) {
    Tableau const t = tableau_of_word(w);
    Word const r = read(t, Reading::Rows), c = read(t, Reading::Columns);
    CHECK(tableau_of_word(r) == t);
    CHECK(tableau_of_word(c) == t);
    CHECK(content_of(r) == content_of(w));
    if (w.size() <= 5) {
      auto const cls = oracle::knuth_closure(w);
      CHECK(cls.count(r) == 1);
      CHECK(cls.count(c) == 1);
    }
  }
}

TEST_CASE("product is associative") {
  auto const ts = tableaux_from_words(3, 3);
  for (auto const& a : ts) {
    for (auto const& b : ts) {
      Tableau const ab = a * b;
      for (auto const& c : ts) CHECK(ab * c == a * (b * c));
    }
  }
}

TEST_CASE("two rows multiply to at most two rows, two columns to at most two columns") {
  std::vector<Word> rows, cols;
  for (auto const& w : words_up_to(3, 4)) {
    if (std::is_sorted(w.begin(), w.end())) rows.push_back(w);
  }
  for (Column::Mask m = 0; m < 8; ++m) cols.push_back(Column::from_mask(m).letters());
  for (auto const& r1 : rows) {
    for (auto const& r2 : rows) {
      CHECK(product(Tableau::from_row(Row(r1)), Tableau::from_row(Row(r2))).row_count() <= 2);
    }
  }
  for (auto const& c1 : cols) {
    for (auto const& c2 : cols) {
      CHECK(product(Tableau::from_column(Column(c1)), Tableau::from_column(Column(c2)))
                .column_count() <= 2);
    }
  }
}

TEST_CASE("bottom row length is the longest non-decreasing subword") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (auto const& w : words_of_length(3, len)) {
      auto const t = tableau_of_word(w);
      std::size_t const bottom = t.empty() ? 0 : t.rows().back().size();
      CHECK(bottom == oracle::longest_nondec_brute(w));
    }
  }
}
