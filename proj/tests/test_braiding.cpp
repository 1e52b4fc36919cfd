#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "plactic/braiding.hpp"
#include "plactic/error.hpp"
#include "plactic/serialize.hpp"

using namespace plactic;

namespace {

Row row(char const* s) { return parse_row(s); }
Column col(char const* s) { return parse_column(s); }
Tableau tab(char const* s) { return parse_tableau(s); }

std::vector<Column> cols(std::initializer_list<char const*> parts) {
  std::vector<Column> out;
  for (auto p : parts) out.push_back(col(p));
  return out;
}

auto const sigma_c = [](Column const& a, Column const& b) { return sigma_col(a, b); };
auto const sigma_r = [](Row const& a, Row const& b) { return sigma_row(a, b); };

}  // namespace

TEST_CASE("row braiding examples") {
  CHECK(sigma_row(row("225778"), row("145589")) == std::pair{row("2577"), row("12455889")});
  CHECK(sigma_row(Row{}, row("134")) == std::pair{Row{}, row("134")});
  CHECK(sigma_row(row("112"), row("122")) == std::pair{row("2"), row("11122")});
}

TEST_CASE("row braiding over A_2 matches the closed form") {
  for (auto const& r1 : enumerate_rows(2, 4)) {
    for (auto const& r2 : enumerate_rows(2, 4)) {
      auto const [top, bottom] = oracle::sigma_row_a2(r1.letters(), r2.letters());
      CHECK(sigma_row(r1, r2) == std::pair{Row(top), Row(bottom)});
    }
  }
}

TEST_CASE("column braiding over A_2 matches the hand table") {
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> const table{
      {{"1", "1"}, {"1", "1"}},    {{"1", "2"}, {"1", "2"}},    {{"1", "21"}, {"21", "1"}},
      {{"2", "1"}, {"21", "e"}},   {{"2", "2"}, {"2", "2"}},    {{"2", "21"}, {"21", "2"}},
      {{"21", "1"}, {"21", "1"}},  {{"21", "2"}, {"21", "2"}},  {{"21", "21"}, {"21", "21"}},
  };
  for (auto const& [in, out] : table) {
    auto const got = sigma_col(col(in.first.c_str()), col(in.second.c_str()));
    CHECK(format_column(got.first) == out.first);
    CHECK(format_column(got.second) == out.second);
  }
  for (auto const& c : enumerate_columns(2)) {
    CHECK(sigma_col(Column{}, c) == std::pair{c, Column{}});
    CHECK(sigma_col(c, Column{}) == std::pair{c, Column{}});
  }
}

TEST_CASE("column enumeration") {
  auto const a2 = enumerate_columns(2);
  REQUIRE(a2.size() == 4);
  CHECK(format_column(a2[0]) == "e");
  CHECK(format_column(a2[1]) == "1");
  CHECK(format_column(a2[2]) == "2");
  CHECK(format_column(a2[3]) == "21");
  CHECK(enumerate_columns(1).size() == 2);
  auto const a3 = enumerate_columns(3);
  CHECK(a3.size() == 8);
  CHECK(format_column(a3.back()) == "321");
}

TEST_CASE("braidings conserve content") {
  for (auto const& a : enumerate_rows(3, 3)) {
    for (auto const& b : enumerate_rows(3, 3)) {
      auto const [c, d] = sigma_row(a, b);
      Word lhs = a.letters(), rhs = c.letters();
      lhs.insert(lhs.end(), b.letters().begin(), b.letters().end());
      rhs.insert(rhs.end(), d.letters().begin(), d.letters().end());
      CHECK(content_of(lhs) == content_of(rhs));
    }
  }
}

TEST_CASE("decorated braiding examples") {
  DecoratedTableau const one{tab("1"), 0}, two{tab("2"), 0};
  auto const [l, r] = sigma_decorated(BraidKind::Row, one, two);
  CHECK(l == DecoratedTableau{Tableau{}, 1});
  CHECK(r == DecoratedTableau{tab("12"), 0});

  auto const example = sigma_decorated(BraidKind::Row, {tab("225778"), 0}, {tab("145589"), 0});
  CHECK(example.first == DecoratedTableau{tab("2577"), 0});
  CHECK(example.second == DecoratedTableau{tab("12455889"), 0});

  DecoratedTableau const t{tab("3/266/134"), 0}, unit{};
  auto const u = sigma_decorated(BraidKind::Column, t, unit);
  CHECK(u == std::pair{unit, t});
  auto const v = sigma_decorated(BraidKind::Column, unit, t);
  CHECK(v == std::pair{t, unit});
}

TEST_CASE("decorated product") {
  DecoratedTableau const r1{tab("2"), 0}, r2{tab("1"), 0};
  auto const p = decorated_product(BraidKind::Row, r1, r2);
  CHECK(p == DecoratedTableau{tab("2/1"), 0});
  auto const q = decorated_product(BraidKind::Row, DecoratedTableau{tab("1"), 0}, DecoratedTableau{tab("2"), 0});
  CHECK(q == DecoratedTableau{tab("12"), 1});
  CHECK(level(BraidKind::Row, q) == 2);
  CHECK(level(BraidKind::Column, q) == 3);
}

TEST_CASE("braid word action") {
  auto const t = cols({"2", "1", "2"});
  CHECK(apply_braid_word(sigma_c, BraidWord{{1}}, t) == cols({"21", "e", "2"}));
  CHECK(apply_braid_word(sigma_c, BraidWord{}, t) == t);
  CHECK(apply_braid_word(sigma_c, BraidWord{{1, 2, 1}}, t) == cols({"21", "2", "e"}));
  CHECK(apply_braid_word(sigma_c, BraidWord{{2}}, t) == t);
  CHECK_THROWS_AS(apply_braid_word(sigma_c, BraidWord{{3}}, t), InputError);
  CHECK_THROWS_AS(apply_braid_word(sigma_c, BraidWord{{0}}, t), InputError);
}

TEST_CASE("longest element") {
  CHECK(delta_word(1).generators.empty());
  CHECK(delta_word(2).generators == std::vector<std::size_t>{1});
  CHECK(delta_word(3).generators == std::vector<std::size_t>{1, 2, 1});
  CHECK(delta_word(4).generators.size() == 6);
}

TEST_CASE("delta normalization") {
  CHECK(delta_normalize(sigma_c, cols({"2", "1", "2"})) == cols({"21", "2", "e"}));
  CHECK(delta_normalize(sigma_c, cols({"1"})) == cols({"1"}));
  std::vector<Row> const example{row("225778"), row("145589")};
  CHECK(delta_normalize(sigma_r, example) == std::vector<Row>{row("2577"), row("12455889")});
}

TEST_CASE("normal words") {
  CHECK(is_normal(sigma_c, cols({"21", "2"})));
  CHECK_FALSE(is_normal(sigma_c, cols({"1", "21"})));
  CHECK(is_normal(sigma_c, std::vector<Column>{}));
}

TEST_CASE("reduced normal forms") {
  CHECK(reduced_normal_form(BraidKind::Column, {{2}, {1}, {2}}) == std::vector<Word>{{2, 1}, {2}});
  CHECK(factorization(BraidKind::Column, tab("2/12")) == std::vector<Word>{{2, 1}, {2}});
  CHECK(reduced_normal_form(BraidKind::Column, {{}}).empty());
  std::vector<Word> const rows{{3}, {2, 6, 6}, {1, 3, 4}};
  CHECK(reduced_normal_form(BraidKind::Row, rows) == rows);
  CHECK(reduced_normal_form(BraidKind::Row, {{3}, {2}, {6}, {6}, {1}, {3}, {4}}) == rows);
}

TEST_CASE("built-in braided sets pass the axioms") {
  for (Letter n = 1; n <= 3; ++n) CHECK(verify_braided_set(column_braided_set(n)).passed());
  CHECK(verify_braided_set(row_braided_set(2, 3)).passed());
}

TEST_CASE("the flip satisfies YBE but is not idempotent") {
  auto const report = verify_braided_set(flip_braided_set(3));
  REQUIRE(report.find("ybe"));
  CHECK(report.find("ybe")->passed());
  REQUIRE(report.find("idempotent"));
  CHECK_FALSE(report.find("idempotent")->passed());
  CHECK(verify_braided_set(flip_braided_set(1)).find("idempotent")->passed());
}

TEST_CASE("swapping the column braiding outputs breaks YBE") {
  auto set = column_braided_set(2);
  set.sigma = [](Column const& a, Column const& b) {
    auto const [c, d] = sigma_col(a, b);
    return std::pair{d, c};
  };
  auto const report = verify_braided_set(set, {.ybe = true, .idempotent = false, .pseudo_unit = false});
  REQUIRE(report.find("ybe"));
  CHECK_FALSE(report.find("ybe")->passed());
  CHECK_FALSE(report.find("ybe")->counterexamples.empty());
}

TEST_CASE("associativity braiding") {
  auto const set = associativity_braided_set(tableaux_from_words(2, 2));
  auto const report = verify_braided_set(set, {.ybe = true, .idempotent = true, .pseudo_unit = false});
  CHECK(report.passed());
}

TEST_CASE("observation suites") {
  CHECK(verify_row_observations(2, 3).passed());
  CHECK(verify_column_observations(3).passed());
}

TEST_CASE("normal-form suite") {
  CHECK(verify_normal_forms(BraidKind::Column, 3, 4).passed());
  CHECK(verify_normal_forms(BraidKind::Row, 3, 4).passed());
}

TEST_CASE("decorated monoid suite") {
  auto const row = verify_monoid_compat(BraidKind::Row, 2, 2, 1);
  CHECK(row.passed());
  CHECK(row.find("subadditivity"));
  CHECK(verify_monoid_compat(BraidKind::Column, 2, 2, 1).passed());
}
