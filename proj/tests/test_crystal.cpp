#include <doctest.h>

#include "oracles.hpp"
#include "plactic/crystal.hpp"
#include "plactic/plactic_monoid.hpp"
#include "plactic/serialize.hpp"

using namespace plactic;

namespace {
Tableau tab(char const* s) { return parse_tableau(s); }
DecoratedTuple tuple(std::initializer_list<char const*> parts) {
  DecoratedTuple out;
  for (auto p : parts) out.push_back({tab(p), 0});
  return out;
}
}  // namespace

TEST_CASE("s_i on words") {
  CHECK(format_word(s_word(parse_word("312321232223311"), 1)) == "311321132223311");
  CHECK(s_word({1, 2}, 1) == Word{1, 2});
  CHECK(s_word({2, 1, 1}, 1) == Word{2, 1, 2});
  CHECK(s_word({2}, 1) == Word{1});
  CHECK(s_word(s_word({2}, 1), 1) == Word{2});
  CHECK(s_word({3, 3, 1}, 2) == Word{2, 2, 1});
}

TEST_CASE("matching") {
  auto const m = match_scan({2, 1, 1}, 1);
  CHECK(m.matched.size() == 1);
  CHECK(m.unmatched == std::vector<std::size_t>{2});
  // Only the wrap-around pair matches in "12".
  CHECK(match_scan({1, 2}, 1).unmatched.empty());
  for (auto const& w : words_up_to(2, 8)) {
    auto const a = match_scan(w, 1), b = match_fixpoint(w, 1);
    CHECK(a.unmatched == b.unmatched);
  }
}

TEST_CASE("s_i swaps the counts of i and i+1") {
  for (auto const& w : words_up_to(3, 6)) {
    for (Letter i = 1; i <= 2; ++i) {
      Content c = content_of(w), d = content_of(s_word(w, i));
      c.resize(3);
      d.resize(3);
      std::swap(c[i - 1], c[i]);
      CHECK(c == d);
    }
  }
}

TEST_CASE("s_i on tableaux") {
  // (n12, n21, n22) = (1, 2, 0) is top "2", bottom "11".
  Tableau const t = tab("2/11");
  REQUIRE(oracle::params_of(t) == oracle::A2Params{1, 2, 0});
  CHECK(oracle::params_of(s_tableau(t, 1)) == oracle::A2Params{1, 1, 1});
  CHECK(format_tableau(s_tableau(tab("11"), 1)) == "22");
  CHECK(s_tableau(Tableau{}, 1).empty());
}

TEST_CASE("s_1 on A_2 tableaux matches the closed form") {
  for (auto const& t : tableaux_from_words(2, 7)) {
    CHECK(oracle::params_of(s_tableau(t, 1)) == oracle::s1_a2(oracle::params_of(t)));
  }
}

TEST_CASE("s_i on tuples") {
  CHECK(s_tuple(tuple({"1", "2"}), 1) == tuple({"1", "2"}));
  CHECK(s_tuple(tuple({"2", "1"}), 1) == tuple({"2", "1"}));
  CHECK(s_tuple(tuple({"3/266/134"}), 2) == DecoratedTuple{{s_tableau(tab("3/266/134"), 2), 0}});
  DecoratedTuple const decorated{{tab("11"), 2}, {tab("2"), 1}};
  auto const out = s_tuple(decorated, 1);
  CHECK(out[0].alpha == 2);
  CHECK(out[1].alpha == 1);
  CHECK(s_tuple_columns(decorated, 1) == out);
}

TEST_CASE("the componentwise action is not compatible with the row braiding") {
  DecoratedTuple const t = tuple({"1", "2"});
  auto const braided = [](DecoratedTuple x) {
    auto [a, b] = sigma_decorated(BraidKind::Row, x[0], x[1]);
    return DecoratedTuple{a, b};
  };
  CHECK(s_tuple(braided(t), 1) == braided(s_tuple(t, 1)));
  CHECK(s_tuple_diagonal(braided(t), 1) != braided(s_tuple_diagonal(t, 1)));

  auto const domain = decorated_domain(2, 1, 0);
  CHECK(check_action_compat(BraidKind::Row, s_tuple, 2, domain, 2).passed());
  CHECK_FALSE(check_action_compat(BraidKind::Row, s_tuple_diagonal, 2, domain, 2).passed());
}

TEST_CASE("crystal suite on small bounds") {
  auto const report = verify_crystal({.n = 3, .word_length = 5, .tuple_word_length = 2,
                                      .tuple_width = 2, .alpha_max = 0, .matching_length = 8});
  CHECK(report.passed());
  CHECK(report.details.at("cyclic_clause_changed_outcome") == 0);
}

TEST_CASE("Knuth compatibility") {
  for (auto const& w : words_up_to(3, 5)) {
    for (auto const& v : knuth_neighbors(w)) {
      for (Letter i = 1; i <= 2; ++i) {
        CHECK(oracle::knuth_closure(s_word(w, i)).count(s_word(v, i)) == 1);
      }
    }
  }
}
