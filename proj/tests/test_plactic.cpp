#include <doctest.h>

#include "oracles.hpp"
#include "plactic/error.hpp"
#include "plactic/plactic_monoid.hpp"
#include "plactic/serialize.hpp"

using namespace plactic;

TEST_CASE("Knuth neighbors") {
  CHECK(knuth_neighbors({1, 3, 2}) == std::set<Word>{{3, 1, 2}});
  CHECK(knuth_neighbors({1, 1, 1}).empty());
  CHECK(knuth_neighbors({2, 1, 2}) == std::set<Word>{{2, 2, 1}});
}

TEST_CASE("Knuth neighbors agree with the explicit triple moves") {
  for (auto const& w : words_up_to(3, 5)) {
    auto const from_lib = knuth_class(w);
    CHECK(from_lib == oracle::knuth_closure(w));
  }
}

TEST_CASE("plactic equality") {
  CHECK(plactic_equal({1, 3, 2}, {3, 1, 2}));
  CHECK(plactic_equal({2, 3, 1}, {2, 3, 1}));
  CHECK_FALSE(plactic_equal({1, 2}, {2, 1}));
  CHECK(oracle::knuth_closure({1, 2}) == std::set<Word>{{1, 2}});
  CHECK(plactic_equal_by_closure({1, 3, 2}, {3, 1, 2}));
}

TEST_CASE("Knuth class cap") {
  CHECK_THROWS_AS(knuth_class(Word(9, 1)), ResourceError);
}

TEST_CASE("plactic equality matches the closure oracle on length 5 over A_3") {
  for (auto const& u : words_of_length(3, 5)) {
    auto const cls = oracle::knuth_closure(u);
    for (auto const& v : words_of_length(3, 5)) {
      if (content_of(u) != content_of(v)) continue;
      CHECK(plactic_equal(u, v) == (cls.count(v) == 1));
    }
  }
}

TEST_CASE("Knuth moves preserve content") {
  for (auto const& w : words_up_to(3, 5)) {
    for (auto const& v : knuth_neighbors(w)) CHECK(content_of(v) == content_of(w));
  }
}

TEST_CASE("longest non-decreasing subword") {
  CHECK(longest_nondec_subword({3, 2, 6, 6, 1, 3, 4}) == 3);
  CHECK(longest_nondec_subword({}) == 0);
  CHECK(longest_nondec_subword({1, 2, 2, 5}) == 4);
  for (auto const& w : words_up_to(3, 7)) {
    CHECK(longest_nondec_subword(w) == oracle::longest_nondec_brute(w));
  }
}

TEST_CASE("center") {
  CHECK(is_central({3, 2, 1}, 3));
  CHECK_FALSE(is_central({2, 1}, 3));
  CHECK(format_tableau(tableau_of_word({2, 1, 3})) == "2/13");
  CHECK(format_tableau(tableau_of_word({3, 2, 1})) == "3/2/1");
  CHECK(is_central({1}, 1));
  CHECK(is_central({}, 2));
  CHECK(is_central({2, 1, 2, 1}, 2));
  CHECK(longest_column(3) == Word{3, 2, 1});
}

TEST_CASE("center is generated by the longest column") {
  for (Letter n = 1; n <= 3; ++n) {
    for (auto const& w : words_up_to(n, 4)) {
      // Commutation with each letter, decided by the closure oracle.
      bool central = true;
      for (Letter a = 1; a <= n && central; ++a) {
        Word wa = w, aw{a};
        wa.push_back(a);
        aw.insert(aw.end(), w.begin(), w.end());
        central = oracle::knuth_closure(wa).count(aw) == 1;
      }
      CHECK(is_central(w, n) == central);
      CHECK(is_central(w, n) == is_power_of_longest_column(tableau_of_word(w), n));
    }
  }
}

TEST_CASE("plactic elements multiply through tableaux") {
  auto const a = PlacticElement::from_word({2, 2, 5, 7, 7, 8});
  auto const b = PlacticElement::from_word({1, 4, 5, 5, 8, 9});
  CHECK(format_tableau((a * b).canonical()) == "2577/12455889");
  CHECK((a * b).word() == parse_word("257712455889"));
}
