#pragma once

// Knuth relations and the plactic monoid Pl_A = A* / ~, with elements stored
// as their canonical tableaux.

#include <cstddef>
#include <set>

#include "plactic/tableau.hpp"

namespace plactic {

/// Words reachable from `word` by one application of
///   xzy ~ zxy (x <= y < z)   or   yxz ~ yzx (x < y <= z)
/// in either direction at any position.
std::set<Word> knuth_neighbors(Word const& word);

inline constexpr std::size_t kDefaultKnuthClassCap = 8;

/// Breadth-first closure of `word` under knuth_neighbors. Throws
/// ResourceError when the word is longer than `max_length`.
std::set<Word> knuth_class(Word const& word,
                           std::size_t max_length = kDefaultKnuthClassCap);

/// Plactic equality through the canonical tableau.
bool plactic_equal(Word const& lhs, Word const& rhs);

/// Plactic equality through the Knuth closure; the independent oracle for
/// plactic_equal.
bool plactic_equal_by_closure(Word const& lhs, Word const& rhs,
                              std::size_t max_length = kDefaultKnuthClassCap);

/// Longest non-decreasing subword length, by dynamic programming over the
/// word (independent of insertion).
std::size_t longest_nondec_subword(Word const& word);

/// The column n (n-1) ... 1.
Word longest_column(Letter n);

/// Whether `word` commutes in Pl_{A_n} with every letter of A_n.
bool is_central(Word const& word, Letter n);

/// Whether the tableau is c^m for the longest column c of A_n (m >= 0).
bool is_power_of_longest_column(Tableau const& tableau, Letter n);

class PlacticElement {
 public:
  PlacticElement() = default;
  explicit PlacticElement(Tableau canonical) : canonical_(std::move(canonical)) {}
  static PlacticElement from_word(Word const& word) {
    return PlacticElement(tableau_of_word(word));
  }

  Tableau const& canonical() const noexcept { return canonical_; }
  Word word() const { return canonical_.reading(Reading::Rows); }

  friend PlacticElement operator*(PlacticElement const& lhs,
                                  PlacticElement const& rhs) {
    return PlacticElement(product(lhs.canonical_, rhs.canonical_));
  }
  friend auto operator<=>(PlacticElement const&, PlacticElement const&) = default;

 private:
  Tableau canonical_;
};

}  // namespace plactic
