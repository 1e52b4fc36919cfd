#pragma once

// Letter-permuting operators s_i on words, tableaux and tuples of decorated
// tableaux.

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "plactic/braiding.hpp"
#include "plactic/report.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

/// Positions (into the full word) of the letters i and i+1 and the outcome of
/// the (i+1, i) matching.
struct MatchingState {
  std::vector<std::size_t> positions;
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<std::size_t> unmatched;
};

/// Left-to-right stack matching followed by the cyclic (last, first) rule.
MatchingState match_scan(Word const& word, Letter i);
/// Repeated elimination of cyclically adjacent unmatched (i+1, i) pairs,
/// rightmost pair first.
MatchingState match_fixpoint(Word const& word, Letter i);

/// s_i: flips every unmatched letter i <-> i+1. Requires i >= 1.
Word s_word(Word const& word, Letter i);
/// The rule without the cyclic clause: after non-cyclic matching the free
/// letters read i^a (i+1)^b and become i^b (i+1)^a.
Word s_word_classical(Word const& word, Letter i);

/// T(s_i(R(T))). Throws std::logic_error if the shape changes.
Tableau s_tableau(Tableau const& tableau, Letter i);

using DecoratedTuple = std::vector<DecoratedTableau>;

/// s_i on the concatenated row readings, re-cut and refilled into the
/// original shapes; decorations are kept.
DecoratedTuple s_tuple(DecoratedTuple const& tuple, Letter i);
/// The same through column readings, refilling the original column lengths.
DecoratedTuple s_tuple_columns(DecoratedTuple const& tuple, Letter i);
/// s_i applied separately to each component.
DecoratedTuple s_tuple_diagonal(DecoratedTuple const& tuple, Letter i);

using TupleAction = std::function<DecoratedTuple(DecoratedTuple const&, Letter)>;

/// s(b_l t) == b_l(s t) for every tuple of width k over `domain`, every
/// generator b_l and every 1 <= i < n, with b_l acting by the decorated
/// braiding of the given kind.
Check check_action_compat(BraidKind kind, TupleAction const& action, Letter n,
                          std::vector<DecoratedTableau> const& domain,
                          std::size_t width);

struct CrystalBounds {
  Letter n = 3;
  std::size_t word_length = 5;
  /// Tuples are built from tableaux of words of at most this length.
  std::size_t tuple_word_length = 2;
  std::size_t tuple_width = 2;
  std::size_t alpha_max = 0;
  /// Word length for the matching-order comparison over A_2.
  std::size_t matching_length = 10;
};

Report verify_crystal(CrystalBounds const& bounds);

}  // namespace plactic
