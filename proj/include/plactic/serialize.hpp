#pragma once

// Text forms. A word is either compact ("3266134", one digit per letter) or
// separated by spaces or commas ("10 2 3", "12,"). "e" (or nothing) is the
// empty word, row, column or tableau. Tableaux list rows top to bottom joined
// by '/': "3/266/134". Output is compact whenever every letter is <= 9.

#include <string>
#include <string_view>
#include <vector>

#include "plactic/tableau.hpp"

namespace plactic {

Word parse_word(std::string_view text);
Row parse_row(std::string_view text);
Column parse_column(std::string_view text);
Tableau parse_tableau(std::string_view text);

std::string format_word(Word const& word);
std::string format_row(Row const& row);
std::string format_column(Column const& column);
std::string format_tableau(Tableau const& tableau);
/// "[1,3,3]"
std::string format_shape(Shape const& shape);

/// ("21", "e") style rendering of a tuple of already formatted parts.
std::string format_tuple(std::vector<std::string> const& parts);

}  // namespace plactic
