#include "plactic/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "plactic/error.hpp"

namespace plactic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

Letter parse_letter(std::string_view token) {
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
    throw InputError("invalid letter '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  Word word;
  if (text.empty() || text == "e") return word;
  bool const separated = std::any_of(text.begin(), text.end(), is_separator);
  if (!separated) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InputError("invalid character '" + std::string(1, c) +
                         "' in compact word");
      }
      word.push_back(static_cast<Letter>(c - '0'));
    }
    return word;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) word.push_back(parse_letter(text.substr(i, j - i)));
    i = j;
  }
  return word;
}

Row parse_row(std::string_view text) { return Row(parse_word(text)); }

Column parse_column(std::string_view text) { return Column(parse_word(text)); }

Tableau parse_tableau(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "e") return {};
  std::vector<Row> rows;
  std::size_t start = 0;
  while (true) {
    auto const slash = text.find('/', start);
    auto const piece =
        text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    Row row = parse_row(piece);
    if (row.empty()) throw InputError("empty row inside a tableau");
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows));
}

namespace {

bool all_single_digit(Word const& word) {
  return std::all_of(word.begin(), word.end(), [](Letter a) { return a <= 9; });
}

// Separated single letters get a trailing comma so they cannot be mistaken
// for a compact word ("12," is the letter twelve, "12" is 1 then 2).
std::string format_letters(Word const& word, bool compact) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  if (!compact && word.size() == 1) out += ',';
  return out;
}

}  // namespace

std::string format_word(Word const& word) {
  return format_letters(word, all_single_digit(word));
}

std::string format_row(Row const& row) { return format_word(row.letters()); }

std::string format_column(Column const& column) {
  return format_word(column.letters());
}

std::string format_tableau(Tableau const& tableau) {
  if (tableau.empty()) return "e";
  bool const compact = all_single_digit(tableau.reading(Reading::Rows));
  std::string out;
  for (auto const& row : tableau.rows()) {
    if (!out.empty()) out += '/';
    out += format_letters(row.letters(), compact);
  }
  return out;
}

std::string format_shape(Shape const& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

std::string format_tuple(std::vector<std::string> const& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += '"' + parts[i] + '"';
  }
  return out + ")";
}

}  // namespace plactic
