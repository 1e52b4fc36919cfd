#include "plactic/crystal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "plactic/error.hpp"
#include "plactic/plactic_monoid.hpp"
#include "plactic/serialize.hpp"

namespace plactic {

namespace {

void require_index(Letter i) {
  if (i == 0) throw InputError("operator index must be >= 1");
}

std::vector<std::size_t> restricted_positions(Word const& word, Letter i) {
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] == i || word[p] == i + 1) positions.push_back(p);
  }
  return positions;
}

Word flip_unmatched(Word word, std::vector<std::size_t> const& unmatched, Letter i) {
  for (std::size_t p : unmatched) word[p] = word[p] == i ? i + 1 : i;
  return word;
}

// Non-cyclic stack matching; the unmatched letters come out as i^a (i+1)^b.
MatchingState match_linear(Word const& word, Letter i) {
  MatchingState state;
  state.positions = restricted_positions(word, i);
  std::vector<std::size_t> open;
  for (std::size_t p : state.positions) {
    if (word[p] == i + 1) {
      open.push_back(p);
    } else if (!open.empty()) {
      state.matched.emplace_back(open.back(), p);
      open.pop_back();
    } else {
      state.unmatched.push_back(p);
    }
  }
  state.unmatched.insert(state.unmatched.end(), open.begin(), open.end());
  return state;
}

}  // namespace

MatchingState match_scan(Word const& word, Letter i) {
  require_index(i);
  MatchingState state = match_linear(word, i);
  auto& free = state.unmatched;
  // The last free i+1 and the first free i are cyclically adjacent.
  while (free.size() >= 2 && word[free.back()] == i + 1 && word[free.front()] == i) {
    state.matched.emplace_back(free.back(), free.front());
    free.pop_back();
    free.erase(free.begin());
  }
  return state;
}

MatchingState match_fixpoint(Word const& word, Letter i) {
  require_index(i);
  MatchingState state;
  state.positions = restricted_positions(word, i);
  std::vector<std::size_t> free = state.positions;
  while (free.size() >= 2) {
    bool found = false;
    for (std::size_t t = free.size(); t-- > 0;) {
      std::size_t const next = (t + 1) % free.size();
      if (word[free[t]] == i + 1 && word[free[next]] == i) {
        state.matched.emplace_back(free[t], free[next]);
        std::size_t const hi = std::max(t, next), lo = std::min(t, next);
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(hi));
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(lo));
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  state.unmatched = std::move(free);
  return state;
}

Word s_word(Word const& word, Letter i) {
  return flip_unmatched(word, match_scan(word, i).unmatched, i);
}

Word s_word_classical(Word const& word, Letter i) {
  require_index(i);
  auto const free = match_linear(word, i).unmatched;
  std::size_t const b = static_cast<std::size_t>(
      std::count_if(free.begin(), free.end(), [&](std::size_t p) { return word[p] == i + 1; }));
  Word out = word;
  for (std::size_t t = 0; t < free.size(); ++t) out[free[t]] = t < b ? i : i + 1;
  return out;
}

Tableau s_tableau(Tableau const& tableau, Letter i) {
  Tableau result = tableau_of_word(s_word(tableau.reading(Reading::Rows), i));
  if (result.shape() != tableau.shape()) {
    throw std::logic_error("s_tableau changed the shape of " + format_tableau(tableau));
  }
  return result;
}

DecoratedTuple s_tuple(DecoratedTuple const& tuple, Letter i) {
  Word joined;
  for (auto const& d : tuple) {
    auto const r = d.tableau.reading(Reading::Rows);
    joined.insert(joined.end(), r.begin(), r.end());
  }
  Word const image = s_word(joined, i);
  DecoratedTuple out;
  auto it = image.begin();
  for (auto const& d : tuple) {
    auto const len = static_cast<std::ptrdiff_t>(d.tableau.cell_count());
    out.push_back({fill_shape(Word(it, it + len), d.tableau.shape()), d.alpha});
    it += len;
  }
  return out;
}

DecoratedTuple s_tuple_columns(DecoratedTuple const& tuple, Letter i) {
  Word joined;
  for (auto const& d : tuple) {
    auto const c = d.tableau.reading(Reading::Columns);
    joined.insert(joined.end(), c.begin(), c.end());
  }
  Word const image = s_word(joined, i);
  DecoratedTuple out;
  auto it = image.begin();
  for (auto const& d : tuple) {
    std::vector<Column> columns;
    for (auto const& c : d.tableau.columns()) {
      auto const len = static_cast<std::ptrdiff_t>(c.size());
      columns.emplace_back(Word(it, it + len));
      it += len;
    }
    out.push_back({Tableau::from_columns(columns), d.alpha});
  }
  return out;
}

DecoratedTuple s_tuple_diagonal(DecoratedTuple const& tuple, Letter i) {
  DecoratedTuple out;
  for (auto const& d : tuple) out.push_back({s_tableau(d.tableau, i), d.alpha});
  return out;
}

namespace {

std::string describe_tuple(DecoratedTuple const& t) {
  std::vector<std::string> parts;
  for (auto const& d : t) parts.push_back(format_decorated(d));
  std::string out = "(";
  for (std::size_t j = 0; j < parts.size(); ++j) out += (j ? ", " : "") + parts[j];
  return out + ")";
}

void for_each_tuple(std::vector<DecoratedTableau> const& domain, std::size_t width,
                    std::function<void(DecoratedTuple const&)> const& visit) {
  DecoratedTuple tuple(width);
  std::vector<std::size_t> index(width, 0);
  if (domain.empty()) return;
  while (true) {
    for (std::size_t j = 0; j < width; ++j) tuple[j] = domain[index[j]];
    visit(tuple);
    std::size_t j = width;
    while (j > 0 && index[j - 1] + 1 == domain.size()) index[--j] = 0;
    if (j == 0) return;
    ++index[j - 1];
  }
}

}  // namespace

Check check_action_compat(BraidKind kind, TupleAction const& action, Letter n,
                          std::vector<DecoratedTableau> const& domain,
                          std::size_t width) {
  Check check{kind == BraidKind::Row ? "action_compat_row" : "action_compat_col"};
  auto sigma = [kind](DecoratedTableau const& u, DecoratedTableau const& v) {
    return sigma_decorated(kind, u, v);
  };
  for_each_tuple(domain, width, [&](DecoratedTuple const& t) {
    for (Letter i = 1; i < n; ++i) {
      auto const moved = action(t, i);
      for (std::size_t l = 1; l < width; ++l) {
        auto braided = t;
        apply_generator(sigma, l, braided);
        auto shifted = moved;
        apply_generator(sigma, l, shifted);
        check.expect(action(braided, i) == shifted, [&] {
          return "s_" + std::to_string(i) + " vs b_" + std::to_string(l) + " on " +
                 describe_tuple(t);
        });
      }
    }
  });
  return check;
}

Report verify_crystal(CrystalBounds const& bounds) {
  Report report;
  report.suite = "crystal";
  Letter const n = bounds.n;
  auto const words = words_up_to(n, bounds.word_length);
  auto tag = [](Word const& w, std::string const& what) {
    return what + " on " + format_word(w);
  };

  Check involution{"involution"};
  Check content{"content_swap"};
  Check far{"far_commutation"};
  Check braid{"braid_relation"};
  Check knuth{"knuth_compatibility"};
  Check row_tab{"commutes_with_row_reading_of_tableau"};
  Check col_tab{"commutes_with_column_reading_of_tableau"};
  Check shape{"s_tableau_preserves_shape"};
  Check classical{"classical_rule_agreement"};

  std::size_t cyclic_changed = 0;
  for (auto const& w : words) {
    for (Letter i = 1; i < n; ++i) {
      Word const sw = s_word(w, i);
      involution.expect(s_word(sw, i) == w, [&] { return tag(w, "s_" + std::to_string(i)); });

      auto c = content_of(w), sc = content_of(sw);
      c.resize(n + 1, 0);
      sc.resize(n + 1, 0);
      std::swap(c[i - 1], c[i]);
      content.expect(c == sc, [&] { return tag(w, "s_" + std::to_string(i)); });

      bool const same = s_word_classical(w, i) == sw;
      if (!same) ++cyclic_changed;
      classical.expect(same, [&] { return tag(w, "s_" + std::to_string(i)); });

      for (Letter j = i + 2; j < n; ++j) {
        far.expect(s_word(s_word(w, j), i) == s_word(s_word(w, i), j),
                   [&] { return tag(w, "s_" + std::to_string(i) + " s_" + std::to_string(j)); });
      }
      if (i + 1 < n) {
        braid.expect(s_word(s_word(s_word(w, i), i + 1), i) ==
                         s_word(s_word(s_word(w, i + 1), i), i + 1),
                     [&] { return tag(w, "s_" + std::to_string(i)); });
      }

      Tableau const t = tableau_of_word(w);
      Tableau const st = tableau_of_word(sw);
      for (auto const& v : knuth_neighbors(w)) {
        knuth.expect(tableau_of_word(s_word(v, i)) == st,
                     [&] { return tag(w, format_word(v)); });
      }
      row_tab.expect(s_word(t.reading(Reading::Rows), i) == st.reading(Reading::Rows),
                     [&] { return tag(w, "s_" + std::to_string(i)); });
      col_tab.expect(s_word(t.reading(Reading::Columns), i) == st.reading(Reading::Columns),
                     [&] { return tag(w, "s_" + std::to_string(i)); });
      bool shape_ok = false;
      try {
        shape_ok = s_tableau(t, i) == st &&
                   fill_shape(s_word(t.reading(Reading::Rows), i), t.shape()) == st;
      } catch (std::exception const&) {
        shape_ok = false;
      }
      shape.expect(shape_ok, [&] { return tag(w, "s_" + std::to_string(i)); });
    }
  }

  Check order{"matching_order_independence"};
  for (auto const& w : words_up_to(2, bounds.matching_length)) {
    auto a = match_scan(w, 1).unmatched;
    auto b = match_fixpoint(w, 1).unmatched;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    order.expect(a == b, [&] { return format_word(w); });
  }

  auto const domain = decorated_domain(n, bounds.tuple_word_length, bounds.alpha_max);
  Check readings{"tuple_row_column_agreement"};
  Check decorations{"tuple_preserves_decorations"};
  for_each_tuple(domain, bounds.tuple_width, [&](DecoratedTuple const& t) {
    for (Letter i = 1; i < n; ++i) {
      auto const by_rows = s_tuple(t, i);
      readings.expect(by_rows == s_tuple_columns(t, i), [&] { return describe_tuple(t); });
      bool same_alpha = true;
      for (std::size_t j = 0; j < t.size(); ++j) {
        same_alpha = same_alpha && by_rows[j].alpha == t[j].alpha &&
                     by_rows[j].tableau.shape() == t[j].tableau.shape();
      }
      decorations.expect(same_alpha, [&] { return describe_tuple(t); });
    }
  });

  Check compat_row = check_action_compat(BraidKind::Row, s_tuple, n, domain, bounds.tuple_width);
  Check compat_col =
      check_action_compat(BraidKind::Column, s_tuple, n, domain, bounds.tuple_width);

  for (auto* c : {&involution, &content, &far, &braid, &knuth, &row_tab, &col_tab, &shape,
                  &classical, &order, &readings, &decorations, &compat_row, &compat_col}) {
    report.checks.push_back(std::move(*c));
  }
  report.details["cyclic_clause_changed_outcome"] = cyclic_changed;
  report.details["tuple_domain_size"] = domain.size();
  return report;
}

}  // namespace plactic
