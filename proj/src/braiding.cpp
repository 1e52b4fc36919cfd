#include "plactic/braiding.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "plactic/serialize.hpp"

namespace plactic {

BraidWord delta_word(std::size_t k) {
  BraidWord word;
  for (std::size_t block = 1; block < k; ++block) {
    for (std::size_t g = block; g >= 1; --g) word.generators.push_back(g);
  }
  return word;
}

BraidedSet<int> flip_braided_set(int size) {
  BraidedSet<int> set;
  set.sigma = [](int const& x, int const& y) { return std::pair<int, int>{y, x}; };
  set.unit = 0;
  for (int i = 0; i < size; ++i) set.domain.push_back(i);
  set.format = [](int const& x) { return std::to_string(x); };
  return set;
}

std::pair<Row, Row> sigma_row(Row const& r1, Row const& r2) {
  Tableau const p = product(Tableau::from_row(r1), Tableau::from_row(r2));
  switch (p.row_count()) {
    case 0:
      return {Row{}, Row{}};
    case 1:
      return {Row{}, p.rows()[0]};
    default:
      return {p.rows()[0], p.rows()[1]};
  }
}

std::pair<Column, Column> sigma_col(Column const& c1, Column const& c2) {
  Tableau const p = product(Tableau::from_column(c1), Tableau::from_column(c2));
  auto columns = p.columns();
  switch (columns.size()) {
    case 0:
      return {Column{}, Column{}};
    case 1:
      return {columns[0], Column{}};
    default:
      return {columns[0], columns[1]};
  }
}

std::string format_decorated(DecoratedTableau const& d) {
  return "(" + format_tableau(d.tableau) + "," + std::to_string(d.alpha) + ")";
}

namespace {

std::size_t measure(BraidKind kind, Tableau const& t) {
  return kind == BraidKind::Row ? t.row_count() : t.column_count();
}

}  // namespace

std::size_t level(BraidKind kind, DecoratedTableau const& d) {
  return measure(kind, d.tableau) + d.alpha;
}

DecoratedTableau decorated_product(BraidKind kind, DecoratedTableau const& u,
                                   DecoratedTableau const& v) {
  Tableau p = product(u.tableau, v.tableau);
  std::size_t const alpha = u.alpha + v.alpha + measure(kind, u.tableau) +
                            measure(kind, v.tableau) - measure(kind, p);
  return {std::move(p), alpha};
}

std::pair<DecoratedTableau, DecoratedTableau> sigma_decorated(
    BraidKind kind, DecoratedTableau const& u, DecoratedTableau const& v) {
  Tableau const p = product(u.tableau, v.tableau);
  if (kind == BraidKind::Row) {
    std::size_t const keep = level(kind, u);
    auto const& rows = p.rows();
    if (rows.size() >= keep) {
      auto const split = rows.begin() + static_cast<std::ptrdiff_t>(rows.size() - keep);
      Tableau top(std::vector<Row>(rows.begin(), split));
      Tableau bottom(std::vector<Row>(split, rows.end()));
      std::size_t const alpha_top = level(kind, v) - top.row_count();
      return {{std::move(top), alpha_top}, {std::move(bottom), 0}};
    }
    return {{Tableau{}, level(kind, v)}, {p, keep - rows.size()}};
  }

  std::size_t const keep = level(kind, v);
  auto const columns = p.columns();
  if (columns.size() >= keep) {
    auto const split = columns.begin() + static_cast<std::ptrdiff_t>(keep);
    Tableau left = Tableau::from_columns({columns.begin(), split});
    Tableau right = Tableau::from_columns({split, columns.end()});
    std::size_t const alpha_right = level(kind, u) - right.column_count();
    return {{std::move(left), 0}, {std::move(right), alpha_right}};
  }
  return {{p, keep - columns.size()}, {Tableau{}, level(kind, u)}};
}

std::vector<Row> enumerate_rows(Letter n, std::size_t max_length) {
  std::set<Row> rows;
  for (auto const& w : words_up_to(n, max_length)) {
    if (std::is_sorted(w.begin(), w.end())) rows.insert(Row(w));
  }
  return {rows.begin(), rows.end()};
}

std::vector<Column> enumerate_columns(Letter n) {
  std::vector<Column> columns;
  for (Column::Mask m = 0; m < (Column::Mask{1} << n); ++m) {
    columns.push_back(Column::from_mask(m));
  }
  return columns;
}

BraidedSet<Row> row_braided_set(Letter n, std::size_t max_length) {
  BraidedSet<Row> set;
  set.sigma = sigma_row;
  set.unit = Row{};
  set.domain = enumerate_rows(n, max_length);
  set.format = format_row;
  return set;
}

BraidedSet<Column> column_braided_set(Letter n) {
  BraidedSet<Column> set;
  set.sigma = sigma_col;
  set.unit = Column{};
  set.domain = enumerate_columns(n);
  set.format = format_column;
  return set;
}

BraidedSet<DecoratedTableau> decorated_braided_set(
    BraidKind kind, std::vector<DecoratedTableau> domain) {
  BraidedSet<DecoratedTableau> set;
  set.sigma = [kind](DecoratedTableau const& u, DecoratedTableau const& v) {
    return sigma_decorated(kind, u, v);
  };
  set.unit = DecoratedTableau{};
  set.domain = std::move(domain);
  set.format = format_decorated;
  return set;
}

BraidedSet<Tableau> associativity_braided_set(std::vector<Tableau> domain) {
  BraidedSet<Tableau> set;
  set.sigma = [](Tableau const& v, Tableau const& w) {
    return std::pair<Tableau, Tableau>{Tableau{}, product(v, w)};
  };
  set.unit = Tableau{};
  set.domain = std::move(domain);
  set.format = format_tableau;
  return set;
}

std::vector<DecoratedTableau> decorated_domain(Letter n, std::size_t max_length,
                                               std::size_t alpha_max) {
  std::vector<DecoratedTableau> domain;
  for (auto const& t : tableaux_from_words(n, max_length)) {
    for (std::size_t a = 0; a <= alpha_max; ++a) domain.push_back({t, a});
  }
  return domain;
}

namespace {

template <class T>
std::vector<Word> to_words(std::vector<T> const& items) {
  std::vector<Word> words;
  for (auto const& x : items) words.push_back(x.letters());
  return words;
}

}  // namespace

std::vector<Word> reduced_normal_form(BraidKind kind,
                                      std::vector<Word> const& factors) {
  if (kind == BraidKind::Row) {
    std::vector<Row> rows;
    for (auto const& f : factors) rows.emplace_back(f);
    return to_words(plactic::reduced_normal_form(sigma_row, Row{}, std::move(rows)));
  }
  std::vector<Column> columns;
  for (auto const& f : factors) columns.emplace_back(f);
  return to_words(
      plactic::reduced_normal_form(sigma_col, Column{}, std::move(columns)));
}

std::vector<Word> factorization(BraidKind kind, Tableau const& tableau) {
  return kind == BraidKind::Row ? to_words(tableau.rows())
                                : to_words(tableau.columns());
}

namespace {

template <class T>
std::string describe_quad(std::array<T, 4> const& q,
                          std::string (*format)(T const&)) {
  return "sigma(" + format(q[0]) + ", " + format(q[1]) + ") = (" +
         format(q[2]) + ", " + format(q[3]) + ")";
}

// Any three entries of (a1, a2, a3 = σ(a1,a2).first, a4 = .second) determine
// the fourth within the table.
template <class T>
void check_weak_invertibility(std::vector<std::array<T, 4>> const& quads,
                              std::string (*format)(T const&), Check& check) {
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::map<std::array<T, 3>, T> seen;
    for (auto const& q : quads) {
      std::array<T, 3> key;
      for (std::size_t i = 0, j = 0; i < 4; ++i) {
        if (i != omit) key[j++] = q[i];
      }
      auto [it, inserted] = seen.emplace(key, q[omit]);
      check.expect(inserted || it->second == q[omit], [&] {
        return "entry " + std::to_string(omit + 1) + " not determined at " +
               describe_quad(q, format);
      });
    }
  }
}

}  // namespace

Report verify_row_observations(Letter n, std::size_t max_length) {
  Report report;
  report.suite = "row-observations";
  auto const rows = enumerate_rows(n, max_length);

  Check sub{"comparison_subrows"};
  Check strict{"comparison_strict"};
  Check weak{"comparison_weak"};
  Check invert{"weak_invertibility"};
  Check outer{"outer_pair_determines_inner"};
  std::vector<std::array<Row, 4>> quads;
  std::map<std::pair<Row, Row>, std::pair<Row, Row>> by_outer;

  for (auto const& r1 : rows) {
    for (auto const& r2 : rows) {
      auto const [r3, r4] = sigma_row(r1, r2);
      std::array<Row, 4> const q{r1, r2, r3, r4};
      auto describe = [&] { return describe_quad(q, format_row); };
      quads.push_back(q);
      sub.expect(is_subrow(r3, r1) && is_subrow(r2, r4), describe);
      strict.expect(row_dominates(r3, r4) && row_dominates(r3, r2), describe);
      bool ok = true;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          if (i == 2 || j == 3) ok = ok && row_dominates_weakly(q[i], q[j]);
        }
      }
      weak.expect(ok, describe);
      auto [it, inserted] = by_outer.emplace(std::pair{r1, r4}, std::pair{r2, r3});
      outer.expect(inserted || it->second == std::pair{r2, r3}, describe);
    }
  }
  check_weak_invertibility(quads, format_row, invert);

  for (auto* c : {&sub, &strict, &weak, &invert, &outer}) {
    report.checks.push_back(std::move(*c));
  }
  return report;
}

Report verify_column_observations(Letter n) {
  Report report;
  report.suite = "column-observations";
  auto const columns = enumerate_columns(n);

  Check sub{"comparison_subcolumns"};
  Check weak{"comparison_weak"};
  Check subcol{"subcolumn_characterization"};
  Check invert{"weak_invertibility"};
  std::vector<std::array<Column, 4>> quads;

  for (auto const& c1 : columns) {
    for (auto const& c2 : columns) {
      auto const [c3, c4] = sigma_col(c1, c2);
      std::array<Column, 4> const q{c1, c2, c3, c4};
      auto describe = [&] { return describe_quad(q, format_column); };
      quads.push_back(q);
      sub.expect(is_subcolumn(c1, c3) && is_subcolumn(c4, c2), describe);
      bool ok = true;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          if (i == 2 || j == 3) ok = ok && column_precedes(q[i], q[j]);
        }
      }
      weak.expect(ok, describe);

      bool const contained = is_subcolumn(c1, c2);
      bool const keeps_one = c3 == c2 || c4 == c1;
      bool ok_sub = contained == keeps_one;
      if (contained) {
        std::pair<Column, Column> const swapped{c2, c1};
        ok_sub = ok_sub && sigma_col(c1, c2) == swapped && sigma_col(c2, c1) == swapped;
      }
      subcol.expect(ok_sub, describe);
    }
  }
  check_weak_invertibility(quads, format_column, invert);

  for (auto* c : {&sub, &weak, &subcol, &invert}) {
    report.checks.push_back(std::move(*c));
  }
  return report;
}

namespace {

template <class T, class Sigma>
std::vector<T> greedy_normalize(Sigma const& sigma, std::vector<T> tuple,
                                bool& converged) {
  constexpr std::size_t kMaxSteps = 100000;
  for (std::size_t step = 0; step < kMaxSteps; ++step) {
    std::size_t j = 0;
    while (j + 1 < tuple.size() &&
           sigma(tuple[j], tuple[j + 1]) == std::pair<T, T>(tuple[j], tuple[j + 1])) {
      ++j;
    }
    if (j + 1 >= tuple.size()) {
      converged = true;
      return tuple;
    }
    apply_generator(sigma, j + 1, tuple);
  }
  converged = false;
  return tuple;
}

template <class T, class Sigma>
void check_normal_forms(Sigma const& sigma, BraidKind kind, Letter n,
                        std::size_t max_length, Report& report) {
  Check matches{"reduced_normal_form_matches_tableau"};
  Check stable{"delta_output_generator_stable"};
  Check unique{"greedy_normalization_agrees"};
  Check exchange{"product_is_braid_then_concatenate"};

  auto describe_word = [](Word const& w) { return format_word(w); };
  T const unit{};

  for (auto const& w : words_up_to(n, max_length)) {
    std::vector<T> factors;
    for (Letter a : w) factors.emplace_back(Word{a});
    auto const normal = delta_normalize(sigma, factors);

    bool fixed = is_normal(sigma, normal);
    for (std::size_t g = 1; g < normal.size(); ++g) {
      auto moved = normal;
      apply_generator(sigma, g, moved);
      fixed = fixed && moved == normal;
    }
    stable.expect(fixed, [&] { return describe_word(w); });

    std::vector<Word> reduced;
    for (auto const& x : normal) {
      if (!(x == unit)) reduced.push_back(x.letters());
    }
    matches.expect(reduced == factorization(kind, tableau_of_word(w)),
                   [&] { return describe_word(w); });

    bool converged = false;
    auto const greedy = greedy_normalize(sigma, factors, converged);
    unique.expect(converged && greedy == normal, [&] { return describe_word(w); });
  }

  auto const tableaux = tableaux_from_words(n, (max_length + 1) / 2);
  for (auto const& t1 : tableaux) {
    for (auto const& t2 : tableaux) {
      std::vector<T> joined;
      for (auto const& f : factorization(kind, t1)) joined.emplace_back(f);
      for (auto const& f : factorization(kind, t2)) joined.emplace_back(f);
      std::vector<Word> reduced;
      for (auto const& x : plactic::reduced_normal_form(sigma, unit, joined)) {
        reduced.push_back(x.letters());
      }
      exchange.expect(reduced == factorization(kind, product(t1, t2)), [&] {
        return format_tableau(t1) + " * " + format_tableau(t2);
      });
    }
  }

  for (auto* c : {&matches, &stable, &unique, &exchange}) {
    report.checks.push_back(std::move(*c));
  }
}

}  // namespace

Report verify_normal_forms(BraidKind kind, Letter n, std::size_t max_length) {
  Report report;
  report.suite = kind == BraidKind::Row ? "normal-forms-row" : "normal-forms-col";
  if (kind == BraidKind::Row) {
    check_normal_forms<Row>(sigma_row, kind, n, max_length, report);
  } else {
    check_normal_forms<Column>(sigma_col, kind, n, max_length, report);
  }
  return report;
}

Report verify_monoid_compat(BraidKind kind, Letter n, std::size_t max_length,
                            std::size_t alpha_max) {
  Report report;
  report.suite = kind == BraidKind::Row ? "monoid-row" : "monoid-col";
  auto const domain = decorated_domain(n, max_length, alpha_max);
  using D = DecoratedTableau;
  auto sigma = [kind](D const& u, D const& v) { return sigma_decorated(kind, u, v); };
  auto mul = [kind](D const& u, D const& v) { return decorated_product(kind, u, v); };
  auto describe = [](std::vector<D> const& items) {
    std::string out;
    for (auto const& d : items) out += (out.empty() ? "" : " ") + format_decorated(d);
    return out;
  };
  D const one{};

  Check unit{"unit_axiom"};
  Check left{"product_left_axiom"};
  Check right{"product_right_axiom"};
  Check commute{"braided_commutativity"};
  Check assoc{"product_associative"};
  Check ybe{"ybe"};
  Check cubed{"sigma_cubed_equals_sigma"};
  Check level_idem{"level_restriction_idempotent"};
  Check subadd{"subadditivity"};

  for (auto const& v : domain) {
    unit.expect(sigma(one, v) == std::pair{v, one} && sigma(v, one) == std::pair{one, v},
                [&] { return describe({v}); });
  }

  for (auto const& u : domain) {
    for (auto const& v : domain) {
      auto const s1 = sigma(u, v);
      auto const s2 = sigma(s1.first, s1.second);
      auto const s3 = sigma(s2.first, s2.second);
      cubed.expect(s3 == s1, [&] { return describe({u, v}); });
      if (level(kind, u) == level(kind, v)) {
        level_idem.expect(s2 == s1, [&] { return describe({u, v}); });
      }
      // σ(v, w) = (w', v') implies w' * v' = v * w.
      commute.expect(mul(s1.first, s1.second) == mul(u, v),
                     [&] { return describe({u, v}); });

      Tableau const p = product(u.tableau, v.tableau);
      subadd.expect(
          p.row_count() <= u.tableau.row_count() + v.tableau.row_count() &&
              p.column_count() <= u.tableau.column_count() + v.tableau.column_count(),
          [&] { return describe({u, v}); });
    }
  }

  for (auto const& u : domain) {
    for (auto const& v : domain) {
      D const uv = mul(u, v);
      auto const [v1, u1] = sigma(u, v);
      for (auto const& w : domain) {
        std::vector<D> const t{u, v, w};
        auto const lhs = apply_braid_word(sigma, BraidWord{{1, 2, 1}}, t);
        auto const rhs = apply_braid_word(sigma, BraidWord{{2, 1, 2}}, t);
        ybe.expect(lhs == rhs, [&] { return describe(t); });

        assoc.expect(mul(uv, w) == mul(u, mul(v, w)), [&] { return describe(t); });

        // σ(u·v, w) = (w'', u'·v') with σ(v,w) = (w',v'), σ(u,w') = (w'',u').
        auto const [w1, v2] = sigma(v, w);
        auto const [w2, u2] = sigma(u, w1);
        left.expect(sigma(uv, w) == std::pair{w2, mul(u2, v2)},
                    [&] { return describe(t); });

        // σ(u, v·w) = (v'·w', u'') with σ(u,v) = (v',u'), σ(u',w) = (w',u'').
        auto const [w3, u3] = sigma(u1, w);
        right.expect(sigma(u, mul(v, w)) == std::pair{mul(v1, w3), u3},
                     [&] { return describe(t); });
      }
    }
  }

  for (auto* c : {&unit, &left, &right, &commute, &assoc, &ybe, &cubed,
                  &level_idem, &subadd}) {
    report.checks.push_back(std::move(*c));
  }
  report.details["domain_size"] = domain.size();
  return report;
}

}  // namespace plactic
