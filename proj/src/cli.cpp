#include "plactic/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "plactic/braiding.hpp"
#include "plactic/cohomology.hpp"
#include "plactic/crystal.hpp"
#include "plactic/error.hpp"
#include "plactic/plactic_monoid.hpp"
#include "plactic/serialize.hpp"

namespace plactic {

namespace {

std::string join(std::vector<std::string> const& parts) {
  std::string out;
  for (auto const& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

BraidKind parse_kind(std::string const& text) {
  if (text == "row") return BraidKind::Row;
  if (text == "col") return BraidKind::Column;
  throw InputError("kind must be row or col, got '" + text + "'");
}

Character parse_character(std::string const& text, Letter n) {
  if (text == "eps0") return Character::eps0(n);
  if (text == "eps1") return Character::eps1(n);
  // Comma-separated letter values, e.g. "1,0,1/2".
  std::vector<Rational> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      Rational v(item);
      v.canonicalize();
      values.push_back(v);
    } catch (std::invalid_argument const&) {
      throw InputError("invalid character value '" + item + "'");
    }
  }
  if (values.size() != n) {
    throw InputError("character needs eps0, eps1 or " + std::to_string(n) + " letter values");
  }
  return Character::custom(std::move(values));
}

// Terms joined by '+', each "[c*]f:<col>,<col>,..." or "[c*]xi:<a>".
Cochain parse_cochain(std::string const& text, CochainSpace const& space) {
  std::optional<Cochain> total;
  std::stringstream stream(text);
  std::string term;
  while (std::getline(stream, term, '+')) {
    Rational coefficient = 1;
    auto const star = term.find('*');
    if (star != std::string::npos) {
      try {
        coefficient = Rational(term.substr(0, star));
        coefficient.canonicalize();
      } catch (std::invalid_argument const&) {
        throw InputError("invalid coefficient in '" + term + "'");
      }
      term = term.substr(star + 1);
    }
    Cochain piece;
    if (term.rfind("f:", 0) == 0) {
      piece = indicator(space, parse_column_tuple(term.substr(2), space.alphabet()));
    } else if (term.rfind("xi:", 0) == 0) {
      Word const a = parse_word(term.substr(3));
      if (a.size() != 1) throw InputError("xi needs a single letter");
      piece = xi(space, a[0]);
    } else {
      throw InputError("cochain term must start with f: or xi:, got '" + term + "'");
    }
    piece = scale(space, coefficient, piece);
    total = total ? add(space, *total, piece) : piece;
  }
  if (!total) throw InputError("empty cochain specification");
  return *total;
}

std::string format_factors(BraidKind kind, std::vector<Word> const& factors) {
  std::vector<std::string> parts;
  for (auto const& f : factors) {
    parts.push_back(kind == BraidKind::Row ? format_row(Row(f)) : format_column(Column(f)));
  }
  return format_tuple(parts);
}

struct VerifyOptions {
  std::string suite;
  Letter n = 0;
  std::string kind = "col";
  std::size_t max_length = 0;
  std::size_t alpha_max = 0;
  std::size_t tuple_length = 2;
  std::size_t width = 2;
  std::size_t matching_length = 10;
  std::size_t max_degree = 3;
  bool diagonal = false;
};

Report run_verify(VerifyOptions const& o) {
  if (o.n == 0) throw InputError("--n must be positive");
  BraidKind const kind = parse_kind(o.kind);
  auto braided = [&](BraidedSetOptions options) {
    std::size_t const len = o.max_length ? o.max_length : 3;
    Report r = kind == BraidKind::Row ? verify_braided_set(row_braided_set(o.n, len), options)
                                      : verify_braided_set(column_braided_set(o.n), options);
    r.suite = o.suite;
    return r;
  };
  if (o.suite == "ybe") return braided({true, false, false});
  if (o.suite == "idempotent") return braided({false, true, false});
  if (o.suite == "pseudo-unit") return braided({false, false, true});
  if (o.suite == "observations") {
    return kind == BraidKind::Row ? verify_row_observations(o.n, o.max_length ? o.max_length : 3)
                                  : verify_column_observations(o.n);
  }
  if (o.suite == "normal-form") {
    return verify_normal_forms(kind, o.n, o.max_length ? o.max_length : 5);
  }
  if (o.suite == "monoid") {
    return verify_monoid_compat(kind, o.n, o.max_length ? o.max_length : 2, o.alpha_max);
  }
  if (o.suite == "crystal") {
    CrystalBounds b;
    b.n = o.n;
    b.word_length = o.max_length ? o.max_length : 5;
    b.tuple_word_length = o.tuple_length;
    b.tuple_width = o.width;
    b.alpha_max = o.alpha_max;
    b.matching_length = o.matching_length;
    return verify_crystal(b);
  }
  if (o.suite == "commute") {
    Report r;
    r.suite = "commute";
    auto const domain = decorated_domain(o.n, o.tuple_length, o.alpha_max);
    TupleAction const action = o.diagonal ? TupleAction(s_tuple_diagonal) : TupleAction(s_tuple);
    r.checks.push_back(check_action_compat(BraidKind::Row, action, o.n, domain, o.width));
    r.checks.push_back(check_action_compat(BraidKind::Column, action, o.n, domain, o.width));
    r.details["action"] = o.diagonal ? "diagonal" : "concatenated";
    return r;
  }
  if (o.suite == "cohomology") return verify_cohomology_identities(o.n, o.max_degree);
  throw InputError("unknown suite '" + o.suite + "'");
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plactic monoids, insertion braidings and their cohomology", "plactic"};
  app.require_subcommand(1);

  std::vector<std::string> words;
  std::string side = "right", kind = "col", first, second, character = "eps0", field = "Q";
  std::string index;
  Letter n = 0;
  std::size_t k_max = 4, max_alphabet = 4;
  VerifyOptions verify;

  auto* tableau_cmd = app.add_subcommand("tableau", "Insert a word; print its tableau and shape");
  tableau_cmd->add_option("word", words, "Word")->required();

  auto* insert_cmd = app.add_subcommand("insert", "Insert a letter into a tableau");
  insert_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  insert_cmd->add_option("letter", first, "Letter")->required();
  insert_cmd->add_option("tableau", second, "Tableau, rows joined by '/'")->required();

  auto* product_cmd = app.add_subcommand("product", "Tableau product t1 * t2");
  product_cmd->add_option("t1", first)->required();
  product_cmd->add_option("t2", second)->required();

  auto* normal_cmd = app.add_subcommand("normal-form", "Reduced normal form of a word's letters");
  normal_cmd->add_option("--kind", kind, "row or col");
  normal_cmd->add_option("word", words)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Row or column braiding of two factors");
  sigma_cmd->add_option("--kind", kind, "row or col");
  sigma_cmd->add_option("u", first)->required();
  sigma_cmd->add_option("v", second)->required();

  auto* sop_cmd = app.add_subcommand("s-op", "Apply s_i to a word");
  sop_cmd->add_option("i", index)->required();
  sop_cmd->add_option("word", words)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; print a JSON report");
  verify_cmd->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"ybe", "idempotent", "pseudo-unit", "observations", "normal-form",
                             "monoid", "crystal", "commute", "cohomology"}));
  verify_cmd->add_option("--n", verify.n)->required();
  verify_cmd->add_option("--kind", verify.kind, "row or col");
  verify_cmd->add_option("--max-length", verify.max_length, "Word or row length bound");
  verify_cmd->add_option("--alpha-max", verify.alpha_max, "Largest decoration");
  verify_cmd->add_option("--tuple-length", verify.tuple_length, "Word bound for tuple entries");
  verify_cmd->add_option("--width", verify.width, "Tuple width");
  verify_cmd->add_option("--matching-length", verify.matching_length);
  verify_cmd->add_option("--max-degree", verify.max_degree);
  verify_cmd->add_flag("--diagonal", verify.diagonal, "Use componentwise s_i (commute suite)");

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the critical complex");
  betti_cmd->add_option("--n", n)->required();
  betti_cmd->add_option("--kmax", k_max);
  betti_cmd->add_option("--character", character, "eps0, eps1 or letter values a,b,...");
  betti_cmd->add_option("--field", field, "Q or GFp:<p>");
  betti_cmd->add_option("--max-alphabet", max_alphabet, "Alphabet cap");

  auto* cup_cmd = app.add_subcommand("cup", "Cup product of two cochains");
  cup_cmd->add_option("--n", n)->required();
  cup_cmd->add_option("--field", field, "Q or GFp:<p>");
  cup_cmd->add_option("f", first, "e.g. f:2 or 2*f:1,21+xi:1")->required();
  cup_cmd->add_option("g", second)->required();

  auto* center_cmd = app.add_subcommand("center", "Whether a word is central in Pl_{A_n}");
  center_cmd->add_option("--n", n)->required();
  center_cmd->add_option("word", words)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*tableau_cmd) {
      Tableau const t = tableau_of_word(parse_word(join(words)));
      out << format_tableau(t) << "\n" << "shape " << format_shape(t.shape()) << "\n";
    } else if (*insert_cmd) {
      Word const x = parse_word(first);
      if (x.size() != 1) throw InputError("insert needs exactly one letter");
      Tableau const t = parse_tableau(second);
      out << format_tableau(side == "left" ? insert_left(x[0], t) : insert_right(t, x[0])) << "\n";
    } else if (*product_cmd) {
      out << format_tableau(product(parse_tableau(first), parse_tableau(second))) << "\n";
    } else if (*normal_cmd) {
      BraidKind const k = parse_kind(kind);
      std::vector<Word> factors;
      for (Letter a : parse_word(join(words))) factors.push_back({a});
      out << format_factors(k, reduced_normal_form(k, factors)) << "\n";
    } else if (*sigma_cmd) {
      if (parse_kind(kind) == BraidKind::Row) {
        auto const [a, b] = sigma_row(parse_row(first), parse_row(second));
        out << format_tuple({format_row(a), format_row(b)}) << "\n";
      } else {
        auto const [a, b] = sigma_col(parse_column(first), parse_column(second));
        out << format_tuple({format_column(a), format_column(b)}) << "\n";
      }
    } else if (*sop_cmd) {
      Word const i = parse_word(index);
      if (i.size() != 1) throw InputError("s-op needs a single operator index");
      out << format_word(s_word(parse_word(join(words)), i[0])) << "\n";
    } else if (*verify_cmd) {
      Report const r = run_verify(verify);
      out << r.to_json().dump(2) << "\n";
      return r.passed() ? 0 : 1;
    } else if (*betti_cmd) {
      Limits limits;
      limits.max_alphabet = static_cast<Letter>(max_alphabet);
      out << betti_report(n, k_max, parse_character(character, n), Field::parse(field), limits).dump()
          << "\n";
    } else if (*cup_cmd) {
      CochainSpace const space(n, Field::parse(field));
      Cochain const f = parse_cochain(first, space), g = parse_cochain(second, space);
      out << cochain_to_json(space, cup(space, f, g)).dump() << "\n";
    } else if (*center_cmd) {
      out << (is_central(parse_word(join(words)), n) ? "true" : "false") << "\n";
    }
  } catch (InputError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (ResourceError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace plactic
