#include "plactic/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "plactic/braiding.hpp"
#include "plactic/error.hpp"
#include "plactic/serialize.hpp"

namespace plactic {

// ---------------------------------------------------------------- columns --

ColumnBraiding::ColumnBraiding(Letter n) : n_(n), table_(size() * size()) {
  for (ColumnMask x = 0; x < size(); ++x) {
    for (ColumnMask y = 0; y < size(); ++y) {
      auto const [l, r] = sigma_col(Column::from_mask(x), Column::from_mask(y));
      table_[x * size() + y] = {l.mask(), r.mask()};
    }
  }
}

ColumnBraiding const& ColumnBraiding::get(Letter n) {
  if (n > 12) throw ResourceError("column braiding table limited to n <= 12");
  static std::mutex mutex;
  static std::map<Letter, std::unique_ptr<ColumnBraiding>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new ColumnBraiding(n));
  return *slot;
}

void ColumnBraiding::apply(std::size_t generator, ColumnTuple& tuple) const {
  auto const [l, r] = sigma(tuple[generator - 1], tuple[generator]);
  tuple[generator - 1] = l;
  tuple[generator] = r;
}

ColumnMask column_mask(Column const& column) { return column.mask(); }
Column column_of_mask(ColumnMask mask) { return Column::from_mask(mask); }

std::string format_column_tuple(ColumnTuple const& tuple) {
  std::vector<std::string> parts;
  for (auto m : tuple) parts.push_back(format_column(Column::from_mask(m)));
  return format_tuple(parts);
}

ColumnTuple parse_column_tuple(std::string const& text, Letter n) {
  ColumnTuple tuple;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    Column const c = parse_column(item);
    validate_letters(c.letters(), n);
    tuple.push_back(c.mask());
  }
  return tuple;
}

bool is_critical(ColumnBraiding const& braiding, ColumnTuple const& tuple) {
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    if (tuple[j] == 0) return false;
    if (j + 1 < tuple.size() && braiding.fixed(tuple[j], tuple[j + 1])) return false;
  }
  return true;
}

// -------------------------------------------------------------- character --

Character Character::eps0(Letter n) { return {"eps0", std::vector<Rational>(n, 0)}; }
Character Character::eps1(Letter n) { return {"eps1", std::vector<Rational>(n, 1)}; }
Character Character::custom(std::vector<Rational> values) {
  return {"custom", std::move(values)};
}

Rational Character::on_column(ColumnMask mask) const {
  Rational value = 1;
  for (Letter a = 1; mask != 0; ++a, mask >>= 1) {
    if (!(mask & 1u)) continue;
    if (a > letter_values.size()) throw InputError("character undefined on letter " + std::to_string(a));
    value *= letter_values[a - 1];
  }
  return value;
}

Rational Character::on_word(Word const& word) const {
  Rational value = 1;
  for (Letter a : word) {
    if (a == 0 || a > letter_values.size()) {
      throw InputError("character undefined on letter " + std::to_string(a));
    }
    value *= letter_values[a - 1];
  }
  return value;
}

Rational Character::on_tableau(Tableau const& tableau) const {
  return on_word(tableau.reading(Reading::Rows));
}

nlohmann::ordered_json Character::to_json() const {
  if (label == "eps0" || label == "eps1") return label;
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < letter_values.size(); ++a) {
    j[std::to_string(a + 1)] = letter_values[a].get_str();
  }
  return j;
}

// ------------------------------------------------------------------ bases --

std::vector<ColumnTuple> critical_basis(Letter n, std::size_t k, Limits const& limits) {
  if (n == 0) throw InputError("alphabet size must be positive");
  if (n > limits.max_alphabet) {
    throw ResourceError("alphabet size " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(limits.max_alphabet));
  }
  if (k > limits.max_degree) {
    throw ResourceError("degree " + std::to_string(k) + " exceeds the cap " +
                        std::to_string(limits.max_degree));
  }
  auto const& braiding = ColumnBraiding::get(n);
  std::vector<ColumnTuple> basis;
  ColumnTuple prefix;
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == k) {
      if (basis.size() == limits.max_basis) {
        throw ResourceError("critical basis in degree " + std::to_string(k) +
                            " exceeds " + std::to_string(limits.max_basis) + " elements");
      }
      basis.push_back(prefix);
      return;
    }
    for (ColumnMask c = 1; c < braiding.size(); ++c) {
      if (!prefix.empty() && braiding.fixed(prefix.back(), c)) continue;
      prefix.push_back(c);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return basis;
}

CochainSpace::CochainSpace(Letter n, Field field, Limits limits)
    : n_(n), field_(field), limits_(limits) {
  if (n == 0) throw InputError("alphabet size must be positive");
  if (n > limits_.max_alphabet) {
    throw ResourceError("alphabet size " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(limits_.max_alphabet));
  }
  braiding_ = &ColumnBraiding::get(n);
}

std::vector<ColumnTuple> const& CochainSpace::basis(std::size_t k) const {
  auto it = bases_.find(k);
  if (it == bases_.end()) it = bases_.emplace(k, critical_basis(n_, k, limits_)).first;
  return it->second;
}

std::size_t CochainSpace::index_of(ColumnTuple const& tuple) const {
  if (!is_critical(*braiding_, tuple)) return npos;
  auto const& b = basis(tuple.size());
  auto it = std::lower_bound(b.begin(), b.end(), tuple);
  return it != b.end() && *it == tuple ? static_cast<std::size_t>(it - b.begin()) : npos;
}

// -------------------------------------------------------------- cochains --

Cochain zero_cochain(CochainSpace const& space, std::size_t degree) {
  return {degree, std::vector<Rational>(space.dim(degree), 0)};
}

Cochain indicator(CochainSpace const& space, ColumnTuple const& tuple) {
  std::size_t const index = space.index_of(tuple);
  if (index == CochainSpace::npos) {
    throw InputError("tuple " + format_column_tuple(tuple) + " is not critical");
  }
  Cochain f = zero_cochain(space, tuple.size());
  f.coeffs[index] = 1;
  return f;
}

Cochain xi(CochainSpace const& space, Letter a) {
  if (a == 0 || a > space.alphabet()) throw InputError("letter out of range for xi");
  Cochain f = zero_cochain(space, 1);
  auto const& b = space.basis(1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j][0] >> (a - 1) & 1u) f.coeffs[j] = 1;
  }
  return f;
}

Rational evaluate(CochainSpace const& space, Cochain const& f, ColumnTuple const& tuple) {
  if (tuple.size() != f.degree) throw InputError("tuple length differs from cochain degree");
  std::size_t const index = space.index_of(tuple);
  return index == CochainSpace::npos ? Rational(0) : f.coeffs[index];
}

Cochain add(CochainSpace const& space, Cochain const& f, Cochain const& g) {
  if (f.degree != g.degree) throw InputError("cannot add cochains of different degrees");
  Cochain h = f;
  for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
    h.coeffs[j] = space.field().normalize(h.coeffs[j] + g.coeffs[j]);
  }
  return h;
}

Cochain scale(CochainSpace const& space, Rational const& c, Cochain const& f) {
  Cochain h = f;
  for (auto& v : h.coeffs) v = space.field().normalize(c * v);
  return h;
}

bool is_zero(Cochain const& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](Rational const& v) { return v == 0; });
}

SparseVector to_sparse(Cochain const& f) {
  SparseVector v;
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (f.coeffs[j] != 0) v.emplace_back(j, f.coeffs[j]);
  }
  return v;
}

nlohmann::ordered_json cochain_to_json(CochainSpace const& space, Cochain const& f) {
  nlohmann::ordered_json j;
  j["degree"] = f.degree;
  j["field"] = space.field().name();
  j["basis"] = nlohmann::ordered_json::array();
  j["coefficients"] = nlohmann::ordered_json::array();
  auto const& b = space.basis(f.degree);
  for (std::size_t i = 0; i < b.size(); ++i) {
    j["basis"].push_back(format_column_tuple(b[i]));
    j["coefficients"].push_back(f.coeffs[i].get_str());
  }
  nlohmann::ordered_json support = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (f.coeffs[i] != 0) support[format_column_tuple(b[i])] = f.coeffs[i].get_str();
  }
  j["support"] = support;
  return j;
}

// ------------------------------------------------------------------ lifts --

std::vector<std::size_t> lift_insertion(std::vector<std::size_t> const& target) {
  std::vector<std::size_t> arrangement(target.size());
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::vector<std::size_t> generators;
  for (std::size_t j = 0; j < target.size(); ++j) {
    auto cur = static_cast<std::size_t>(
        std::find(arrangement.begin(), arrangement.end(), target[j]) - arrangement.begin());
    for (; cur > j; --cur) {
      generators.push_back(cur);
      std::swap(arrangement[cur - 1], arrangement[cur]);
    }
  }
  return generators;
}

std::vector<std::size_t> lift_bubble_right(std::vector<std::size_t> const& target) {
  std::vector<std::size_t> arrangement(target.size());
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::vector<std::size_t> generators;
  for (std::size_t j = target.size(); j-- > 0;) {
    auto cur = static_cast<std::size_t>(
        std::find(arrangement.begin(), arrangement.end(), target[j]) - arrangement.begin());
    for (; cur < j; ++cur) {
      generators.push_back(cur + 1);
      std::swap(arrangement[cur], arrangement[cur + 1]);
    }
  }
  return generators;
}

ColumnTuple apply_lift(ColumnBraiding const& braiding, std::vector<std::size_t> const& generators,
                       ColumnTuple tuple) {
  for (std::size_t g : generators) braiding.apply(g, tuple);
  return tuple;
}

namespace {

Rational sign_of(std::size_t length) { return length % 2 == 0 ? 1 : -1; }

// Calls visit(target) for every (p, q)-shuffle: target lists the p chosen
// indices in increasing order followed by the remaining ones.
template <class Visit>
void for_each_shuffle(std::size_t p, std::size_t q, Visit&& visit) {
  std::vector<bool> chosen(p + q, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    std::vector<std::size_t> target;
    for (std::size_t i = 0; i < p + q; ++i) {
      if (chosen[i]) target.push_back(i);
    }
    for (std::size_t i = 0; i < p + q; ++i) {
      if (!chosen[i]) target.push_back(i);
    }
    visit(target);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
}

}  // namespace

Cochain cup(CochainSpace const& space, Cochain const& f, Cochain const& g) {
  std::size_t const p = f.degree, q = g.degree;
  Cochain h = zero_cochain(space, p + q);
  auto const& braiding = space.braiding();
  auto const& b = space.basis(p + q);
  for (std::size_t r = 0; r < b.size(); ++r) {
    Rational total = 0;
    for_each_shuffle(p, q, [&](std::vector<std::size_t> const& target) {
      auto const word = lift_insertion(target);
      ColumnTuple const y = apply_lift(braiding, word, b[r]);
      ColumnTuple const left(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(p));
      ColumnTuple const right(y.begin() + static_cast<std::ptrdiff_t>(p), y.end());
      Rational const fv = evaluate(space, f, left);
      if (fv == 0) return;
      total += sign_of(word.size()) * fv * evaluate(space, g, right);
    });
    h.coeffs[r] = space.field().normalize(total);
  }
  return h;
}

FormalSum quantum_symmetrizer(ColumnBraiding const& braiding, ColumnTuple const& tuple) {
  FormalSum sum;
  std::vector<std::size_t> target(tuple.size());
  std::iota(target.begin(), target.end(), 0);
  do {
    auto const word = lift_insertion(target);
    sum[apply_lift(braiding, word, tuple)] += word.size() % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(target.begin(), target.end()));
  std::erase_if(sum, [](auto const& term) { return term.second == 0; });
  return sum;
}

// ------------------------------------------------------------ differential --

BraidedComplex::BraidedComplex(CochainSpace const& space, Character character)
    : space_(space), character_(std::move(character)) {
  if (character_.letter_values.size() < space.alphabet()) {
    throw InputError("character must give a value for every letter");
  }
}

// d f(x) = Σ_i (-1)^{i-1} [ε(x'_i) f(x'_1..x'_{i-1}, x_{i+1}..x_k)
//                          - f(x_1..x_{i-1}, x''_i..x''_{k-1}) ε(x''_k)]
// where x_i is braided to the front of x_1..x_i, resp. to the back of x_i..x_k.
template <class Visit>
void BraidedComplex::expand(ColumnTuple const& x, Visit&& visit) const {
  auto const& braiding = space_.braiding();
  std::size_t const k = x.size();
  for (std::size_t i = 1; i <= k; ++i) {
    Rational const sign = sign_of(i - 1);

    ColumnTuple prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t g = i - 1; g >= 1; --g) braiding.apply(g, prefix);
    Rational const left = character_.on_column(prefix.front());
    if (left != 0) {
      ColumnTuple tau(prefix.begin() + 1, prefix.end());
      tau.insert(tau.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
      visit(sign * left, tau);
    }

    ColumnTuple suffix(x.begin() + static_cast<std::ptrdiff_t>(i - 1), x.end());
    for (std::size_t g = 1; g < suffix.size(); ++g) braiding.apply(g, suffix);
    Rational const right = character_.on_column(suffix.back());
    if (right != 0) {
      ColumnTuple tau(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i - 1));
      tau.insert(tau.end(), suffix.begin(), suffix.end() - 1);
      visit(-sign * right, tau);
    }
  }
}

Rational BraidedComplex::coboundary_at(Cochain const& f, ColumnTuple const& x) const {
  if (x.size() != f.degree + 1) throw InputError("tuple length must be degree + 1");
  Rational total = 0;
  expand(x, [&](Rational const& c, ColumnTuple const& tau) { total += c * evaluate(space_, f, tau); });
  return space_.field().normalize(total);
}

Cochain BraidedComplex::coboundary(Cochain const& f) const {
  Cochain h = zero_cochain(space_, f.degree + 1);
  auto const& b = space_.basis(f.degree + 1);
  for (std::size_t r = 0; r < b.size(); ++r) h.coeffs[r] = coboundary_at(f, b[r]);
  return h;
}

SparseMatrix const& BraidedComplex::differential(std::size_t k) const {
  if (k == 0) throw InputError("differentials start at d^1");
  auto it = differentials_.find(k);
  if (it != differentials_.end()) return it->second;

  auto const& rows = space_.basis(k);
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = space_.dim(k - 1);
  m.entries.resize(m.rows);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::map<std::size_t, Rational> acc;
    expand(rows[r], [&](Rational const& c, ColumnTuple const& tau) {
      std::size_t const col = space_.index_of(tau);
      if (col != CochainSpace::npos) acc[col] += c;
    });
    for (auto& [col, v] : acc) {
      Rational const value = space_.field().normalize(v);
      if (value != 0) m.entries[r].emplace_back(col, value);
    }
  }
  return differentials_.emplace(k, std::move(m)).first->second;
}

std::size_t BraidedComplex::rank(std::size_t k) const {
  if (k == 0) return 0;
  auto it = ranks_.find(k);
  if (it != ranks_.end()) return it->second;
  std::size_t const r = plactic::rank(differential(k), space_.field());
  ranks_.emplace(k, r);
  return r;
}

bool BraidedComplex::is_cocycle(Cochain const& f) const { return is_zero(coboundary(f)); }

bool BraidedComplex::is_coboundary(Cochain const& f) const {
  if (f.degree == 0) return is_zero(f);
  return in_column_space(differential(f.degree), to_sparse(f), space_.field());
}

std::vector<std::size_t> BraidedComplex::betti(std::size_t k_max) const {
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k <= k_max; ++k) {
    result.push_back(space_.dim(k) - rank(k + 1) - rank(k));
  }
  return result;
}

SparseMatrix differential_matrix(CochainSpace const& space, Character const& character,
                                 std::size_t k) {
  return BraidedComplex(space, character).differential(k);
}

nlohmann::ordered_json betti_report(Letter n, std::size_t k_max, Character const& character,
                                    Field const& field, Limits const& limits) {
  CochainSpace space(n, field, limits);
  if (k_max + 1 > limits.max_degree) {
    throw ResourceError("degree " + std::to_string(k_max) + " exceeds the cap");
  }
  BraidedComplex complex(space, character);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["character"] = character.to_json();
  j["field"] = field.name();
  std::vector<std::size_t> dims, ranks;
  for (std::size_t k = 0; k <= k_max; ++k) dims.push_back(space.dim(k));
  for (std::size_t k = 0; k <= k_max + 1; ++k) ranks.push_back(complex.rank(k));
  j["dims"] = dims;
  j["betti"] = complex.betti(k_max);
  j["ranks"] = ranks;
  return j;
}

// ------------------------------------------------------------- Hochschild --

HochschildCochain hochschild_indicator(std::vector<Tableau> support) {
  std::size_t const degree = support.size();
  return {degree, [support = std::move(support)](std::vector<Tableau> const& x) {
            return x == support ? Rational(1) : Rational(0);
          }};
}

HochschildCochain zeta(Letter a) {
  return {1, [a](std::vector<Tableau> const& x) {
            auto const content = x.at(0).content();
            return Rational(a <= content.size() ? static_cast<unsigned long>(content[a - 1]) : 0ul);
          }};
}

HochschildCochain hochschild_coboundary(HochschildCochain const& f, Character const& character) {
  std::size_t const k = f.degree + 1;
  return {k, [f, character, k](std::vector<Tableau> const& x) {
            Rational total = character.on_tableau(x.front()) *
                             f.eval(std::vector<Tableau>(x.begin() + 1, x.end()));
            for (std::size_t j = 1; j < k; ++j) {
              std::vector<Tableau> merged(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j - 1));
              merged.push_back(product(x[j - 1], x[j]));
              merged.insert(merged.end(), x.begin() + static_cast<std::ptrdiff_t>(j + 1), x.end());
              total += sign_of(j) * f.eval(merged);
            }
            total += sign_of(k) * f.eval(std::vector<Tableau>(x.begin(), x.end() - 1)) *
                     character.on_tableau(x.back());
            return total;
          }};
}

Rational symmetrizer_pullback_at(ColumnBraiding const& braiding, HochschildCochain const& f,
                                 ColumnTuple const& tuple) {
  if (tuple.size() != f.degree) throw InputError("tuple length differs from cochain degree");
  Rational total = 0;
  for (auto const& [term, coefficient] : quantum_symmetrizer(braiding, tuple)) {
    std::vector<Tableau> tableaux;
    for (auto m : term) tableaux.push_back(Tableau::from_column(Column::from_mask(m)));
    total += Rational(static_cast<long>(coefficient)) * f.eval(tableaux);
  }
  return total;
}

Cochain symmetrizer_pullback(CochainSpace const& space, HochschildCochain const& f) {
  Cochain h = zero_cochain(space, f.degree);
  auto const& b = space.basis(f.degree);
  for (std::size_t r = 0; r < b.size(); ++r) {
    h.coeffs[r] = space.field().normalize(symmetrizer_pullback_at(space.braiding(), f, b[r]));
  }
  return h;
}

// ------------------------------------------------------------- witnesses --

std::vector<ColumnTuple> h2_basis_epsilon0(Letter n) {
  std::vector<ColumnTuple> pairs;
  for (Letter b = 2; b <= n; ++b) {
    for (Letter d = 1; d < b; ++d) {
      ColumnMask const bd = (ColumnMask{1} << (b - 1)) | (ColumnMask{1} << (d - 1));
      for (Letter a = 1; a <= b; ++a) pairs.push_back({ColumnMask{1} << (a - 1), bd});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ColumnTuple staircase_tuple(std::vector<Letter> const& letters) {
  ColumnTuple tuple;
  ColumnMask mask = 0;
  for (Letter a : letters) {
    mask |= ColumnMask{1} << (a - 1);
    tuple.push_back(mask);
  }
  return tuple;
}

ColumnTuple alternating_tuple(std::size_t k) {
  constexpr ColumnMask one = 0b1, two = 0b10, three_two = 0b110;
  ColumnTuple tuple;
  if (k % 2 == 1) tuple.push_back(two);
  while (tuple.size() < k) {
    tuple.push_back(one);
    tuple.push_back(three_two);
  }
  return tuple;
}

namespace {

std::vector<std::vector<Letter>> increasing_subsets(Letter n, std::size_t k) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> current;
  auto extend = [&](auto&& self, Letter from) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (Letter a = from; a <= n; ++a) {
      current.push_back(a);
      self(self, a + 1);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

std::string format_letters(std::vector<Letter> const& letters) {
  std::string out;
  for (Letter a : letters) out += (out.empty() ? "" : ",") + std::to_string(a);
  return "{" + out + "}";
}

}  // namespace

Report exterior_witness(Letter n, std::size_t k, Field const& field, Limits const& limits) {
  Report report;
  report.suite = "exterior-witness";
  report.details["n"] = n;
  report.details["k"] = k;
  CochainSpace space(n, field, limits);
  if (k == 0) throw InputError("witness degree must be positive");

  if (k <= n) {
    BraidedComplex complex(space, Character::eps1(n));
    auto const subsets = increasing_subsets(n, k);
    Check cocycle{"xi_products_are_cocycles"};
    Check vanish{"coboundaries_vanish_on_staircases"};
    Check triangular{"staircase_matrix_unitriangular"};
    Check independent{"xi_products_independent_in_cohomology"};

    std::vector<Cochain> products;
    for (auto const& a : subsets) {
      Cochain p = xi(space, a[0]);
      for (std::size_t j = 1; j < a.size(); ++j) p = cup(space, p, xi(space, a[j]));
      cocycle.expect(complex.is_cocycle(p), [&] { return format_letters(a); });
      products.push_back(std::move(p));
    }
    SparseMatrix const& d = complex.differential(k);
    nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < subsets.size(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < subsets.size(); ++c) {
        ColumnTuple const stair = staircase_tuple(subsets[c]);
        Rational const v = evaluate(space, products[r], stair);
        row.push_back(v.get_str());
        bool const ok = r == c ? v == 1 : (c < r ? v == 0 : true);
        triangular.expect(ok, [&] {
          return format_letters(subsets[r]) + " on " + format_column_tuple(stair);
        });
      }
      matrix.push_back(row);
    }
    for (auto const& a : subsets) {
      ColumnTuple const stair = staircase_tuple(a);
      std::size_t const index = space.index_of(stair);
      vanish.expect(index != CochainSpace::npos && d.entries[index].empty(),
                    [&] { return format_column_tuple(stair); });
    }
    // Direct check: the classes span a subspace of dimension C(n,k) modulo
    // coboundaries.
    Echelon echelon(field);
    for (auto const& column : d.transpose().entries) echelon.insert(column);
    std::size_t const base = echelon.rank();
    for (auto const& p : products) echelon.insert(to_sparse(p));
    independent.expect(echelon.rank() - base == products.size(), [&] {
      return std::to_string(echelon.rank() - base) + " of " + std::to_string(products.size());
    });
    report.details["eps1_staircase_matrix"] = matrix;
    for (auto* c : {&cocycle, &vanish, &triangular, &independent}) {
      report.checks.push_back(std::move(*c));
    }
  }

  if (n >= 3) {
    BraidedComplex complex(space, Character::eps0(n));
    ColumnTuple const tuple = alternating_tuple(k);
    report.details["eps0_tuple"] = format_column_tuple(tuple);
    Check critical{"alternating_tuple_critical"};
    Check cocycle{"alternating_indicator_is_cocycle"};
    Check vanish{"coboundaries_vanish_on_alternating_tuple"};
    std::size_t const index = space.index_of(tuple);
    critical.record(index != CochainSpace::npos, format_column_tuple(tuple));
    if (index != CochainSpace::npos) {
      cocycle.record(complex.is_cocycle(indicator(space, tuple)), format_column_tuple(tuple));
      vanish.record(complex.differential(k).entries[index].empty(), format_column_tuple(tuple));
    }
    for (auto* c : {&critical, &cocycle, &vanish}) report.checks.push_back(std::move(*c));
  }
  return report;
}

// ---------------------------------------------------------- identities --

namespace {

std::vector<ColumnTuple> all_tuples(Letter n, std::size_t k) {
  std::size_t const count = std::size_t{1} << n;
  std::vector<ColumnTuple> out;
  ColumnTuple t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t j = k;
    while (j > 0 && t[j - 1] + 1 == count) t[--j] = 0;
    if (j == 0) break;
    ++t[j - 1];
  }
  return out;
}

std::vector<Cochain> basis_cochains(CochainSpace const& space, std::size_t k) {
  std::vector<Cochain> out;
  for (auto const& t : space.basis(k)) out.push_back(indicator(space, t));
  return out;
}

std::string describe_basis(CochainSpace const& space, std::vector<Cochain const*> const& fs) {
  std::string out;
  for (auto const* f : fs) {
    auto const& b = space.basis(f->degree);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (f->coeffs[j] != 0) out += (out.empty() ? "f" : " f") + format_column_tuple(b[j]);
    }
  }
  return out;
}

}  // namespace

Report verify_cohomology_identities(Letter n, std::size_t max_degree, Field const& field) {
  Report report;
  report.suite = "cohomology-identities";
  CochainSpace space(n, field);
  std::vector<Character> const characters{Character::eps0(n), Character::eps1(n)};

  Check dd{"d_squared_zero"};
  Check well{"coboundary_vanishes_off_critical"};
  for (auto const& ch : characters) {
    BraidedComplex complex(space, ch);
    for (std::size_t k = 1; k <= max_degree; ++k) {
      auto const& outer = complex.differential(k + 1);
      auto const& inner = complex.differential(k);
      for (std::size_t r = 0; r < outer.rows; ++r) {
        std::map<std::size_t, Rational> acc;
        for (auto const& [mid, v] : outer.entries[r]) {
          for (auto const& [c, w] : inner.entries[mid]) acc[c] += v * w;
        }
        bool ok = true;
        for (auto const& [c, v] : acc) ok = ok && field.normalize(v) == 0;
        dd.expect(ok, [&] {
          return ch.label + " k=" + std::to_string(k) + " row " +
                 format_column_tuple(space.basis(k + 1)[r]);
        });
      }
    }
    for (std::size_t k = 0; k + 1 <= std::min<std::size_t>(max_degree, 3); ++k) {
      auto const tuples = all_tuples(n, k + 1);
      for (auto const& f : basis_cochains(space, k)) {
        for (auto const& x : tuples) {
          if (is_critical(space.braiding(), x)) continue;
          well.expect(complex.coboundary_at(f, x) == 0, [&] {
            return ch.label + " " + describe_basis(space, {&f}) + " at " + format_column_tuple(x);
          });
        }
      }
    }
  }

  Check assoc{"cup_associative"};
  Check leibniz{"leibniz_rule"};
  std::size_t const cup_degree = std::min<std::size_t>(max_degree, 4);
  for (std::size_t p = 1; p <= cup_degree; ++p) {
    for (std::size_t q = 1; p + q <= cup_degree; ++q) {
      for (std::size_t r = 1; p + q + r <= cup_degree; ++r) {
        auto const fs = basis_cochains(space, p), gs = basis_cochains(space, q),
                   hs = basis_cochains(space, r);
        for (auto const& f : fs) {
          for (auto const& g : gs) {
            Cochain const fg = cup(space, f, g);
            for (auto const& h : hs) {
              assoc.expect(cup(space, fg, h) == cup(space, f, cup(space, g, h)),
                           [&] { return describe_basis(space, {&f, &g, &h}); });
            }
          }
        }
      }
    }
  }
  for (auto const& ch : characters) {
    BraidedComplex complex(space, ch);
    for (std::size_t p = 1; p < cup_degree; ++p) {
      for (std::size_t q = 1; p + q < cup_degree; ++q) {
        for (auto const& f : basis_cochains(space, p)) {
          for (auto const& g : basis_cochains(space, q)) {
            Cochain const lhs = complex.coboundary(cup(space, f, g));
            Cochain const rhs =
                add(space, cup(space, complex.coboundary(f), g),
                    scale(space, sign_of(p), cup(space, f, complex.coboundary(g))));
            leibniz.expect(lhs == rhs, [&] { return ch.label + " " + describe_basis(space, {&f, &g}); });
          }
        }
      }
    }
  }

  Check lifts{"lift_independent_of_reduced_word"};
  for (std::size_t width = 2; width <= 4; ++width) {
    auto const tuples = all_tuples(std::min<Letter>(n, 2), width);
    auto const& braiding = ColumnBraiding::get(std::min<Letter>(n, 2));
    std::vector<std::size_t> target(width);
    std::iota(target.begin(), target.end(), 0);
    do {
      auto const a = lift_insertion(target), b = lift_bubble_right(target);
      for (auto const& x : tuples) {
        lifts.expect(a.size() == b.size() && apply_lift(braiding, a, x) == apply_lift(braiding, b, x),
                     [&] { return format_column_tuple(x); });
      }
    } while (std::next_permutation(target.begin(), target.end()));
  }

  Check chain{"symmetrizer_chain_map"};
  Check crit{"symmetrizer_pullback_critical"};
  {
    std::vector<Tableau> support_set;
    for (auto const& t : tableaux_from_words(n, 2)) {
      if (!t.empty()) support_set.push_back(t);
    }
    std::vector<HochschildCochain> oracles{hochschild_indicator({})};
    for (auto const& t : support_set) oracles.push_back(hochschild_indicator({t}));
    for (auto const& t : support_set) {
      for (auto const& u : support_set) oracles.push_back(hochschild_indicator({t, u}));
    }
    for (Letter a = 1; a <= n; ++a) oracles.push_back(zeta(a));
    std::size_t const top = std::min<std::size_t>(max_degree, 3);
    for (auto const& ch : characters) {
      BraidedComplex complex(space, ch);
      for (auto const& f : oracles) {
        if (f.degree + 1 > top) continue;
        Cochain const pulled = symmetrizer_pullback(space, f);
        for (auto const& x : all_tuples(n, f.degree)) {
          if (is_critical(space.braiding(), x)) continue;
          crit.expect(field.normalize(symmetrizer_pullback_at(space.braiding(), f, x)) == 0,
                      [&] { return format_column_tuple(x); });
        }
        HochschildCochain const df = hochschild_coboundary(f, ch);
        for (auto const& x : space.basis(f.degree + 1)) {
          Rational const lhs = complex.coboundary_at(pulled, x);
          Rational const rhs = field.normalize(symmetrizer_pullback_at(space.braiding(), df, x));
          chain.expect(lhs == rhs, [&] { return ch.label + " at " + format_column_tuple(x); });
        }
      }
    }
  }

  Check law{"character_law"};
  {
    auto const& braiding = ColumnBraiding::get(3);
    std::vector<Character> const samples{
        Character::custom({Rational(2), Rational(3), Rational(5)}),
        Character::custom({Rational(-1, 2), Rational(7), Rational(0)}),
        Character::custom({Rational(1), Rational(-1), Rational(4, 3)})};
    for (auto const& ch : samples) {
      for (ColumnMask x = 0; x < braiding.size(); ++x) {
        for (ColumnMask y = 0; y < braiding.size(); ++y) {
          auto const [l, r] = braiding.sigma(x, y);
          law.expect(ch.on_column(x) * ch.on_column(y) == ch.on_column(l) * ch.on_column(r),
                     [&] { return format_column_tuple({x, y}); });
        }
      }
    }
  }

  for (auto* c : {&dd, &well, &assoc, &leibniz, &lifts, &chain, &crit, &law}) {
    report.checks.push_back(std::move(*c));
  }
  return report;
}

}  // namespace plactic
