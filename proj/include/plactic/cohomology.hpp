#pragma once

// Braided cohomology of (Col_A, σ_C, e_C) with coefficients in a braided
// character, which computes the Hochschild cohomology of Pl_A.
//
// Columns are encoded as subset masks (bit a-1 for letter a; 0 is e_C).
// Critical k-tuples are ordered lexicographically by masks.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plactic/linalg.hpp"
#include "plactic/report.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

using ColumnMask = Column::Mask;
using ColumnTuple = std::vector<ColumnMask>;

struct Limits {
  Letter max_alphabet = 4;
  std::size_t max_degree = 16;
  std::size_t max_basis = 50000;
};

/// σ_C tabulated on all 2^n x 2^n mask pairs. Instances are cached per n.
class ColumnBraiding {
 public:
  static ColumnBraiding const& get(Letter n);

  Letter alphabet() const noexcept { return n_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }
  std::pair<ColumnMask, ColumnMask> sigma(ColumnMask x, ColumnMask y) const {
    return table_[x * size() + y];
  }
  bool fixed(ColumnMask x, ColumnMask y) const {
    return table_[x * size() + y] == std::pair{x, y};
  }
  /// Applies b_g (1-based) to the tuple in place.
  void apply(std::size_t generator, ColumnTuple& tuple) const;

 private:
  explicit ColumnBraiding(Letter n);
  Letter n_;
  std::vector<std::pair<ColumnMask, ColumnMask>> table_;
};

ColumnMask column_mask(Column const& column);
Column column_of_mask(ColumnMask mask);
std::string format_column_tuple(ColumnTuple const& tuple);
/// Parses "2,1,21"-style tuples (columns separated by commas, compact digits).
ColumnTuple parse_column_tuple(std::string const& text, Letter n);

/// A braided character determined by its letter values.
struct Character {
  std::string label;
  std::vector<Rational> letter_values;  // entry a-1 is ε(a)

  static Character eps0(Letter n);
  static Character eps1(Letter n);
  static Character custom(std::vector<Rational> values);

  Rational on_column(ColumnMask mask) const;
  Rational on_word(Word const& word) const;
  Rational on_tableau(Tableau const& tableau) const;
  nlohmann::ordered_json to_json() const;
};

/// Non-empty columns with no σ_C-fixed adjacent pair, lexicographic by mask.
std::vector<ColumnTuple> critical_basis(Letter n, std::size_t k, Limits const& limits = {});

bool is_critical(ColumnBraiding const& braiding, ColumnTuple const& tuple);

/// Critical bases for all degrees of one alphabet, with tuple lookup.
class CochainSpace {
 public:
  CochainSpace(Letter n, Field field, Limits limits = {});

  Letter alphabet() const noexcept { return n_; }
  Field const& field() const noexcept { return field_; }
  ColumnBraiding const& braiding() const noexcept { return *braiding_; }

  std::vector<ColumnTuple> const& basis(std::size_t k) const;
  std::size_t dim(std::size_t k) const { return basis(k).size(); }
  /// Index of a critical tuple in basis(size), or npos when it is not critical.
  std::size_t index_of(ColumnTuple const& tuple) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Letter n_;
  Field field_;
  Limits limits_;
  ColumnBraiding const* braiding_;
  mutable std::map<std::size_t, std::vector<ColumnTuple>> bases_;
};

/// A critical cochain in basis coordinates; entries are normalized for the
/// field.
struct Cochain {
  std::size_t degree = 0;
  std::vector<Rational> coeffs;

  friend bool operator==(Cochain const&, Cochain const&) = default;
};

Cochain zero_cochain(CochainSpace const& space, std::size_t degree);
Cochain indicator(CochainSpace const& space, ColumnTuple const& tuple);
/// ξ_a(c) = 1 if a belongs to c, else 0.
Cochain xi(CochainSpace const& space, Letter a);
/// Value on an arbitrary tuple: 0 on non-critical tuples.
Rational evaluate(CochainSpace const& space, Cochain const& f, ColumnTuple const& tuple);
Cochain add(CochainSpace const& space, Cochain const& f, Cochain const& g);
Cochain scale(CochainSpace const& space, Rational const& c, Cochain const& f);
bool is_zero(Cochain const& f);
SparseVector to_sparse(Cochain const& f);
nlohmann::ordered_json cochain_to_json(CochainSpace const& space, Cochain const& f);

/// Generators (1-based, in application order) realizing the permutation
/// whose position j receives the entry at index target[j]. Two reduced
/// words: insertion (bubble each target entry leftwards, first position
/// first) and right bubbling (last position first).
std::vector<std::size_t> lift_insertion(std::vector<std::size_t> const& target);
std::vector<std::size_t> lift_bubble_right(std::vector<std::size_t> const& target);
ColumnTuple apply_lift(ColumnBraiding const& braiding, std::vector<std::size_t> const& generators,
                       ColumnTuple tuple);

/// (f ⌣ g)(x) = Σ over (p,q)-shuffles of (-1)^{inversions} f(y_1..y_p) g(y_{p+1}..)
/// with y the braid lift of the shuffle applied to x.
Cochain cup(CochainSpace const& space, Cochain const& f, Cochain const& g);

using FormalSum = std::map<ColumnTuple, long long>;
/// S_k(x) = Σ_s (-1)^{|s|} T_s(x), zero terms dropped.
FormalSum quantum_symmetrizer(ColumnBraiding const& braiding, ColumnTuple const& tuple);

/// The braided differential for one character.
class BraidedComplex {
 public:
  BraidedComplex(CochainSpace const& space, Character character);

  CochainSpace const& space() const noexcept { return space_; }
  Character const& character() const noexcept { return character_; }

  /// (d f)(x) by the full formula, on any k+1 tuple x.
  Rational coboundary_at(Cochain const& f, ColumnTuple const& x) const;
  Cochain coboundary(Cochain const& f) const;
  /// d^k : CrC^{k-1} -> CrC^k; rows are critical k-tuples.
  SparseMatrix const& differential(std::size_t k) const;
  std::size_t rank(std::size_t k) const;
  bool is_cocycle(Cochain const& f) const;
  bool is_coboundary(Cochain const& f) const;
  /// dim H^k for k = 0..k_max.
  std::vector<std::size_t> betti(std::size_t k_max) const;

 private:
  // Each term of (d f)(x): coefficient times f at a (k-1)-tuple.
  template <class Visit>
  void expand(ColumnTuple const& x, Visit&& visit) const;

  CochainSpace const& space_;
  Character character_;
  mutable std::map<std::size_t, SparseMatrix> differentials_;
  mutable std::map<std::size_t, std::size_t> ranks_;
};

SparseMatrix differential_matrix(CochainSpace const& space, Character const& character,
                                 std::size_t k);

/// {n, character, field, dims, betti, ranks}; dims and betti for k = 0..k_max,
/// ranks[k] = rank d^k for k = 0..k_max+1 (ranks[0] = 0).
nlohmann::ordered_json betti_report(Letter n, std::size_t k_max, Character const& character,
                                    Field const& field, Limits const& limits = {});

/// Hochschild cochains on Pl_A as evaluation oracles on tuples of tableaux.
struct HochschildCochain {
  std::size_t degree = 0;
  std::function<Rational(std::vector<Tableau> const&)> eval;
};

HochschildCochain hochschild_indicator(std::vector<Tableau> support);
/// ζ_a counts the letter a.
HochschildCochain zeta(Letter a);
/// (d_H F)(x_1..x_k) = ε(x_1)F(x_2..) + Σ_j (-1)^j F(.., x_j x_{j+1}, ..)
///                      + (-1)^k F(..x_{k-1}) ε(x_k).
HochschildCochain hochschild_coboundary(HochschildCochain const& f, Character const& character);

/// (S*F)(x) = Σ_s (-1)^{|s|} F(T_s x), columns read as tableaux.
Rational symmetrizer_pullback_at(ColumnBraiding const& braiding, HochschildCochain const& f,
                                 ColumnTuple const& tuple);
Cochain symmetrizer_pullback(CochainSpace const& space, HochschildCochain const& f);

/// Pairs (a, bd) of a one-letter column and a two-letter column with a <= b.
std::vector<ColumnTuple> h2_basis_epsilon0(Letter n);

/// (a_1, a_2 a_1, ..., a_k .. a_1) for increasing letters a_1 < ... < a_k.
ColumnTuple staircase_tuple(std::vector<Letter> const& letters);
/// ("2",) "1", "32", "1", "32", ... of length k; "2" leads for odd k.
ColumnTuple alternating_tuple(std::size_t k);

/// Part (a), when k <= n: every cup product of k distinct ξ_a is an ε_1
/// cocycle, coboundaries vanish on staircase tuples and the staircase
/// evaluation matrix is unitriangular. Part (b), when n >= 3: the indicator
/// of the alternating tuple is an ε_0 cocycle on which every coboundary
/// vanishes.
Report exterior_witness(Letter n, std::size_t k, Field const& field = Field::rationals(),
                        Limits const& limits = {});

/// Acceptance-level verification suites for the CLI and tests.
Report verify_cohomology_identities(Letter n, std::size_t max_degree, Field const& field = Field::rationals());

}  // namespace plactic
