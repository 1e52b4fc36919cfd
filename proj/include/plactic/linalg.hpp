#pragma once

// Exact sparse linear algebra over Q (GMP rationals) or a prime field GF(p).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace plactic {

using Rational = mpq_class;

enum class FieldKind { Rational, Prime };

struct Field {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  /// Throws InputError unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);
  /// "Q" or "GFp:<p>".
  static Field parse(std::string_view text);

  /// "Q" or "GF(p)".
  std::string name() const;
  /// The canonical representative: the rational itself over Q, an integer
  /// in [0, p) over GF(p). Throws InputError when p divides the denominator.
  Rational normalize(Rational const& value) const;

  friend bool operator==(Field const&, Field const&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> entries;  // one sparse row per matrix row

  Rational at(std::size_t r, std::size_t c) const;
  SparseMatrix transpose() const;
  std::vector<std::vector<Rational>> dense() const;
};

/// Incremental row echelon form with respect to leading indices.
class Echelon {
 public:
  explicit Echelon(Field field) : field_(field) {}

  /// Adds v to the spanning set; returns whether the rank grew.
  bool insert(SparseVector const& v);
  /// Whether v lies in the span of the inserted vectors.
  bool contains(SparseVector const& v) const;
  std::size_t rank() const noexcept {
    return field_.kind == FieldKind::Rational ? rational_.size() : modular_.size();
  }

 private:
  using ModVector = std::vector<std::pair<std::size_t, std::uint64_t>>;

  SparseVector reduce_rational(SparseVector v) const;
  ModVector reduce_modular(ModVector v) const;
  ModVector to_modular(SparseVector const& v) const;

  Field field_;
  std::map<std::size_t, SparseVector> rational_;
  std::map<std::size_t, ModVector> modular_;
};

std::size_t rank(SparseMatrix const& matrix, Field const& field);

/// Whether v (length matrix.rows) lies in the column space of the matrix.
bool in_column_space(SparseMatrix const& matrix, SparseVector const& v, Field const& field);

}  // namespace plactic
