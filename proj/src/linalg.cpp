#include "plactic/linalg.hpp"

#include <algorithm>
#include <charconv>

#include "plactic/error.hpp"

namespace plactic {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t residue(mpz_class const& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t to_residue(Rational const& q, std::uint64_t p) {
  std::uint64_t const den = residue(q.get_den(), p);
  if (den == 0) throw InputError("denominator divisible by the field characteristic");
  return mul_mod(residue(q.get_num(), p), inv_mod(den, p), p);
}

// a - factor * b over Q.
SparseVector axpy(SparseVector const& a, Rational const& factor, SparseVector const& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("GF(p) needs a prime p below 2^31, got " + std::to_string(p));
  }
  return {FieldKind::Prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "GFp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q or GFp:<p>)");
}

std::string Field::name() const {
  return kind == FieldKind::Rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

Rational Field::normalize(Rational const& value) const {
  if (kind == FieldKind::Rational) return value;
  return Rational(static_cast<unsigned long>(to_residue(value, p)));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto const& row = entries.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](auto const& e, std::size_t idx) { return e.first < idx; });
  return it != row.end() && it->first == c ? it->second : Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t;
  t.rows = cols;
  t.cols = rows;
  t.entries.resize(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto const& [c, v] : entries[r]) t.entries[c].emplace_back(r, v);
  }
  return t;
}

std::vector<std::vector<Rational>> SparseMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto const& [c, v] : entries[r]) out[r][c] = v;
  }
  return out;
}

SparseVector Echelon::reduce_rational(SparseVector v) const {
  while (!v.empty()) {
    auto it = rational_.find(v.front().first);
    if (it == rational_.end()) break;
    Rational const factor = v.front().second;
    v = axpy(v, factor, it->second);
  }
  return v;
}

Echelon::ModVector Echelon::to_modular(SparseVector const& v) const {
  ModVector out;
  for (auto const& [i, q] : v) {
    std::uint64_t const r = to_residue(q, field_.p);
    if (r != 0) out.emplace_back(i, r);
  }
  return out;
}

Echelon::ModVector Echelon::reduce_modular(ModVector v) const {
  std::uint64_t const p = field_.p;
  while (!v.empty()) {
    auto it = modular_.find(v.front().first);
    if (it == modular_.end()) break;
    std::uint64_t const factor = v.front().second;
    auto const& b = it->second;
    ModVector out;
    out.reserve(v.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < b.size()) {
      if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || b[j].first < v[i].first) {
        out.emplace_back(b[j].first, (p - mul_mod(factor, b[j].second, p)) % p);
        ++j;
      } else {
        std::uint64_t const x = (v[i].second + p - mul_mod(factor, b[j].second, p)) % p;
        if (x != 0) out.emplace_back(v[i].first, x);
        ++i;
        ++j;
      }
    }
    v = std::move(out);
  }
  return v;
}

bool Echelon::insert(SparseVector const& v) {
  if (field_.kind == FieldKind::Rational) {
    auto r = reduce_rational(v);
    if (r.empty()) return false;
    Rational const lead = r.front().second;
    for (auto& e : r) e.second /= lead;
    std::size_t const key = r.front().first;
    rational_.emplace(key, std::move(r));
    return true;
  }
  auto r = reduce_modular(to_modular(v));
  if (r.empty()) return false;
  std::uint64_t const inv = inv_mod(r.front().second, field_.p);
  for (auto& e : r) e.second = mul_mod(e.second, inv, field_.p);
  std::size_t const key = r.front().first;
  modular_.emplace(key, std::move(r));
  return true;
}

bool Echelon::contains(SparseVector const& v) const {
  if (field_.kind == FieldKind::Rational) return reduce_rational(v).empty();
  return reduce_modular(to_modular(v)).empty();
}

std::size_t rank(SparseMatrix const& matrix, Field const& field) {
  Echelon echelon(field);
  for (auto const& row : matrix.entries) echelon.insert(row);
  return echelon.rank();
}

bool in_column_space(SparseMatrix const& matrix, SparseVector const& v, Field const& field) {
  Echelon echelon(field);
  for (auto const& column : matrix.transpose().entries) echelon.insert(column);
  return echelon.contains(v);
}

}  // namespace plactic
