#pragma once

// Reference computations used only by the tests. Each one is written without
// calling the library routine it checks.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plactic/tableau.hpp"

namespace oracle {

using plactic::Letter;
using plactic::Word;

/// Longest non-decreasing subsequence by trying every subset of positions.
inline std::size_t longest_nondec_brute(Word const& w) {
  std::size_t best = 0;
  std::size_t const n = w.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::size_t count = 0;
    Letter last = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1ul)) continue;
      if (w[i] < last) ok = false;
      last = w[i];
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

/// Knuth class by breadth-first search over the two elementary moves,
/// written out as explicit triples.
inline std::set<Word> knuth_closure(Word const& start) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  auto push = [&](Word w) {
    if (seen.insert(w).second) queue.push_back(std::move(w));
  };
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
      Letter const p = w[i], q = w[i + 1], r = w[i + 2];
      // x z y = p q r with x <= y < z  ->  z x y
      if (p <= r && r < q) push([&] { Word v = w; v[i] = q; v[i + 1] = p; return v; }());
      // z x y = p q r with x <= y < z  ->  x z y
      if (q <= r && r < p) push([&] { Word v = w; v[i] = q; v[i + 1] = p; return v; }());
      // y x z = p q r with x < y <= z  ->  y z x
      if (q < p && p <= r) push([&] { Word v = w; v[i + 1] = r; v[i + 2] = q; return v; }());
      // y z x = p q r with x < y <= z  ->  y x z
      if (r < p && p <= q) push([&] { Word v = w; v[i + 1] = r; v[i + 2] = q; return v; }());
    }
  }
  return seen;
}

/// σ_R over A_2 in closed form: for r1 = 1^a1 2^b1 and r2 = 1^a2 2^b2 the
/// 1s of r2 bump m = min(a2, b1) 2s of r1 to a new top row.
inline std::pair<Word, Word> sigma_row_a2(Word const& r1, Word const& r2) {
  auto count = [](Word const& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  };
  std::size_t const a1 = count(r1, 1), b1 = count(r1, 2), a2 = count(r2, 1), b2 = count(r2, 2);
  std::size_t const m = std::min(a2, b1);
  Word top(m, 2);
  Word bottom(a1 + a2, 1);
  bottom.insert(bottom.end(), b1 + b2 - m, 2);
  return {top, bottom};
}

/// s_1 on tableaux over A_2 written as (number of 2s in the top row, number
/// of 1s in the bottom row, number of 2s in the bottom row).
struct A2Params {
  std::size_t top2, bottom1, bottom2;
  friend bool operator==(A2Params const&, A2Params const&) = default;
};

inline A2Params s1_a2(A2Params t) {
  return {t.top2, t.bottom2 + t.top2, t.bottom1 - t.top2};
}

inline A2Params params_of(plactic::Tableau const& t) {
  A2Params p{0, 0, 0};
  auto const& rows = t.rows();
  if (rows.size() == 2) p.top2 = rows[0].size();
  if (!rows.empty()) {
    for (Letter a : rows.back().letters()) (a == 1 ? p.bottom1 : p.bottom2)++;
  }
  return p;
}

/// Dense rank over Q by textbook Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  std::size_t const rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class const f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
