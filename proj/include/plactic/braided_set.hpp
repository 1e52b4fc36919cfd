#pragma once

// Generic finite braided sets: braid-word actions, Δ_k normalization, normal
// words and an exhaustive verifier for the idempotent pseudo-unital axioms.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/report.hpp"

namespace plactic {

/// A word in the generators b_1 .. b_{k-1} of the positive braid monoid.
/// Acting on a k-tuple, the rightmost generator is applied first and b_i
/// applies the braiding at positions (i, i+1), 1-based.
struct BraidWord {
  std::vector<std::size_t> generators;

  friend bool operator==(BraidWord const&, BraidWord const&) = default;
};

/// b_1 (b_2 b_1) ... (b_{k-1} ... b_2 b_1), the longest element of C_k.
BraidWord delta_word(std::size_t k);

template <class T>
struct BraidedSet {
  using Element = T;
  using Sigma = std::function<std::pair<T, T>(T const&, T const&)>;

  Sigma sigma;
  T unit{};
  std::vector<T> domain;
  std::function<std::string(T const&)> format = [](T const&) {
    return std::string("?");
  };
};

template <class T, class Sigma>
void apply_generator(Sigma const& sigma, std::size_t generator,
                     std::vector<T>& tuple) {
  if (generator == 0 || generator >= tuple.size()) {
    throw InputError("braid generator b_" + std::to_string(generator) +
                     " out of range for width " + std::to_string(tuple.size()));
  }
  auto [first, second] = sigma(tuple[generator - 1], tuple[generator]);
  tuple[generator - 1] = std::move(first);
  tuple[generator] = std::move(second);
}

template <class T, class Sigma>
std::vector<T> apply_braid_word(Sigma const& sigma, BraidWord const& word,
                                std::vector<T> tuple) {
  for (auto it = word.generators.rbegin(); it != word.generators.rend(); ++it) {
    apply_generator(sigma, *it, tuple);
  }
  return tuple;
}

template <class T, class Sigma>
std::vector<T> delta_normalize(Sigma const& sigma, std::vector<T> tuple) {
  auto const delta = delta_word(tuple.size());
  return apply_braid_word(sigma, delta, std::move(tuple));
}

template <class T, class Sigma>
bool is_normal(Sigma const& sigma, std::vector<T> const& tuple) {
  for (std::size_t j = 0; j + 1 < tuple.size(); ++j) {
    if (sigma(tuple[j], tuple[j + 1]) != std::pair<T, T>(tuple[j], tuple[j + 1])) {
      return false;
    }
  }
  return true;
}

/// Δ_k normal form with every pseudo-unit erased.
template <class T, class Sigma>
std::vector<T> reduced_normal_form(Sigma const& sigma, T const& unit,
                                   std::vector<T> tuple) {
  auto normal = delta_normalize(sigma, std::move(tuple));
  std::vector<T> reduced;
  for (auto& x : normal) {
    if (!(x == unit)) reduced.push_back(std::move(x));
  }
  return reduced;
}

struct BraidedSetOptions {
  bool ybe = true;
  bool idempotent = true;
  bool pseudo_unit = true;
  /// Normal words of width 2..max_normal_width are scanned for the
  /// unit-dropping axiom.
  std::size_t max_normal_width = 4;
};

namespace detail {

template <class T>
std::string describe(BraidedSet<T> const& set, std::vector<T> const& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += set.format(tuple[i]);
  }
  return out + ")";
}

template <class T>
void extend_normal(BraidedSet<T> const& set, std::vector<T>& prefix,
                   std::size_t max_width, Check& check) {
  if (prefix.size() >= 2) {
    for (std::size_t drop = 0; drop < prefix.size(); ++drop) {
      if (!(prefix[drop] == set.unit)) continue;
      std::vector<T> shorter;
      for (std::size_t j = 0; j < prefix.size(); ++j) {
        if (j != drop) shorter.push_back(prefix[j]);
      }
      check.expect(is_normal(set.sigma, shorter),
                   [&] { return describe(set, prefix); });
    }
  }
  if (prefix.size() == max_width) return;
  for (auto const& x : set.domain) {
    if (!prefix.empty() &&
        set.sigma(prefix.back(), x) != std::pair<T, T>(prefix.back(), x)) {
      continue;
    }
    prefix.push_back(x);
    extend_normal(set, prefix, max_width, check);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Exhaustive verification over the finite domain: the Yang-Baxter equation
/// on all triples, σσ = σ on all pairs, and the two pseudo-unit axioms.
template <class T>
Report verify_braided_set(BraidedSet<T> const& set,
                          BraidedSetOptions const& options = {}) {
  Report report;
  report.suite = "braided-set";
  auto const& sigma = set.sigma;

  if (options.ybe) {
    Check ybe{"ybe"};
    for (auto const& x : set.domain) {
      for (auto const& y : set.domain) {
        for (auto const& z : set.domain) {
          std::vector<T> const t{x, y, z};
          auto const lhs = apply_braid_word(sigma, BraidWord{{1, 2, 1}}, t);
          auto const rhs = apply_braid_word(sigma, BraidWord{{2, 1, 2}}, t);
          ybe.expect(lhs == rhs, [&] { return detail::describe(set, t); });
        }
      }
    }
    report.checks.push_back(std::move(ybe));
  }

  if (options.idempotent) {
    Check idem{"idempotent"};
    for (auto const& x : set.domain) {
      for (auto const& y : set.domain) {
        auto const once = sigma(x, y);
        auto const twice = sigma(once.first, once.second);
        idem.expect(once == twice, [&] {
          return detail::describe(set, std::vector<T>{x, y});
        });
      }
    }
    report.checks.push_back(std::move(idem));
  }

  if (options.pseudo_unit) {
    Check absorb{"pseudo_unit_absorption"};
    auto const& one = set.unit;
    for (auto const& x : set.domain) {
      std::pair<T, T> const a{one, x}, b{x, one};
      auto const left = sigma(one, x);
      auto const right = sigma(x, one);
      absorb.expect((left == a || left == b) && (right == a || right == b), [&] {
        return detail::describe(set, std::vector<T>{x});
      });
    }
    report.checks.push_back(std::move(absorb));

    Check drop{"pseudo_unit_normal_words"};
    std::vector<T> prefix;
    detail::extend_normal(set, prefix, options.max_normal_width, drop);
    report.checks.push_back(std::move(drop));
  }
  return report;
}

/// The flip (x, y) -> (y, x) over {0, ..., size-1}, unit 0.
BraidedSet<int> flip_braided_set(int size);

}  // namespace plactic
