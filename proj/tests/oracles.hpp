#pragma once

// Slow, definition-level reimplementations used only to cross-check the
// library. The only library call is canonical_word(), used to pick one fixed
// reduced word for the subword oracle.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "bruhat/bruhat.hpp"

namespace oracle {

using bruhat::Permutation;
using bruhat::Word;

inline Permutation apply_letters(int n, const std::vector<int>& letters) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  for (int g : letters) std::swap(line[static_cast<std::size_t>(g - 1)], line[static_cast<std::size_t>(g)]);
  return Permutation(line);
}

inline int inversions(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.degree(); ++i) {
    for (int j = i + 1; j <= w.degree(); ++j) c += w(i) > w(j);
  }
  return c;
}

/// Every reduced word, grown letter by letter: a prefix is kept only while
/// each letter adds an inversion and what is left still fits in l(w).
inline std::set<std::vector<int>> brute_reduced_words(const Permutation& w) {
  const int n = w.degree();
  const int len = inversions(w);
  std::vector<int> target = w.one_line();
  std::set<std::vector<int>> out;
  std::vector<int> word;
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  // remaining(u) = number of inversions of u^{-1} w, computed from positions
  auto remaining = [&](const std::vector<int>& u) {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(u[static_cast<std::size_t>(i)])] = i;
    int c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        c += pos[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] >
             pos[static_cast<std::size_t>(target[static_cast<std::size_t>(j)])];
      }
    }
    return c;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == len) {
      if (line == target) out.insert(word);
      return;
    }
    for (int g = 1; g < n; ++g) {
      if (line[static_cast<std::size_t>(g - 1)] > line[static_cast<std::size_t>(g)]) continue;
      std::swap(line[static_cast<std::size_t>(g - 1)], line[static_cast<std::size_t>(g)]);
      if (static_cast<int>(word.size()) + 1 + remaining(line) == len) {
        word.push_back(g);
        self(self);
        word.pop_back();
      }
      std::swap(line[static_cast<std::size_t>(g - 1)], line[static_cast<std::size_t>(g)]);
    }
  };
  rec(rec);
  return out;
}

/// Elements obtained from subwords of one reduced word of w.
inline std::set<Permutation> subword_ideal(const Permutation& w) {
  const auto word = bruhat::canonical_word(w).letters;
  std::set<Permutation> out;
  const std::size_t m = word.size();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) sub.push_back(word[i]);
    }
    out.insert(apply_letters(w.degree(), sub));
  }
  return out;
}

/// Elements that are prefixes of some reduced word of w.
inline std::set<Permutation> prefix_ideal(const Permutation& w) {
  std::set<Permutation> out;
  for (const auto& word : brute_reduced_words(w)) {
    for (std::size_t len = 0; len <= word.size(); ++len) {
      out.insert(apply_letters(w.degree(), std::vector<int>(word.begin(), word.begin() + static_cast<long>(len))));
    }
  }
  return out;
}

/// Pattern containment by trying every index subset.
inline bool contains_pattern(const std::vector<int>& w, const std::vector<int>& p) {
  const std::size_t n = w.size();
  const std::size_t k = p.size();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) sub.push_back(w[i]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      if (static_cast<long>(sub[a]) * p[a] <= 0) ok = false;
      for (std::size_t b = 0; b < k && ok; ++b) {
        if ((std::abs(sub[a]) < std::abs(sub[b])) != (std::abs(p[a]) < std::abs(p[b]))) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool distinct_letters(const std::vector<int>& v) {
  std::set<int> s(v.begin(), v.end());
  return s.size() == v.size();
}

inline bool has_letter(const std::vector<int>& v, int g) { return std::find(v.begin(), v.end(), g) != v.end(); }

/// [s_k, w] boolean: some reduced word x s_k y with x, y distinct-letter,
/// s_k in neither, and only s_{k-1}, s_{k+1} allowed in both.
inline bool scan_boolean_atom(int k, const Permutation& w) {
  for (const auto& word : brute_reduced_words(w)) {
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] != k) continue;
      const std::vector<int> x(word.begin(), word.begin() + static_cast<long>(p));
      const std::vector<int> y(word.begin() + static_cast<long>(p) + 1, word.end());
      if (!distinct_letters(x) || !distinct_letters(y) || has_letter(x, k) || has_letter(y, k)) continue;
      bool ok = true;
      for (int g : x) {
        if (has_letter(y, g) && g != k - 1 && g != k + 1) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

/// Non-boolean lattice form: a reduced word x (s_k s_{k-1} s_{k+1} s_k) y
/// with x, y distinct-letter, disjoint, and free of s_{k-1}, s_k, s_{k+1}.
inline bool scan_nonboolean_lattice_atom(int k, const Permutation& w) {
  const std::vector<int> core{k, k - 1, k + 1, k};
  for (const auto& word : brute_reduced_words(w)) {
    for (std::size_t p = 0; p + 4 <= word.size(); ++p) {
      if (!std::equal(core.begin(), core.end(), word.begin() + static_cast<long>(p))) continue;
      const std::vector<int> x(word.begin(), word.begin() + static_cast<long>(p));
      const std::vector<int> y(word.begin() + static_cast<long>(p) + 4, word.end());
      if (!distinct_letters(x) || !distinct_letters(y)) continue;
      bool ok = true;
      for (int g : x) ok = ok && !has_letter(y, g);
      for (int g : {k - 1, k, k + 1}) ok = ok && !has_letter(x, g) && !has_letter(y, g);
      if (ok) return true;
    }
  }
  return false;
}

inline std::uint64_t fib(int i) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int j = 0; j < i; ++j) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  }
  return c[static_cast<std::size_t>(n)];
}

}  // namespace oracle
