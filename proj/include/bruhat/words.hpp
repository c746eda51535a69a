#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

/// A word in the generators sigma_1..sigma_{n-1} of S_n.
struct Word {
  std::vector<int> letters;
  int degree = 0;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.letters <=> b.letters;
  }
};

/// "[1,2,1]"
inline std::string to_string(const Word& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word.letters[i]);
  }
  return s + "]";
}

inline Word parse_word(std::string_view text, int degree) {
  Word word{{}, degree};
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    const int g = std::stoi(digits);
    if (g < 1 || g >= degree) throw std::invalid_argument("generator " + digits + " out of range");
    word.letters.push_back(g);
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
      flush();
    } else {
      throw std::invalid_argument("bad word '" + std::string(text) + "'");
    }
  }
  flush();
  return word;
}

/// Product of the generators left to right, i.e. identity * s_{a1} * s_{a2} * ...
inline Permutation evaluate(const Word& word) {
  Permutation w = Permutation::identity(word.degree);
  for (int g : word.letters) w = w.right_action(g);
  return w;
}

inline bool is_reduced(const Word& word) {
  return evaluate(word).length() == static_cast<int>(word.size());
}

/// Bitmask of generator indices (bit i set for sigma_i) in the support of w.
///
/// sigma_i is in the support iff w does not stabilize {1..i}, i.e. some
/// prefix value exceeds i.
inline std::uint32_t support_mask(const Permutation& w) {
  std::uint32_t mask = 0;
  int running_max = 0;
  for (int i = 1; i < w.degree(); ++i) {
    running_max = std::max(running_max, w(i));
    if (running_max > i) mask |= 1U << i;
  }
  return mask;
}

inline std::vector<int> support(const Permutation& w) {
  std::vector<int> out;
  const std::uint32_t mask = support_mask(w);
  for (int i = 1; i < w.degree(); ++i) {
    if (mask >> i & 1U) out.push_back(i);
  }
  return out;
}

/// True iff some (equivalently every) reduced word of w has no repeated letter.
inline bool is_product_of_distinct_generators(const Permutation& w) {
  return w.length() == std::popcount(support_mask(w));
}

/// Lexicographically smallest reduced word: repeatedly peel off the smallest
/// left descent.
inline Word canonical_word(const Permutation& w) {
  Word word{{}, w.degree()};
  Permutation rest = w;
  while (!rest.is_identity()) {
    for (int i = 1; i < rest.degree(); ++i) {
      if (rest.has_left_descent(i)) {
        word.letters.push_back(i);
        rest = rest.left_action(i);
        break;
      }
    }
  }
  return word;
}

struct ReducedWordOptions {
  /// Elements longer than this are refused to bound |R(w)|.
  int max_length = 20;
};

namespace detail {

class ReducedWordEnumerator {
 public:
  const std::vector<std::vector<int>>& of(const Permutation& w) {
    const std::uint64_t k = w.key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (w.is_identity()) {
      out.emplace_back();
    } else {
      for (int i : w.right_descents()) {
        for (const auto& prefix : of(w.right_action(i))) {
          auto word = prefix;
          word.push_back(i);
          out.push_back(std::move(word));
        }
      }
    }
    return memo_.emplace(k, std::move(out)).first->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::vector<int>>> memo_;
};

inline void check_length_cap(const Permutation& w, const ReducedWordOptions& options) {
  if (w.length() > options.max_length) {
    throw std::length_error("length " + std::to_string(w.length()) + " exceeds reduced-word cap " +
                            std::to_string(options.max_length));
  }
}

}  // namespace detail

/// R(w), sorted lexicographically. Built by recursing over right descents
/// with memoization on the shorter elements.
inline std::vector<Word> reduced_words(const Permutation& w, ReducedWordOptions options = {}) {
  detail::check_length_cap(w, options);
  detail::ReducedWordEnumerator enumerator;
  const auto& raw = enumerator.of(w);
  std::vector<Word> out;
  out.reserve(raw.size());
  for (const auto& letters : raw) out.push_back(Word{letters, w.degree()});
  std::sort(out.begin(), out.end());
  return out;
}

/// |R(w)| without materializing the words.
inline std::uint64_t count_reduced_words(const Permutation& w) {
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  auto rec = [&](auto&& self, const Permutation& u) -> std::uint64_t {
    if (u.is_identity()) return 1;
    if (auto it = memo.find(u.key()); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int i : u.right_descents()) total += self(self, u.right_action(i));
    memo.emplace(u.key(), total);
    return total;
  };
  return rec(rec, w);
}

/// Closure of a reduced word under commutation and braid moves, sorted.
inline std::vector<Word> move_closure(const Word& start, ReducedWordOptions options = {}) {
  if (!is_reduced(start)) throw std::invalid_argument("move_closure needs a reduced word: " + to_string(start));
  if (static_cast<int>(start.size()) > options.max_length) {
    throw std::length_error("word longer than reduced-word cap");
  }
  std::set<std::vector<int>> seen{start.letters};
  std::deque<std::vector<int>> queue{start.letters};
  auto visit = [&](std::vector<int> next) {
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    const std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int a = cur[p];
      const int b = cur[p + 1];
      if (std::abs(a - b) > 1) {
        auto next = cur;
        std::swap(next[p], next[p + 1]);
        visit(std::move(next));
      } else if (std::abs(a - b) == 1 && p + 2 < cur.size() && cur[p + 2] == a) {
        auto next = cur;
        next[p] = b;
        next[p + 1] = a;
        next[p + 2] = b;
        visit(std::move(next));
      }
    }
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.push_back(Word{letters, start.degree});
  return out;
}

}  // namespace bruhat
