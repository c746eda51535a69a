#pragma once

#include <cstdlib>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

/// A pattern of k nonzero values whose absolute values permute {1..k}.
/// Unsigned patterns are the all-positive case.
class SignedPattern {
 public:
  explicit SignedPattern(std::vector<int> values) : values_(std::move(values)) {
    const int k = static_cast<int>(values_.size());
    if (k == 0) throw std::invalid_argument("empty pattern");
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int v : values_) {
      const int a = std::abs(v);
      if (a < 1 || a > k || seen[static_cast<std::size_t>(a)]) {
        throw std::invalid_argument("pattern absolute values must permute {1..k}");
      }
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  explicit SignedPattern(const Permutation& p) : SignedPattern(p.one_line()) {}

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<int> values_;
};

/// Parses "3 2 -1" (whitespace separated, optional minus per value) or a
/// bare digit string such as "3412".
inline SignedPattern parse_pattern(std::string_view text) {
  std::vector<int> values;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  if (spaced) {
    std::string buf(text);
    for (char& c : buf) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad pattern token '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("bad pattern token '" + tok + "'");
      values.push_back(v);
    }
  } else {
    int sign = 1;
    for (char c : text) {
      if (c == '-') {
        sign = -1;
      } else if (c >= '1' && c <= '9') {
        values.push_back(sign * (c - '0'));
        sign = 1;
      } else {
        throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
      }
    }
  }
  return SignedPattern(std::move(values));
}

namespace detail {

inline bool extend_occurrence(std::span<const int> text, const std::vector<int>& pat, std::vector<int>& chosen,
                              std::size_t from) {
  const std::size_t j = chosen.size();
  if (j == pat.size()) return true;
  const std::size_t remaining = pat.size() - j;
  for (std::size_t i = from; i + remaining <= text.size(); ++i) {
    const int v = text[i];
    if (static_cast<long>(v) * pat[j] <= 0) continue;
    bool consistent = true;
    for (std::size_t a = 0; a < j && consistent; ++a) {
      const bool text_less = std::abs(chosen[a]) < std::abs(v);
      const bool pat_less = std::abs(pat[a]) < std::abs(pat[j]);
      consistent = text_less == pat_less;
    }
    if (!consistent) continue;
    chosen.push_back(v);
    if (extend_occurrence(text, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff indices i_1 < ... < i_k exist with |w(i_1)|...|w(i_k)| in the
/// same relative order as |p| and w(i_j) * p(j) > 0 for every j.
///
/// Backtracking over index subsequences; partial choices that already break
/// the relative order are pruned.
inline bool contains(std::span<const int> w, const SignedPattern& p) {
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(p.size()));
  return detail::extend_occurrence(w, p.values(), chosen, 0);
}

inline bool contains(const Permutation& w, const SignedPattern& p) {
  const auto line = w.one_line();
  return contains(std::span<const int>(line), p);
}

inline bool avoids(const Permutation& w, const SignedPattern& p) { return !contains(w, p); }

namespace patterns {
inline const SignedPattern& p321() {
  static const SignedPattern p(std::vector<int>{3, 2, 1});
  return p;
}
inline const SignedPattern& p3412() {
  static const SignedPattern p(std::vector<int>{3, 4, 1, 2});
  return p;
}
inline const SignedPattern& p231() {
  static const SignedPattern p(std::vector<int>{2, 3, 1});
  return p;
}
inline const SignedPattern& p312() {
  static const SignedPattern p(std::vector<int>{3, 1, 2});
  return p;
}
}  // namespace patterns

/// 321-avoiding.
inline bool is_fully_commutative(const Permutation& w) { return avoids(w, patterns::p321()); }

/// 321- and 3412-avoiding; the Bruhat principal order ideal is boolean.
inline bool is_boolean_element(const Permutation& w) {
  return avoids(w, patterns::p321()) && avoids(w, patterns::p3412());
}

/// 321-, 231- and 312-avoiding; a product of pairwise commuting generators.
inline bool is_free(const Permutation& w) {
  return avoids(w, patterns::p321()) && avoids(w, patterns::p231()) && avoids(w, patterns::p312());
}

}  // namespace bruhat
