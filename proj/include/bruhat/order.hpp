#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bruhat/perm.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

enum class OrderKind { Bruhat, Weak };

inline std::string_view to_string(OrderKind kind) { return kind == OrderKind::Bruhat ? "bruhat" : "weak"; }

inline OrderKind parse_order_kind(std::string_view text) {
  if (text == "bruhat") return OrderKind::Bruhat;
  if (text == "weak") return OrderKind::Weak;
  throw std::invalid_argument("unknown order '" + std::string(text) + "' (expected bruhat or weak)");
}

namespace detail {
inline void require_same_degree(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("degree mismatch in order comparison");
}
}  // namespace detail

/// v <= w in Bruhat order, by the tableau criterion: for every prefix length
/// k the sorted values v(1..k) are entrywise at most the sorted w(1..k).
/// Counted form: for each k and threshold t, #{a <= k : v(a) >= t} never
/// exceeds the same count for w.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  detail::require_same_degree(v, w);
  const int n = v.degree();
  std::vector<int> count_v(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> count_w(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k < n; ++k) {
    for (int t = 1; t <= v(k); ++t) ++count_v[static_cast<std::size_t>(t)];
    for (int t = 1; t <= w(k); ++t) ++count_w[static_cast<std::size_t>(t)];
    for (int t = 2; t <= n; ++t) {
      if (count_v[static_cast<std::size_t>(t)] > count_w[static_cast<std::size_t>(t)]) return false;
    }
  }
  return true;
}

/// v <= w in the right weak order: l(w) = l(v) + l(v^{-1} w).
inline bool weak_leq(const Permutation& v, const Permutation& w) {
  detail::require_same_degree(v, w);
  return w.length() == v.length() + multiply(v.inverse(), w).length();
}

inline bool leq(const Permutation& v, const Permutation& w, OrderKind kind) {
  return kind == OrderKind::Bruhat ? bruhat_leq(v, w) : weak_leq(v, w);
}

/// Elements covered by w in Bruhat order: w * (i j) for positions i < j
/// with w(i) > w(j) and no value strictly between them in positions i..j.
inline std::vector<Permutation> bruhat_covers_down(const Permutation& w) {
  std::vector<Permutation> out;
  const int n = w.degree();
  auto line = w.one_line();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int hi = line[static_cast<std::size_t>(i)];
      const int lo = line[static_cast<std::size_t>(j)];
      if (hi < lo) continue;
      bool blocked = false;
      for (int m = i + 1; m < j && !blocked; ++m) {
        const int x = line[static_cast<std::size_t>(m)];
        blocked = x > lo && x < hi;
      }
      if (blocked) continue;
      auto next = line;
      std::swap(next[static_cast<std::size_t>(i)], next[static_cast<std::size_t>(j)]);
      out.emplace_back(next);
    }
  }
  return out;
}

/// Elements covered by w in the right weak order: w * s_i for right descents i.
inline std::vector<Permutation> weak_covers_down(const Permutation& w) {
  std::vector<Permutation> out;
  for (int i : w.right_descents()) out.push_back(w.right_action(i));
  return out;
}

inline std::vector<Permutation> covers_down(const Permutation& w, OrderKind kind) {
  return kind == OrderKind::Bruhat ? bruhat_covers_down(w) : weak_covers_down(w);
}

/// An interval [bottom, top] in one of the two orders; validated on construction.
class IntervalSpec {
 public:
  IntervalSpec(Permutation bottom, Permutation top, OrderKind kind)
      : bottom_(std::move(bottom)), top_(std::move(top)), kind_(kind) {
    if (!leq(bottom_, top_, kind_)) {
      throw std::invalid_argument(to_string(bottom_) + " is not below " + to_string(top_) + " in " +
                                  std::string(to_string(kind_)) + " order");
    }
  }

  const Permutation& bottom() const { return bottom_; }
  const Permutation& top() const { return top_; }
  OrderKind kind() const { return kind_; }
  int rank() const { return top_.length() - bottom_.length(); }

 private:
  Permutation bottom_;
  Permutation top_;
  OrderKind kind_;
};

/// {u : bottom <= u <= top} with its cover relation, found by walking down
/// from top along covers and discarding anything not above bottom.
inline FinitePoset<Permutation> extract_interval(const IntervalSpec& spec) {
  std::vector<Permutation> elements{spec.top()};
  std::unordered_map<std::uint64_t, std::size_t> index{{spec.top().key(), 0}};
  std::vector<FinitePoset<Permutation>::Edge> edges;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (elements[cur] == spec.bottom()) continue;
    for (auto& below : covers_down(elements[cur], spec.kind())) {
      if (!leq(spec.bottom(), below, spec.kind())) continue;
      auto [it, inserted] = index.emplace(below.key(), elements.size());
      if (inserted) {
        elements.push_back(std::move(below));
        queue.push_back(it->second);
      }
      edges.emplace_back(it->second, cur);
    }
  }
  return FinitePoset<Permutation>(std::move(elements), edges);
}

/// [identity, w] in the given order.
inline FinitePoset<Permutation> principal_order_ideal(const Permutation& w, OrderKind kind) {
  return extract_interval(IntervalSpec(Permutation::identity(w.degree()), w, kind));
}

}  // namespace bruhat
