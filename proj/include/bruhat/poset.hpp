#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/bitset.hpp"

namespace bruhat {

/// A finite poset given by labelled elements and a cover relation.
///
/// On construction the elements are re-indexed along a linear extension
/// (index order never contradicts the order), the cover relation is reduced
/// to the Hasse diagram and the full order is stored as bit rows in both
/// directions.
template <class Label>
class FinitePoset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

  FinitePoset() = default;

  FinitePoset(std::vector<Label> labels, const std::vector<Edge>& relations) {
    const std::size_t n = labels.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [lo, hi] : relations) {
      if (lo >= n || hi >= n) throw std::out_of_range("cover edge references a missing element");
      if (lo == hi) throw std::invalid_argument("cover relation has a loop");
      out[lo].push_back(hi);
      ++indegree[hi];
    }

    // Kahn's algorithm, smallest original index first for determinism.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
      if (indegree[i] == 0) ready.push(i);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
      const std::size_t i = ready.top();
      ready.pop();
      order.push_back(i);
      for (std::size_t j : out[i]) {
        if (--indegree[j] == 0) ready.push(j);
      }
    }
    if (order.size() != n) throw std::invalid_argument("cover relation has a cycle");

    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    labels_.reserve(n);
    for (std::size_t p = 0; p < n; ++p) labels_.push_back(std::move(labels[order[p]]));

    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [lo, hi] : relations) succ[position[lo]].push_back(position[hi]);

    up_.assign(n, DynamicBitset(n));
    down_.assign(n, DynamicBitset(n));
    for (std::size_t p = n; p-- > 0;) {
      up_[p].set(p);
      for (std::size_t q : succ[p]) up_[p] |= up_[q];
    }
    for (std::size_t p = 0; p < n; ++p) {
      up_[p].for_each([&](std::size_t q) { down_[q].set(p); });
    }

    upper_covers_.assign(n, {});
    lower_covers_.assign(n, {});
    for (std::size_t p = 0; p < n; ++p) {
      std::sort(succ[p].begin(), succ[p].end());
      succ[p].erase(std::unique(succ[p].begin(), succ[p].end()), succ[p].end());
      for (std::size_t q : succ[p]) {
        if ((up_[p] & down_[q]).count() == 2) {
          upper_covers_[p].push_back(q);
          lower_covers_[q].push_back(p);
        }
      }
    }
    for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
  }

  std::size_t size() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const DynamicBitset& up(std::size_t a) const { return up_[a]; }
  const DynamicBitset& down(std::size_t a) const { return down_[a]; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_covers_[a]; }

  std::optional<std::size_t> find(const Label& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == l) return i;
    }
    return std::nullopt;
  }

  std::vector<Edge> cover_edges() const {
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < size(); ++p) {
      for (std::size_t q : upper_covers_[p]) edges.emplace_back(p, q);
    }
    return edges;
  }

  std::optional<std::size_t> minimum() const {
    if (labels_.empty()) return std::nullopt;
    // Index 0 is minimal; it is the minimum iff it lies below everything.
    return up_[0].count() == size() ? std::optional<std::size_t>(0) : std::nullopt;
  }

  std::optional<std::size_t> maximum() const {
    if (labels_.empty()) return std::nullopt;
    const std::size_t last = size() - 1;
    return down_[last].count() == size() ? std::optional<std::size_t>(last) : std::nullopt;
  }

  bool bounded() const { return minimum() && maximum(); }

  /// Rank of every element when the poset has a minimum and every cover
  /// raises the rank by exactly one; nullopt otherwise.
  std::optional<std::vector<int>> rank_function() const {
    if (!minimum()) return std::nullopt;
    std::vector<int> rank(size(), 0);
    for (std::size_t p = 0; p < size(); ++p) {
      if (lower_covers_[p].empty()) continue;
      rank[p] = rank[lower_covers_[p].front()] + 1;
      for (std::size_t q : lower_covers_[p]) {
        if (rank[q] + 1 != rank[p]) return std::nullopt;
      }
    }
    return rank;
  }

  /// Common length of all maximal chains for a bounded graded poset.
  std::optional<int> rank() const {
    const auto top = maximum();
    if (!top) return std::nullopt;
    auto r = rank_function();
    if (!r) return std::nullopt;
    return (*r)[*top];
  }

  /// Elements covering the minimum.
  std::vector<std::size_t> atoms() const {
    const auto bottom = minimum();
    if (!bottom) return {};
    return upper_covers_[*bottom];
  }

 private:
  std::vector<Label> labels_;
  std::vector<DynamicBitset> up_;
  std::vector<DynamicBitset> down_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
};

/// Reads the cover-list text format: one "a < b" per line, or a lone label
/// for an isolated element; '#' starts a comment.
inline FinitePoset<std::string> read_cover_list(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<FinitePoset<std::string>::Edge> edges;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, labels.size());
    if (inserted) labels.push_back(name);
    return it->second;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty()) continue;
    if (parts.size() == 1 && parts[0] != "<") {
      intern(parts[0]);
    } else if (parts.size() == 3 && parts[1] == "<") {
      const std::size_t lo = intern(parts[0]);
      const std::size_t hi = intern(parts[2]);
      edges.emplace_back(lo, hi);
    } else {
      throw std::invalid_argument("cover list line " + std::to_string(lineno) + ": expected 'a < b'");
    }
  }
  return FinitePoset<std::string>(std::move(labels), edges);
}

inline FinitePoset<std::string> parse_cover_list(const std::string& text) {
  std::istringstream in(text);
  return read_cover_list(in);
}

template <class Label, class Format>
void write_cover_list(std::ostream& out, const FinitePoset<Label>& poset, Format&& format) {
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (poset.upper_covers(p).empty() && poset.lower_covers(p).empty()) out << format(poset.label(p)) << '\n';
    for (std::size_t q : poset.upper_covers(p)) out << format(poset.label(p)) << " < " << format(poset.label(q)) << '\n';
  }
}

}  // namespace bruhat
