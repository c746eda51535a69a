#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat/classify.hpp"
#include "bruhat/order.hpp"
#include "bruhat/words.hpp"

namespace bruhat {

struct HasseOptions {
  /// Mark elements w for which [s, w] is boolean for every s in the support.
  bool highlight_support = false;
};

/// Graphviz digraph of the cover relation of an interval, drawn bottom to
/// top. Nodes are sorted by (length, one-line notation) and edges by their
/// endpoints in that order, so the output is byte-stable.
inline std::string emit_hasse(const IntervalSpec& spec, const HasseOptions& options = {}) {
  const auto poset = extract_interval(spec);
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int la = poset.label(a).length();
    const int lb = poset.label(b).length();
    return la != lb ? la < lb : poset.label(a) < poset.label(b);
  });
  std::vector<std::size_t> position(poset.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;

  std::ostringstream out;
  out << "digraph \"" << to_string(spec.kind()) << " [" << to_string(spec.bottom()) << "," << to_string(spec.top())
      << "]\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t idx : order) {
    const Permutation& w = poset.label(idx);
    out << "  \"" << to_string(w) << "\" [label=\"" << to_string(w) << "\\n" << to_string(canonical_word(w)) << "\"";
    if (options.highlight_support) {
      const bool mark =
          spec.kind() == OrderKind::Bruhat ? boolean_over_support_bruhat(w) : boolean_over_support_weak(w);
      if (mark) out << ", color=red, fontcolor=red";
    }
    out << "];\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [lo, hi] : poset.cover_edges()) edges.emplace_back(position[lo], position[hi]);
  std::sort(edges.begin(), edges.end());
  for (auto [lo, hi] : edges) {
    out << "  \"" << to_string(poset.label(order[lo])) << "\" -> \"" << to_string(poset.label(order[hi])) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bruhat
