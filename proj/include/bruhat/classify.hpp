#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "bruhat/lattice.hpp"
#include "bruhat/order.hpp"
#include "bruhat/patterns.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/words.hpp"

namespace bruhat {

namespace detail {

inline LatticeReport uniform_report(bool flag, int rank) {
  LatticeReport r{flag, flag, flag, flag, rank, std::nullopt};
  return r;
}

inline std::uint32_t bit(int i) { return i >= 0 && i < 32 ? 1U << i : 0U; }

inline void require_atom_below(int k, const Permutation& w) {
  if (k < 1 || k >= w.degree()) {
    throw std::out_of_range("generator index " + std::to_string(k) + " outside [1, " + std::to_string(w.degree() - 1) +
                            "]");
  }
  if (!(support_mask(w) >> k & 1U)) {
    throw std::invalid_argument("s" + std::to_string(k) + " is not below " + to_string(w) + " in Bruhat order");
  }
}

/// Depth-first search over factorizations w = x * rest with l(w) = l(x) +
/// l(rest), where x is a product of distinct generators drawn from
/// `allowed`. Calls accept(x, x_support, rest) at every reachable state and
/// stops at the first true.
template <class Accept>
bool search_distinct_prefixes(const Permutation& w, std::uint32_t allowed, Accept&& accept) {
  struct State {
    Permutation x;
    Permutation rest;
    std::uint32_t mask;
  };
  std::vector<State> stack{{Permutation::identity(w.degree()), w, 0U}};
  std::unordered_set<std::uint64_t> seen{w.key()};
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (accept(s.x, s.mask, s.rest)) return true;
    for (int i = 1; i < w.degree(); ++i) {
      if (!(allowed >> i & 1U) || (s.mask >> i & 1U) || !s.rest.has_left_descent(i)) continue;
      Permutation rest = s.rest.left_action(i);
      if (!seen.insert(rest.key()).second) continue;
      stack.push_back({s.x.right_action(i), std::move(rest), s.mask | (1U << i)});
    }
  }
  return false;
}

inline std::uint32_t all_generators(int n) { return ((1U << n) - 1U) & ~1U; }

}  // namespace detail

/// A reduced word x * s_k * y (or x * q * y for the non-boolean lattice
/// form) exhibiting a theorem condition, with the factors kept apart.
struct AtomWitness {
  Word left;
  Word middle;
  Word right;

  Word joined() const {
    Word w{left.letters, left.degree};
    w.letters.insert(w.letters.end(), middle.letters.begin(), middle.letters.end());
    w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
    return w;
  }
};

/// Reduced word x s_k y of w with x, y products of distinct generators,
/// s_k in neither, and x, y sharing at most s_{k-1}, s_{k+1}. Exists iff
/// [s_k, w] is boolean (equivalently modular, distributive).
inline std::optional<AtomWitness> find_boolean_atom_witness(int k, const Permutation& w) {
  detail::require_atom_below(k, w);
  // x and y use distinct letters other than s_k and share at most two.
  if (w.length() > w.degree() + 1) return std::nullopt;
  const std::uint32_t shareable = detail::bit(k - 1) | detail::bit(k + 1);
  const std::uint32_t allowed = detail::all_generators(w.degree()) & ~detail::bit(k);
  std::optional<AtomWitness> found;
  detail::search_distinct_prefixes(w, allowed, [&](const Permutation& x, std::uint32_t xmask, const Permutation& rest) {
    if (!rest.has_left_descent(k)) return false;
    const Permutation y = rest.left_action(k);
    const std::uint32_t ymask = support_mask(y);
    if (!is_product_of_distinct_generators(y) || (ymask >> k & 1U) || (xmask & ymask & ~shareable)) return false;
    found = AtomWitness{canonical_word(x), Word{{k}, w.degree()}, canonical_word(y)};
    return true;
  });
  return found;
}

/// Reduced word x (s_k s_{k-1} s_{k+1} s_k) y of w with x, y products of
/// distinct generators, disjoint, avoiding s_{k-1}, s_k, s_{k+1}. Only
/// possible for 2 <= k <= n-2.
inline std::optional<AtomWitness> find_nonboolean_lattice_witness(int k, const Permutation& w) {
  detail::require_atom_below(k, w);
  const int n = w.degree();
  if (k < 2 || k > n - 2) return std::nullopt;
  // four core letters plus disjoint x, y over the other n - 4 generators
  if (w.length() > n) return std::nullopt;
  const std::uint32_t forbidden = detail::bit(k - 1) | detail::bit(k) | detail::bit(k + 1);
  const Word core{{k, k - 1, k + 1, k}, n};
  const Permutation core_inverse = evaluate(core).inverse();
  std::optional<AtomWitness> found;
  detail::search_distinct_prefixes(
      w, detail::all_generators(n) & ~forbidden, [&](const Permutation& x, std::uint32_t xmask, const Permutation& rest) {
        const Permutation y = multiply(core_inverse, rest);
        if (y.length() != rest.length() - 4) return false;
        const std::uint32_t ymask = support_mask(y);
        if (!is_product_of_distinct_generators(y) || (ymask & forbidden) || (ymask & xmask)) return false;
        found = AtomWitness{canonical_word(x), core, canonical_word(y)};
        return true;
      });
  return found;
}

inline bool bruhat_atom_interval_boolean(int k, const Permutation& w) {
  return find_boolean_atom_witness(k, w).has_value();
}

inline bool bruhat_atom_interval_lattice(int k, const Permutation& w) {
  return bruhat_atom_interval_boolean(k, w) || find_nonboolean_lattice_witness(k, w).has_value();
}

/// Flags for [s_k, w] in Bruhat order from the word conditions alone.
inline LatticeReport bruhat_atom_class(int k, const Permutation& w) {
  const bool boolean = bruhat_atom_interval_boolean(k, w);
  LatticeReport r = detail::uniform_report(boolean, w.length() - 1);
  r.is_lattice = boolean || find_nonboolean_lattice_witness(k, w).has_value();
  return r;
}

/// Bruhat principal order ideal: lattice, modular, distributive and boolean
/// all coincide with w being a product of distinct generators.
inline LatticeReport poi_bruhat_class(const Permutation& w) {
  LatticeReport r = detail::uniform_report(is_product_of_distinct_generators(w), w.length());
  r.atom_count = std::popcount(support_mask(w));
  return r;
}

/// Weak principal order ideal: always a lattice; modular and distributive
/// iff 321-avoiding; boolean iff free.
inline LatticeReport poi_weak_class(const Permutation& w) {
  LatticeReport r;
  r.is_lattice = true;
  r.is_modular = r.is_distributive = is_fully_commutative(w);
  r.is_boolean = is_free(w);
  r.rank = w.length();
  r.atom_count = static_cast<int>(w.left_descents().size());
  return r;
}

/// [v, w] in weak order is isomorphic to the weak ideal of v^{-1} w.
inline LatticeReport weak_interval_class(const Permutation& v, const Permutation& w) {
  if (!weak_leq(v, w)) {
    throw std::invalid_argument(to_string(v) + " is not below " + to_string(w) + " in weak order");
  }
  return poi_weak_class(multiply(v.inverse(), w));
}

/// [s, w] boolean in Bruhat order for every generator s in the support of w.
inline bool boolean_over_support_bruhat(const Permutation& w) {
  if (is_product_of_distinct_generators(w)) return true;
  if (w.length() != 3) return false;
  for (int k = 1; k + 1 < w.degree(); ++k) {
    if (w == evaluate(Word{{k + 1, k, k + 1}, w.degree()})) return true;
  }
  return false;
}

/// [s, w] boolean in weak order for every generator s in the support of w.
inline bool boolean_over_support_weak(const Permutation& w) { return is_free(w); }

/// Structural counterparts: classify each interval directly.
inline bool boolean_over_support_bruhat_structural(const Permutation& w) {
  for (int k : support(w)) {
    const auto poset = extract_interval(IntervalSpec(Permutation::generator(w.degree(), k), w, OrderKind::Bruhat));
    if (!classify(poset).is_boolean) return false;
  }
  return true;
}

inline bool boolean_over_support_weak_structural(const Permutation& w) {
  for (int k : support(w)) {
    const Permutation s = Permutation::generator(w.degree(), k);
    if (!weak_leq(s, w)) return false;
    if (!classify(extract_interval(IntervalSpec(s, w, OrderKind::Weak))).is_boolean) return false;
  }
  return true;
}

/// Theorem-level prediction next to the structural classification of the
/// same interval.
struct TheoremReport {
  IntervalSpec subject;
  std::string rule;
  std::optional<LatticeReport> predicate;
  std::optional<LatticeReport> structural;
  std::optional<AtomWitness> witness;

  std::optional<bool> agree() const {
    if (!predicate || !structural) return std::nullopt;
    return predicate->same_flags(*structural) && predicate->rank == structural->rank;
  }
};

/// Picks the characterization that applies to the interval: principal
/// ideals, intervals above an atom, weak intervals via v^{-1} w, and
/// Bruhat intervals of rank at most 2. Other Bruhat intervals get no
/// prediction.
inline TheoremReport theorem_report(const IntervalSpec& spec, bool with_structural) {
  TheoremReport report{spec, "", std::nullopt, std::nullopt, std::nullopt};
  const Permutation& v = spec.bottom();
  const Permutation& w = spec.top();
  if (spec.kind() == OrderKind::Weak) {
    report.rule = v.is_identity() ? "weak-principal-ideal" : "weak-interval-as-ideal";
    report.predicate = weak_interval_class(v, w);
  } else if (v.is_identity()) {
    report.rule = "bruhat-principal-ideal";
    report.predicate = poi_bruhat_class(w);
  } else if (v.length() == 1) {
    const int k = v.right_descents().front();
    report.rule = "bruhat-atom-interval";
    report.predicate = bruhat_atom_class(k, w);
    report.witness = find_boolean_atom_witness(k, w);
    if (!report.witness) report.witness = find_nonboolean_lattice_witness(k, w);
  } else if (spec.rank() <= 2) {
    report.rule = "bruhat-short-interval";
    report.predicate = detail::uniform_report(true, spec.rank());
  } else {
    report.rule = "none";
  }
  if (with_structural) report.structural = classify(extract_interval(spec));
  return report;
}

}  // namespace bruhat
