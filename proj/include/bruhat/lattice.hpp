#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bruhat/poset.hpp"

namespace bruhat {

/// Meet and join for every ordered pair of a lattice, row-major.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::uint32_t> meet_table;
  std::vector<std::uint32_t> join_table;

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_table[a * n + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_table[a * n + b]; }
};

/// Flags for the chain boolean => distributive => modular => lattice.
struct LatticeReport {
  bool is_lattice = false;
  bool is_modular = false;
  bool is_distributive = false;
  bool is_boolean = false;
  std::optional<int> rank;
  std::optional<int> atom_count;

  bool same_flags(const LatticeReport& o) const {
    return is_lattice == o.is_lattice && is_modular == o.is_modular && is_distributive == o.is_distributive &&
           is_boolean == o.is_boolean;
  }

  bool respects_hierarchy() const {
    return (!is_boolean || is_distributive) && (!is_distributive || is_modular) && (!is_modular || is_lattice);
  }

  friend bool operator==(const LatticeReport&, const LatticeReport&) = default;
};

/// Meet/join tables when every pair has a least upper bound and a greatest
/// lower bound; nullopt otherwise. Works for unbounded posets too.
///
/// Indices follow a linear extension, so the lowest index in a set of upper
/// bounds is minimal in it; the join exists iff that element lies below the
/// whole set. Dually for meets.
template <class Label>
std::optional<LatticeTables> lattice_tables(const FinitePoset<Label>& poset) {
  const std::size_t n = poset.size();
  LatticeTables t{n, std::vector<std::uint32_t>(n * n), std::vector<std::uint32_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const DynamicBitset upper = poset.up(a) & poset.up(b);
      const std::size_t j = upper.find_first();
      if (j == n || !upper.is_subset_of(poset.up(j))) return std::nullopt;
      const DynamicBitset lower = poset.down(a) & poset.down(b);
      const std::size_t m = lower.find_last();
      if (m == n || !lower.is_subset_of(poset.down(m))) return std::nullopt;
      t.join_table[a * n + b] = t.join_table[b * n + a] = static_cast<std::uint32_t>(j);
      t.meet_table[a * n + b] = t.meet_table[b * n + a] = static_cast<std::uint32_t>(m);
    }
  }
  return t;
}

template <class Label>
bool is_lattice(const FinitePoset<Label>& poset) {
  return lattice_tables(poset).has_value();
}

/// a <= c  implies  a v (b ^ c) = (a v b) ^ c, checked on all triples.
template <class Label>
bool is_modular(const FinitePoset<Label>& poset, const LatticeTables& t) {
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    poset.up(a).for_each([&](std::size_t c) {
      if (!ok) return;
      for (std::size_t b = 0; b < n; ++b) {
        if (t.join(a, t.meet(b, c)) != t.meet(t.join(a, b), c)) {
          ok = false;
          return;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

template <class Label>
bool is_modular(const FinitePoset<Label>& poset) {
  auto t = lattice_tables(poset);
  if (!t) throw std::invalid_argument("is_modular requires a lattice");
  return is_modular(poset, *t);
}

/// x ^ (y v z) = (x ^ y) v (x ^ z) on all triples.
template <class Label>
bool is_distributive(const FinitePoset<Label>& poset, const LatticeTables& t) {
  const std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (t.meet(x, t.join(y, z)) != t.join(t.meet(x, y), t.meet(x, z))) return false;
      }
    }
  }
  return true;
}

template <class Label>
bool is_distributive(const FinitePoset<Label>& poset) {
  auto t = lattice_tables(poset);
  if (!t) throw std::invalid_argument("is_distributive requires a lattice");
  return is_distributive(poset, *t);
}

/// Isomorphic to the subsets of its atoms: |P| = 2^atoms, x -> {atoms <= x}
/// is a bijection onto all subsets, and it is an order embedding.
template <class Label>
bool is_boolean(const FinitePoset<Label>& poset) {
  const auto bottom = poset.minimum();
  if (!bottom) return false;
  const auto atoms = poset.atoms();
  if (atoms.size() > 30) return false;
  if (poset.size() != (std::size_t{1} << atoms.size())) return false;
  std::vector<std::uint32_t> mask(poset.size(), 0);
  std::vector<bool> hit(poset.size(), false);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (poset.leq(atoms[a], x)) mask[x] |= 1U << a;
    }
    if (hit[mask[x]]) return false;
    hit[mask[x]] = true;
  }
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y = 0; y < poset.size(); ++y) {
      const bool subset = (mask[x] & ~mask[y]) == 0;
      if (subset != poset.leq(x, y)) return false;
    }
  }
  return true;
}

/// All four flags, stopping at the first failing level of the hierarchy.
template <class Label>
LatticeReport classify(const FinitePoset<Label>& poset) {
  LatticeReport r;
  r.rank = poset.rank();
  if (poset.minimum()) r.atom_count = static_cast<int>(poset.atoms().size());
  const auto tables = lattice_tables(poset);
  if (!tables) return r;
  r.is_lattice = true;
  r.is_modular = is_modular(poset, *tables);
  if (!r.is_modular) return r;
  r.is_distributive = is_distributive(poset, *tables);
  if (!r.is_distributive) return r;
  r.is_boolean = is_boolean(poset);
  return r;
}

}  // namespace bruhat
