#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bruhat/classify.hpp"
#include "bruhat/lattice.hpp"
#include "bruhat/order.hpp"
#include "bruhat/patterns.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/words.hpp"

namespace bruhat {

using BigInt = boost::multiprecision::cpp_int;

/// Fibonacci numbers indexed so that F_0 = 0, F_1 = 1.
inline BigInt fib(int i) {
  if (i < 0) throw std::domain_error("fib index must be nonnegative");
  BigInt a = 0;
  BigInt b = 1;
  for (int j = 0; j < i; ++j) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

/// C_i = binom(2i, i) / (i + 1).
inline BigInt catalan(int i) {
  if (i < 0) throw std::domain_error("catalan index must be nonnegative");
  BigInt c = 1;
  for (int j = 0; j < i; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

inline BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

enum class CensusClass { Lattice, ModularOrDistributive, Boolean, BooleanOverSupport };
enum class CountMethod { Predicate, Structural, Constructive };

inline std::string_view to_string(CensusClass c) {
  switch (c) {
    case CensusClass::Lattice: return "lattice";
    case CensusClass::ModularOrDistributive: return "modular-or-distributive";
    case CensusClass::Boolean: return "boolean";
    case CensusClass::BooleanOverSupport: return "boolean-over-support";
  }
  return "?";
}

inline std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Predicate: return "predicate";
    case CountMethod::Structural: return "structural";
    case CountMethod::Constructive: return "constructive";
  }
  return "?";
}

/// One counted-versus-closed-form comparison.
struct CensusRow {
  std::string table;
  int n = 0;
  std::optional<int> k;
  OrderKind order = OrderKind::Bruhat;
  CensusClass cls = CensusClass::Boolean;
  BigInt counted;
  BigInt formula;
  bool match = false;
  CountMethod method = CountMethod::Predicate;
};

inline CensusRow make_row(std::string table, int n, std::optional<int> k, OrderKind order, CensusClass cls,
                          BigInt counted, BigInt formula, CountMethod method) {
  const bool match = counted == formula;
  return CensusRow{std::move(table), n, k, order, cls, std::move(counted), std::move(formula), match, method};
}

namespace formulas {

/// Principal order ideals of S_n with the given property.
inline BigInt poi_count(int n, OrderKind order, CensusClass cls) {
  if (order == OrderKind::Bruhat) return fib(2 * n - 1);
  switch (cls) {
    case CensusClass::Lattice: return big_factorial(n);
    case CensusClass::ModularOrDistributive: return catalan(n);
    case CensusClass::Boolean: return fib(n + 1);
    default: throw std::invalid_argument("no principal-ideal formula for this class");
  }
}

/// Boolean intervals [s_k, w] in Bruhat order on S_n.
inline BigInt bruhat_atom_boolean(int n, int k) {
  if (n < 3 || k < 1 || k > n - 1) throw std::domain_error("need n >= 3 and 1 <= k <= n-1");
  if (k == 1 || k == n - 1) return 4 * fib(2 * n - 4);
  return 16 * fib(2 * k - 2) * fib(2 * (n - k) - 2);
}

/// Lattice intervals [s_k, w] in Bruhat order on S_n.
inline BigInt bruhat_atom_lattice(int n, int k) {
  if (n <= 3 || k == 1 || k == n - 1) return bruhat_atom_boolean(n, k);
  return bruhat_atom_boolean(n, k) + fib(2 * n - 5) - fib(2 * k - 3) * fib(2 * (n - k) - 3);
}

inline BigInt bruhat_atom(int n, int k, CensusClass cls) {
  return cls == CensusClass::Lattice ? bruhat_atom_lattice(n, k) : bruhat_atom_boolean(n, k);
}

/// Intervals [s_k, w] in the weak order on S_n.
inline BigInt weak_atom(int n, int k, CensusClass cls) {
  switch (cls) {
    case CensusClass::Lattice: return big_factorial(n) / 2;
    case CensusClass::ModularOrDistributive: return catalan(n) - catalan(n - 1);
    case CensusClass::Boolean: return fib(k + 1) * fib(n - k + 1);
    default: throw std::invalid_argument("no weak atom formula for this class");
  }
}

/// Sum over k of the weak atom counts, in closed form.
inline BigInt weak_atom_total(int n, CensusClass cls) {
  switch (cls) {
    case CensusClass::Lattice: return (n - 1) * big_factorial(n) / 2;
    case CensusClass::ModularOrDistributive: return (n - 1) * (catalan(n) - catalan(n - 1));
    case CensusClass::Boolean: return ((n + 1) * fib(n + 3) + (n - 7) * fib(n + 1)) / 5;
    default: throw std::invalid_argument("no weak atom total for this class");
  }
}

inline BigInt boolean_over_support(int n, OrderKind order) {
  return order == OrderKind::Bruhat ? fib(2 * n - 1) + (n - 2) : fib(n + 1);
}

}  // namespace formulas

struct CensusOptions {
  int jobs = 1;
  /// Largest n for structural sweeps.
  int structural_cap = 5;
  /// Largest n for predicate and constructive sweeps.
  int predicate_cap = 9;
};

/// Runs fn(w, counters) over all of S_n, split into contiguous lexicographic
/// rank ranges, one per worker; per-worker counters are summed at the end.
template <class Fn>
std::vector<std::uint64_t> sweep_counts(int n, std::size_t slots, int jobs, Fn&& fn) {
  const std::uint64_t total = factorial(n);
  const auto workers = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(slots, 0));
  auto run = [&](std::uint64_t worker) {
    const std::uint64_t begin = total * worker / workers;
    const std::uint64_t end = total * (worker + 1) / workers;
    if (begin == end) return;
    Permutation w = permutation_from_rank(n, begin);
    std::span<std::uint64_t> counters(partial[worker]);
    for (std::uint64_t r = begin; r < end; ++r) {
      fn(std::as_const(w), counters);
      w.next();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::uint64_t t = 0; t < workers; ++t) threads.emplace_back(run, t);
  }
  std::vector<std::uint64_t> sum(slots, 0);
  for (const auto& p : partial) {
    for (std::size_t s = 0; s < slots; ++s) sum[s] += p[s];
  }
  return sum;
}

namespace detail {

inline void check_range(int n, int lo, int hi, std::string_view what) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }
}

inline void check_method(int n, CountMethod method, const CensusOptions& options) {
  if (method == CountMethod::Structural) {
    check_range(n, 1, options.structural_cap, "structural sweep");
  } else {
    check_range(n, 1, options.predicate_cap, "predicate sweep");
  }
}

inline constexpr CensusClass kLatticeClasses[] = {CensusClass::Lattice, CensusClass::ModularOrDistributive,
                                                  CensusClass::Boolean};

inline void tally(const LatticeReport& r, std::span<std::uint64_t> c, std::size_t offset = 0) {
  c[offset] += r.is_lattice;
  c[offset + 1] += r.is_modular && r.is_distributive;
  c[offset + 2] += r.is_boolean;
}

}  // namespace detail

/// Principal order ideals of S_n that are lattices, modular/distributive,
/// boolean; one row per class.
inline std::vector<CensusRow> count_poi_classes(int n, OrderKind order, CountMethod method = CountMethod::Predicate,
                                                const CensusOptions& options = {}) {
  detail::check_range(n, 2, kMaxDegree, "principal ideal census");
  detail::check_method(n, method, options);
  auto counts = sweep_counts(n, 3, options.jobs, [&](const Permutation& w, std::span<std::uint64_t> c) {
    if (method == CountMethod::Structural) {
      detail::tally(classify(principal_order_ideal(w, order)), c);
    } else if (order == OrderKind::Bruhat) {
      const bool b = is_boolean_element(w);
      c[0] += b;
      c[1] += b;
      c[2] += b;
    } else {
      c[0] += 1;
      c[1] += is_fully_commutative(w);
      c[2] += is_free(w);
    }
  });
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    const CensusClass cls = detail::kLatticeClasses[i];
    rows.push_back(make_row("3", n, std::nullopt, order, cls, counts[i], formulas::poi_count(n, order, cls), method));
  }
  return rows;
}

/// Every w with [s_k, w] boolean, generated directly as products x s_k y of
/// boolean elements x, y that avoid s_k and share at most s_{k-1}, s_{k+1},
/// deduplicated by permutation. Each member records how many copies of
/// s_{k+1} its factorization uses; `consistent` is false if some w was
/// produced with two different copy counts.
struct ConstructiveAtomSet {
  std::unordered_map<Permutation, int> members;
  std::map<int, std::uint64_t> by_upper_neighbor_copies;
  bool consistent = true;
};

inline ConstructiveAtomSet constructive_atom_boolean_set(int n, int k) {
  detail::check_range(n, 3, kMaxDegree, "constructive census");
  if (k < 1 || k > n - 1) throw std::out_of_range("generator index outside [1, n-1]");

  // Products of distinct generators avoiding s_k, with their supports.
  std::vector<std::pair<Permutation, std::uint32_t>> factors;
  {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<Permutation, std::uint32_t>> stack{{Permutation::identity(n), 0U}};
    seen.insert(stack.front().first.key());
    while (!stack.empty()) {
      auto [x, mask] = stack.back();
      stack.pop_back();
      factors.emplace_back(x, mask);
      for (int i = 1; i < n; ++i) {
        if (i == k || (mask >> i & 1U)) continue;
        Permutation next = x.right_action(i);
        if (seen.insert(next.key()).second) stack.emplace_back(next, mask | (1U << i));
      }
    }
  }

  const std::uint32_t shareable = detail::bit(k - 1) | detail::bit(k + 1);
  const std::uint32_t upper = detail::bit(k + 1);
  ConstructiveAtomSet out;
  for (const auto& [x, xmask] : factors) {
    const Permutation xs = x.right_action(k);
    for (const auto& [y, ymask] : factors) {
      if (xmask & ymask & ~shareable) continue;
      const Permutation w = multiply(xs, y);
      if (w.length() != x.length() + 1 + y.length()) continue;
      const int copies = ((xmask & upper) != 0) + ((ymask & upper) != 0);
      auto [it, inserted] = out.members.emplace(w, copies);
      if (!inserted && it->second != copies) out.consistent = false;
    }
  }
  for (const auto& [w, copies] : out.members) ++out.by_upper_neighbor_copies[copies];
  return out;
}

/// t(n, k) by constructive generation.
inline CensusRow count_bruhat_atom_boolean(int n, int k) {
  const auto set = constructive_atom_boolean_set(n, k);
  return make_row("4", n, k, OrderKind::Bruhat, CensusClass::Boolean, set.members.size(),
                  formulas::bruhat_atom_boolean(n, k), CountMethod::Constructive);
}

/// Intervals [s_k, w] in Bruhat order by class, sweeping all w above s_k.
inline std::vector<CensusRow> count_bruhat_atom_classes(int n, int k, CountMethod method = CountMethod::Predicate,
                                                        const CensusOptions& options = {}) {
  detail::check_range(n, 3, kMaxDegree, "Bruhat atom census");
  detail::check_method(n, method, options);
  if (method == CountMethod::Constructive) throw std::invalid_argument("use count_bruhat_atom_boolean for constructive");
  const Permutation atom = Permutation::generator(n, k);
  auto counts = sweep_counts(n, 3, options.jobs, [&](const Permutation& w, std::span<std::uint64_t> c) {
    if (!(support_mask(w) >> k & 1U)) return;
    if (method == CountMethod::Structural) {
      detail::tally(classify(extract_interval(IntervalSpec(atom, w, OrderKind::Bruhat))), c);
    } else {
      detail::tally(bruhat_atom_class(k, w), c);
    }
  });
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    const CensusClass cls = detail::kLatticeClasses[i];
    rows.push_back(make_row("5", n, k, OrderKind::Bruhat, cls, counts[i], formulas::bruhat_atom(n, k, cls), method));
  }
  return rows;
}

inline CensusRow count_bruhat_atom_lattice(int n, int k, CountMethod method = CountMethod::Predicate,
                                           const CensusOptions& options = {}) {
  return count_bruhat_atom_classes(n, k, method, options).front();
}

/// Intervals [s_k, w]_wk by class: sweep w with s_k <=_wk w and classify
/// s_k w (predicate) or the extracted interval (structural).
inline std::vector<CensusRow> count_weak_atom_classes(int n, int k, CountMethod method = CountMethod::Predicate,
                                                      const CensusOptions& options = {}) {
  detail::check_range(n, 2, kMaxDegree, "weak atom census");
  detail::check_method(n, method, options);
  if (k < 1 || k > n - 1) throw std::out_of_range("generator index outside [1, n-1]");
  const Permutation atom = Permutation::generator(n, k);
  auto counts = sweep_counts(n, 3, options.jobs, [&](const Permutation& w, std::span<std::uint64_t> c) {
    if (!w.has_left_descent(k)) return;
    if (method == CountMethod::Structural) {
      detail::tally(classify(extract_interval(IntervalSpec(atom, w, OrderKind::Weak))), c);
    } else {
      detail::tally(poi_weak_class(w.left_action(k)), c);
    }
  });
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    const CensusClass cls = detail::kLatticeClasses[i];
    rows.push_back(make_row("5", n, k, OrderKind::Weak, cls, counts[i], formulas::weak_atom(n, k, cls), method));
  }
  return rows;
}

inline CensusRow count_weak_atom(int n, int k, CensusClass cls, CountMethod method = CountMethod::Predicate,
                                 const CensusOptions& options = {}) {
  for (auto& row : count_weak_atom_classes(n, k, method, options)) {
    if (row.cls == cls) return row;
  }
  throw std::invalid_argument("no weak atom count for class " + std::string(to_string(cls)));
}

/// Elements w with [s, w] boolean for every s in the support of w.
inline CensusRow count_boolean_over_support(int n, OrderKind order, CountMethod method = CountMethod::Predicate,
                                            const CensusOptions& options = {}) {
  detail::check_range(n, 2, kMaxDegree, "support census");
  detail::check_method(n, method, options);
  auto counts = sweep_counts(n, 1, options.jobs, [&](const Permutation& w, std::span<std::uint64_t> c) {
    bool ok = false;
    if (method == CountMethod::Structural) {
      ok = order == OrderKind::Bruhat ? boolean_over_support_bruhat_structural(w)
                                      : boolean_over_support_weak_structural(w);
    } else {
      ok = order == OrderKind::Bruhat ? boolean_over_support_bruhat(w) : boolean_over_support_weak(w);
    }
    c[0] += ok;
  });
  return make_row("support", n, std::nullopt, order, CensusClass::BooleanOverSupport, counts[0],
                  formulas::boolean_over_support(n, order), method);
}

enum class VerifyMode { Predicate, Structural, Both };

inline VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "predicate") return VerifyMode::Predicate;
  if (text == "structural") return VerifyMode::Structural;
  if (text == "both") return VerifyMode::Both;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected predicate, structural or both)");
}

/// Census tables: "3" principal ideals, "4" Bruhat boolean intervals above
/// atoms, "5" all classes above atoms in both orders, "support" boolean over
/// the support.
inline const std::vector<std::string>& census_tables() {
  static const std::vector<std::string> tables{"3", "4", "5", "support"};
  return tables;
}

struct VerifyReport {
  std::vector<CensusRow> rows;
  /// Same count obtained two different ways but with different results.
  std::vector<std::string> disagreements;
  /// (table, n) combinations skipped because a method cap excluded them.
  std::vector<std::string> skipped;

  bool ok() const {
    return disagreements.empty() &&
           std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.match; });
  }
};

namespace detail {

inline void rows_for(const std::string& table, int n, CountMethod method, const CensusOptions& options,
                     std::vector<CensusRow>& out) {
  auto append = [&](std::vector<CensusRow> rows) { out.insert(out.end(), rows.begin(), rows.end()); };
  if (table == "3") {
    append(count_poi_classes(n, OrderKind::Bruhat, method, options));
    append(count_poi_classes(n, OrderKind::Weak, method, options));
  } else if (table == "4") {
    if (n < 3) return;
    for (int k = 1; k < n; ++k) {
      if (method == CountMethod::Constructive) {
        out.push_back(count_bruhat_atom_boolean(n, k));
      } else {
        auto row = count_bruhat_atom_classes(n, k, method, options)[2];
        row.table = "4";
        out.push_back(std::move(row));
      }
    }
  } else if (table == "5") {
    if (n >= 3) {
      for (int k = 1; k < n; ++k) append(count_bruhat_atom_classes(n, k, method, options));
    }
    std::vector<BigInt> totals(3, 0);
    for (int k = 1; k < n; ++k) {
      auto rows = count_weak_atom_classes(n, k, method, options);
      for (std::size_t i = 0; i < 3; ++i) totals[i] += rows[i].counted;
      append(std::move(rows));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      out.push_back(make_row("5", n, std::nullopt, OrderKind::Weak, kLatticeClasses[i], totals[i],
                             formulas::weak_atom_total(n, kLatticeClasses[i]), method));
    }
  } else if (table == "support") {
    out.push_back(count_boolean_over_support(n, OrderKind::Bruhat, method, options));
    out.push_back(count_boolean_over_support(n, OrderKind::Weak, method, options));
  } else {
    throw std::invalid_argument("unknown census table '" + table + "'");
  }
}

}  // namespace detail

/// Runs the selected tables over n in [n_lo, n_hi]. Predicate mode counts
/// table 4 constructively and everything else by predicate sweeps;
/// structural mode classifies extracted posets (within the structural cap);
/// both runs every applicable method and cross-checks the counts.
inline VerifyReport verify(int n_lo, int n_hi, VerifyMode mode, const std::vector<std::string>& tables,
                           const CensusOptions& options = {}) {
  if (n_lo < 2 || n_hi < n_lo) throw std::out_of_range("bad n range for verify");
  VerifyReport report;
  for (const auto& table : tables) {
    for (int n = n_lo; n <= n_hi; ++n) {
      std::vector<CountMethod> methods;
      if (mode != VerifyMode::Structural) {
        methods.push_back(table == "4" ? CountMethod::Constructive : CountMethod::Predicate);
        if (mode == VerifyMode::Both && table == "4") methods.push_back(CountMethod::Predicate);
      }
      if (mode != VerifyMode::Predicate) methods.push_back(CountMethod::Structural);
      for (CountMethod m : methods) {
        const int cap = m == CountMethod::Structural ? options.structural_cap : options.predicate_cap;
        if (n > cap) {
          report.skipped.push_back(table + ":n=" + std::to_string(n) + ":" + std::string(to_string(m)));
          continue;
        }
        detail::rows_for(table, n, m, options, report.rows);
      }
    }
  }
  using Key = std::tuple<std::string, int, int, int, int>;
  std::map<Key, const CensusRow*> first;
  for (const auto& row : report.rows) {
    const Key key{row.table, row.n, row.k.value_or(0), static_cast<int>(row.order), static_cast<int>(row.cls)};
    auto [it, inserted] = first.emplace(key, &row);
    if (!inserted && it->second->counted != row.counted) {
      report.disagreements.push_back("table " + row.table + " n=" + std::to_string(row.n) +
                                     (row.k ? " k=" + std::to_string(*row.k) : std::string()) + " " +
                                     std::string(to_string(row.order)) + " " + std::string(to_string(row.cls)) + ": " +
                                     std::string(to_string(it->second->method)) + "=" + it->second->counted.str() +
                                     " vs " + std::string(to_string(row.method)) + "=" + row.counted.str());
    }
  }
  return report;
}

}  // namespace bruhat
