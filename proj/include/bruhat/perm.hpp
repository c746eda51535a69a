#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bruhat {

/// Largest degree a Permutation can carry; keeps the one-line array inline
/// and lets key() pack the whole permutation into 64 bits.
inline constexpr int kMaxDegree = 16;

/// Element of the symmetric group S_n in one-line notation w(1)...w(n).
///
/// Values and generator indices are 1-based throughout the public
/// interface. Permutations of different degree never compare equal.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::span<const int> one_line) : degree_(static_cast<int>(one_line.size())) {
    if (degree_ < 1 || degree_ > kMaxDegree) {
      throw std::invalid_argument("permutation degree must be in [1, " + std::to_string(kMaxDegree) + "]");
    }
    std::uint32_t seen = 0;
    for (int i = 0; i < degree_; ++i) {
      const int v = one_line[static_cast<std::size_t>(i)];
      if (v < 1 || v > degree_ || (seen >> v & 1U)) {
        throw std::invalid_argument("one-line entries must be a bijection of {1..n}");
      }
      seen |= 1U << v;
      entries_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
  }

  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

  static Permutation identity(int n) {
    if (n < 1 || n > kMaxDegree) {
      throw std::invalid_argument("degenerate degree for identity: " + std::to_string(n));
    }
    Permutation p;
    p.degree_ = n;
    for (int i = 0; i < n; ++i) p.entries_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  /// The adjacent transposition sigma_i in S_n.
  static Permutation generator(int n, int i) {
    Permutation p = identity(n);
    return p.right_action(i);
  }

  int degree() const { return degree_; }

  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::vector<int> one_line() const {
    return {entries_.begin(), entries_.begin() + degree_};
  }

  /// w * sigma_i: swaps the values in positions i and i+1.
  Permutation right_action(int i) const {
    check_generator(i);
    Permutation p = *this;
    std::swap(p.entries_[static_cast<std::size_t>(i - 1)], p.entries_[static_cast<std::size_t>(i)]);
    return p;
  }

  /// sigma_i * w: swaps the values i and i+1 wherever they sit.
  Permutation left_action(int i) const {
    check_generator(i);
    Permutation p = *this;
    for (int j = 0; j < degree_; ++j) {
      auto& e = p.entries_[static_cast<std::size_t>(j)];
      if (e == i) {
        e = static_cast<std::uint8_t>(i + 1);
      } else if (e == i + 1) {
        e = static_cast<std::uint8_t>(i);
      }
    }
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.degree_ = degree_;
    for (int i = 0; i < degree_; ++i) {
      p.entries_[entries_[static_cast<std::size_t>(i)] - 1U] = static_cast<std::uint8_t>(i + 1);
    }
    return p;
  }

  /// Inversion count, which is the Coxeter length in type A.
  int length() const {
    int inv = 0;
    for (int i = 0; i < degree_; ++i) {
      for (int j = i + 1; j < degree_; ++j) {
        inv += entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(j)];
      }
    }
    return inv;
  }

  bool has_right_descent(int i) const {
    check_generator(i);
    return entries_[static_cast<std::size_t>(i - 1)] > entries_[static_cast<std::size_t>(i)];
  }

  /// i is a left descent iff i+1 appears to the left of i in one-line notation.
  bool has_left_descent(int i) const {
    check_generator(i);
    for (int j = 0; j < degree_; ++j) {
      const int e = entries_[static_cast<std::size_t>(j)];
      if (e == i) return false;
      if (e == i + 1) return true;
    }
    return false;
  }

  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (int i = 1; i < degree_; ++i) {
      if (has_right_descent(i)) out.push_back(i);
    }
    return out;
  }

  std::vector<int> left_descents() const { return inverse().right_descents(); }

  bool is_identity() const {
    for (int i = 0; i < degree_; ++i) {
      if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
  }

  /// Injective 64-bit packing, 4 bits per entry; the degree is not encoded.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < degree_; ++i) {
      k |= static_cast<std::uint64_t>(entries_[static_cast<std::size_t>(i)] - 1U) << (4 * i);
    }
    return k;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ &&
           std::equal(a.entries_.begin(), a.entries_.begin() + a.degree_, b.entries_.begin());
  }

  /// Orders by degree, then lexicographically by one-line notation.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.begin() + a.degree_,
                                        b.entries_.begin(), b.entries_.begin() + b.degree_);
  }

  /// Lexicographic successor within S_n; false (and unchanged) at the last permutation.
  bool next() {
    return std::next_permutation(entries_.begin(), entries_.begin() + degree_);
  }

 private:
  void check_generator(int i) const {
    if (i < 1 || i >= degree_) {
      throw std::out_of_range("generator index " + std::to_string(i) + " outside [1, " +
                              std::to_string(degree_ - 1) + "]");
    }
  }

  std::array<std::uint8_t, kMaxDegree> entries_{};
  int degree_ = 0;
};

/// (uv)(j) = u(v(j)); composition right to left.
inline Permutation multiply(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw std::invalid_argument("degree mismatch in multiply");
  }
  std::array<int, kMaxDegree> out{};
  for (int j = 1; j <= u.degree(); ++j) out[static_cast<std::size_t>(j - 1)] = u(v(j));
  return Permutation(std::span<const int>(out.data(), static_cast<std::size_t>(u.degree())));
}

inline Permutation operator*(const Permutation& u, const Permutation& v) { return multiply(u, v); }

/// Digit string for n <= 9 ("2143"), comma-separated otherwise.
inline std::string to_string(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.degree(); ++i) {
    if (w.degree() > 9 && i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s;
}

/// Accepts "3412" (n <= 9) or "3,4,1,2".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view piece = text.substr(start, end - start);
      if (piece.empty()) throw std::invalid_argument("empty entry in permutation '" + std::string(text) + "'");
      int v = 0;
      for (char c : piece) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > kMaxDegree) throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    if (text.empty() || text.size() > 9) {
      throw std::invalid_argument("digit-form permutation must have 1..9 entries: '" + std::string(text) + "'");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(values);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a permutation: '" + std::string(text) + "'");
  }
}

/// Lexicographic rank -> permutation of S_n via the factorial number system.
inline Permutation permutation_from_rank(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  if (rank >= fact[static_cast<std::size_t>(n)]) throw std::out_of_range("rank exceeds n!");
  std::vector<int> out;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = fact[static_cast<std::size_t>(i - 1)];
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(out);
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Calls fn(w) for every w in S_n in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  Permutation w = Permutation::identity(n);
  do {
    fn(std::as_const(w));
  } while (w.next());
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

inline Permutation longest_element(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(v);
}

}  // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
  std::size_t operator()(const bruhat::Permutation& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key() * 31U + static_cast<std::uint64_t>(w.degree()));
  }
};
