#pragma once

// The symmetric group S_r and the affine symmetric group of rank r, both in
// window notation.
//
// A FinitePermutation is the window [w(1), ..., w(r)] of a bijection of
// {1..r}. An AffinePermutation is the window of a bijection w of Z with
// w(i + r) = w(i) + r. The Coxeter group generated by s_0..s_{r-1} consists of
// the windows summing to r(r+1)/2; we also admit the length-zero rotations
// pi^k (i -> i + k), whose windows sum to r(r+1)/2 + r*k. These are needed
// to realize lattice translations by unit vectors. `winding()` reports k.
//
// Generator conventions: s_i (1 <= i < r) swaps positions i and i+1; the
// affine s_0 swaps positions 0 and 1, i.e. w(1) <-> w(0) = w(r) - r.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

enum class GroupKind { finite, affine };

inline const char* to_string(GroupKind k) {
  return k == GroupKind::finite ? "finite" : "affine";
}

namespace detail {

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int mod_pos(int a, int r) {
  int m = a % r;
  return m < 0 ? m + r : m;
}

inline std::size_t hash_window(const std::vector<int>& w) {
  std::size_t h = w.size();
  for (int x : w) h ^= std::hash<int>{}(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

inline std::string format_window(const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

inline std::vector<int> parse_window(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  auto first = s.find('[');
  auto last = s.rfind(']');
  if (first == std::string::npos || last == std::string::npos || last < first) {
    throw ParseError("window must look like [3,1,2]: \"" + s + "\"");
  }
  std::string body = s.substr(first + 1, last - first - 1);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
      out.push_back(x);
    } catch (const std::exception&) {
      throw ParseError("bad window entry \"" + item + "\"");
    }
  }
  return out;
}

}  // namespace detail

/// Element of S_r.
class FinitePermutation {
 public:
  static constexpr GroupKind kind = GroupKind::finite;
  static constexpr int first_generator = 1;

  FinitePermutation() = default;

  explicit FinitePermutation(std::vector<int> window) : w_(std::move(window)) {
    const int r = rank();
    if (r < 1) throw DomainError("FinitePermutation: rank must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
    for (int x : w_) {
      if (x < 1 || x > r || seen[static_cast<std::size_t>(x)]) {
        throw DomainError("FinitePermutation: window " + detail::format_window(w_) +
                          " is not a permutation of 1.." + std::to_string(r));
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static FinitePermutation identity(int r) {
    if (r < 1) throw DomainError("FinitePermutation: rank must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1);
    return FinitePermutation(std::move(w), Unchecked{});
  }

  static FinitePermutation generator(int r, int i) {
    check_generator(r, i);
    return identity(r).times_generator(i);
  }

  static std::vector<int> generator_indices(int r) {
    std::vector<int> g;
    for (int i = 1; i < r; ++i) g.push_back(i);
    return g;
  }

  static bool is_generator_index(int r, int i) { return i >= 1 && i < r; }

  /// Order of s_i s_j; 0 encodes infinity.
  static int coxeter_m(int /*r*/, int i, int j) {
    if (i == j) return 1;
    return std::abs(i - j) == 1 ? 3 : 2;
  }

  int rank() const noexcept { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const noexcept { return w_; }
  int winding() const noexcept { return 0; }

  /// w(i) for 1 <= i <= r.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }

  FinitePermutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= rank(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return FinitePermutation(std::move(inv), Unchecked{});
  }

  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  bool has_left_descent(int i) const { return position_of(i) > position_of(i + 1); }

  /// w * s_i
  FinitePermutation times_generator(int i) const {
    check_generator(rank(), i);
    FinitePermutation r = *this;
    std::swap(r.w_[static_cast<std::size_t>(i - 1)], r.w_[static_cast<std::size_t>(i)]);
    return r;
  }

  /// s_i * w
  FinitePermutation generator_times(int i) const {
    check_generator(rank(), i);
    FinitePermutation r = *this;
    for (int& x : r.w_) {
      if (x == i) {
        x = i + 1;
      } else if (x == i + 1) {
        x = i;
      }
    }
    return r;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i) {
      if ((*this)(i) != i) return false;
    }
    return true;
  }

  /// True for the length-zero elements (only the identity here).
  bool is_length_zero() const { return is_identity(); }

  friend FinitePermutation compose(const FinitePermutation& a, const FinitePermutation& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch("compose: rank " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
    }
    std::vector<int> w(b.w_.size());
    for (int i = 1; i <= b.rank(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return FinitePermutation(std::move(w), Unchecked{});
  }

  friend FinitePermutation operator*(const FinitePermutation& a, const FinitePermutation& b) {
    return compose(a, b);
  }

  friend auto operator<=>(const FinitePermutation&, const FinitePermutation&) = default;
  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;

  std::size_t hash() const noexcept { return detail::hash_window(w_); }
  std::string to_string() const { return detail::format_window(w_); }

  static FinitePermutation parse(std::string_view text) {
    return FinitePermutation(detail::parse_window(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const FinitePermutation& w) {
    return os << w.to_string();
  }

 private:
  struct Unchecked {};
  FinitePermutation(std::vector<int> w, Unchecked) : w_(std::move(w)) {}

  static void check_generator(int r, int i) {
    if (!is_generator_index(r, i)) {
      throw DomainError("generator s" + std::to_string(i) + " out of range for S_" +
                        std::to_string(r));
    }
  }

  int position_of(int value) const {
    for (int j = 0; j < rank(); ++j) {
      if (w_[static_cast<std::size_t>(j)] == value) return j + 1;
    }
    return 0;
  }

  std::vector<int> w_;
};

/// Element of the (extended) affine symmetric group of rank r >= 2.
class AffinePermutation {
 public:
  static constexpr GroupKind kind = GroupKind::affine;
  static constexpr int first_generator = 0;

  AffinePermutation() = default;

  explicit AffinePermutation(std::vector<int> window) : w_(std::move(window)) {
    const int r = rank();
    if (r < 2) throw DomainError("AffinePermutation: rank must be >= 2");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int x : w_) {
      auto m = static_cast<std::size_t>(detail::mod_pos(x, r));
      if (seen[m]) {
        throw DomainError("AffinePermutation: window " + detail::format_window(w_) +
                          " repeats a residue mod " + std::to_string(r));
      }
      seen[m] = true;
    }
    const long base = static_cast<long>(r) * (r + 1) / 2;
    long sum = std::accumulate(w_.begin(), w_.end(), 0L);
    if ((sum - base) % r != 0) {
      throw DomainError("AffinePermutation: window sum incompatible with rank");
    }
  }

  static AffinePermutation identity(int r) {
    if (r < 2) throw DomainError("AffinePermutation: rank must be >= 2");
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(std::move(w), Unchecked{});
  }

  /// pi^k: i -> i + k (length zero).
  static AffinePermutation rotation(int r, int k) {
    AffinePermutation e = identity(r);
    for (int& x : e.w_) x += k;
    return e;
  }

  static AffinePermutation generator(int r, int i) {
    check_generator(r, i);
    return identity(r).times_generator(i);
  }

  static std::vector<int> generator_indices(int r) {
    std::vector<int> g;
    for (int i = 0; i < r; ++i) g.push_back(i);
    return g;
  }

  static bool is_generator_index(int r, int i) { return i >= 0 && i < r; }

  static int coxeter_m(int r, int i, int j) {
    if (i == j) return 1;
    if (r == 2) return 0;  // infinite dihedral
    int d = detail::mod_pos(i - j, r);
    return (d == 1 || d == r - 1) ? 3 : 2;
  }

  int rank() const noexcept { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const noexcept { return w_; }

  /// k such that this element lies in pi^k times the Coxeter group.
  int winding() const {
    const int r = rank();
    long sum = std::accumulate(w_.begin(), w_.end(), 0L);
    return static_cast<int>((sum - static_cast<long>(r) * (r + 1) / 2) / r);
  }

  /// w(j) for any integer j.
  int operator()(int j) const {
    const int r = rank();
    const int q = detail::floor_div(j - 1, r);
    const int p = j - q * r;  // 1..r
    return w_[static_cast<std::size_t>(p - 1)] + q * r;
  }

  /// w^{-1}(value) for any integer value.
  int preimage(int value) const {
    const int r = rank();
    for (int j = 1; j <= r; ++j) {
      int x = w_[static_cast<std::size_t>(j - 1)];
      if (detail::mod_pos(x - value, r) == 0) return j + (value - x);
    }
    return 0;  // unreachable for valid windows
  }

  AffinePermutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int p = 1; p <= rank(); ++p) inv[static_cast<std::size_t>(p - 1)] = preimage(p);
    return AffinePermutation(std::move(inv), Unchecked{});
  }

  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  bool has_left_descent(int i) const { return preimage(i) > preimage(i + 1); }

  /// w * s_i
  AffinePermutation times_generator(int i) const {
    check_generator(rank(), i);
    AffinePermutation r = *this;
    const int n = rank();
    if (i == 0) {
      const int w1 = r.w_.front();
      const int wn = r.w_.back();
      r.w_.front() = wn - n;
      r.w_.back() = w1 + n;
    } else {
      std::swap(r.w_[static_cast<std::size_t>(i - 1)], r.w_[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  /// s_i * w
  AffinePermutation generator_times(int i) const {
    check_generator(rank(), i);
    AffinePermutation r = *this;
    const int n = rank();
    for (int& x : r.w_) {
      int m = detail::mod_pos(x, n);
      if (m == i) {
        x += 1;
      } else if (m == detail::mod_pos(i + 1, n)) {
        x -= 1;
      }
    }
    return r;
  }

  /// pi^k * w
  AffinePermutation rotated(int k) const {
    AffinePermutation r = *this;
    for (int& x : r.w_) x += k;
    return r;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i) {
      if (w_[static_cast<std::size_t>(i - 1)] != i) return false;
    }
    return true;
  }

  /// Length-zero elements are exactly the rotations pi^k.
  bool is_length_zero() const {
    for (int i = 1; i < rank(); ++i) {
      if (w_[static_cast<std::size_t>(i)] != w_[static_cast<std::size_t>(i - 1)] + 1) return false;
    }
    return true;
  }

  friend AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch("compose: rank " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
    }
    std::vector<int> w(b.w_.size());
    for (int i = 1; i <= b.rank(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return AffinePermutation(std::move(w), Unchecked{});
  }

  friend AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b) {
    return compose(a, b);
  }

  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

  std::size_t hash() const noexcept { return detail::hash_window(w_); }
  std::string to_string() const { return detail::format_window(w_); }

  static AffinePermutation parse(std::string_view text) {
    return AffinePermutation(detail::parse_window(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) {
    return os << w.to_string();
  }

 private:
  struct Unchecked {};
  AffinePermutation(std::vector<int> w, Unchecked) : w_(std::move(w)) {}

  static void check_generator(int r, int i) {
    if (!is_generator_index(r, i)) {
      throw DomainError("generator s" + std::to_string(i) +
                        " out of range for the affine group of rank " + std::to_string(r));
    }
  }

  std::vector<int> w_;
};

template <class W>
concept CoxeterElement = requires(const W& w, int i, int r) {
  { W::kind } -> std::convertible_to<GroupKind>;
  { W::identity(r) } -> std::same_as<W>;
  { W::generator(r, i) } -> std::same_as<W>;
  { W::generator_indices(r) } -> std::same_as<std::vector<int>>;
  { w.rank() } -> std::convertible_to<int>;
  { w.winding() } -> std::convertible_to<int>;
  { w.has_right_descent(i) } -> std::convertible_to<bool>;
  { w.has_left_descent(i) } -> std::convertible_to<bool>;
  { w.times_generator(i) } -> std::same_as<W>;
  { w.generator_times(i) } -> std::same_as<W>;
  { w.is_length_zero() } -> std::convertible_to<bool>;
  { w.hash() } -> std::convertible_to<std::size_t>;
};

struct PermutationHash {
  template <CoxeterElement W>
  std::size_t operator()(const W& w) const noexcept {
    return w.hash();
  }
};

/// A sequence of generator indices, read left to right as a product.
struct Word {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;

  /// "s1 s2 s1"; the empty word prints as "".
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) s += ' ';
      s += 's' + std::to_string(letters[k]);
    }
    return s;
  }

  static Word parse(std::string_view text) {
    Word w;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
      if (tok == "e") continue;
      if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad word letter \"" + tok + "\"");
      try {
        std::size_t used = 0;
        int i = std::stoi(tok.substr(1), &used);
        if (used + 1 != tok.size()) throw std::invalid_argument("trailing");
        w.letters.push_back(i);
      } catch (const std::exception&) {
        throw ParseError("bad word letter \"" + tok + "\"");
      }
    }
    return w;
  }
};

/// w = pi^rotation * s_{letters[0]} * ... * s_{letters.back()}, with
/// letters.size() == length(w).
struct ReducedExpression {
  int rotation = 0;
  Word word;
};

template <CoxeterElement W>
W from_word(int r, const Word& word, int rotation = 0) {
  W w = W::identity(r);
  if constexpr (W::kind == GroupKind::affine) {
    if (rotation != 0) w = w.rotated(rotation);
  } else {
    if (rotation != 0) throw DomainError("finite permutations have no rotation part");
  }
  for (int i : word.letters) {
    if (!W::is_generator_index(r, i)) {
      throw DomainError("word letter s" + std::to_string(i) + " out of range");
    }
    w = w.times_generator(i);
  }
  return w;
}

/// Smallest right descent, or -1 if none.
template <CoxeterElement W>
int first_right_descent(const W& w) {
  for (int i = W::first_generator; i < w.rank(); ++i) {
    if (w.has_right_descent(i)) return i;
  }
  return -1;
}

/// Peels right descents (smallest index first) until a length-zero element
/// remains.
template <CoxeterElement W>
ReducedExpression reduced_expression(const W& w) {
  ReducedExpression out;
  W cur = w;
  std::vector<int> peeled;
  for (int d = first_right_descent(cur); d >= 0; d = first_right_descent(cur)) {
    peeled.push_back(d);
    cur = cur.times_generator(d);
  }
  out.rotation = cur.winding();
  out.word.letters.assign(peeled.rbegin(), peeled.rend());
  return out;
}

template <CoxeterElement W>
int length(const W& w) {
  int n = 0;
  W cur = w;
  for (int d = first_right_descent(cur); d >= 0; d = first_right_descent(cur)) {
    cur = cur.times_generator(d);
    ++n;
  }
  return n;
}

/// Reduced word of an element of the Coxeter group proper.
template <CoxeterElement W>
Word reduced_word(const W& w) {
  ReducedExpression e = reduced_expression(w);
  if (e.rotation != 0) {
    throw DomainError("reduced_word: element " + w.to_string() +
                      " has a nonzero rotation part; use reduced_expression");
  }
  return e.word;
}

template <CoxeterElement W>
bool is_reduced(int r, const Word& word) {
  return length(from_word<W>(r, word)) == static_cast<int>(word.size());
}

/// All elements of the Coxeter group of length <= max_length, by breadth-first
/// search from the identity. Ordered by length, then by window.
template <CoxeterElement W>
std::vector<W> enumerate_up_to_length(int r, int max_length) {
  if (max_length < 0) throw DomainError("enumerate_up_to_length: L must be >= 0");
  std::vector<W> out;
  std::unordered_set<W, PermutationHash> seen;
  std::vector<W> level{W::identity(r)};
  seen.insert(level.front());
  for (int len = 0; len <= max_length && !level.empty(); ++len) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_length) break;
    std::vector<W> next;
    for (const W& w : level) {
      for (int i : W::generator_indices(r)) {
        W u = w.times_generator(i);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    }
    level = std::move(next);
  }
  return out;
}

/// Subgroup generated by the given simple reflections (finite types only
/// make sense here; affine callers must pass a proper subset).
template <CoxeterElement W>
std::vector<W> parabolic_subgroup(int r, const std::vector<int>& generators) {
  std::vector<W> out{W::identity(r)};
  std::set<W> seen{out.front()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : generators) {
      W u = out[k].times_generator(i);
      if (seen.insert(u).second) out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end(), [](const W& a, const W& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

/// Simple reflections of the Young subgroup S_{b_1} x S_{b_2} x ... of
/// consecutive blocks.
inline std::vector<int> young_generators(const std::vector<int>& blocks) {
  std::vector<int> gens;
  int start = 1;
  for (int b : blocks) {
    if (b < 0) throw DomainError("young_generators: negative block size");
    for (int j = start; j < start + b - 1; ++j) gens.push_back(j);
    start += b;
  }
  return gens;
}

}  // namespace heckelab

template <>
struct std::hash<heckelab::FinitePermutation> {
  std::size_t operator()(const heckelab::FinitePermutation& w) const noexcept { return w.hash(); }
};
template <>
struct std::hash<heckelab::AffinePermutation> {
  std::size_t operator()(const heckelab::AffinePermutation& w) const noexcept { return w.hash(); }
};
