#pragma once

// Independent reference computations and random generators shared by the
// test suites. Nothing here calls the library's algorithms; only its value
// types (LaurentPoly, windows) are used as containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "heckelab/heckelab.hpp"

namespace oracle {

using heckelab::LaurentPoly;
using heckelab::Rational;
using Window = std::vector<int>;

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// Number of inversions of a permutation window.
inline int inversions(const Window& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j] ? 1 : 0;
  }
  return n;
}

/// Shi's inversion formula for the affine symmetric group:
/// sum over i < j of |floor((w(j) - w(i)) / r)|.
inline int affine_length(const Window& w) {
  const int r = static_cast<int>(w.size());
  int n = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) n += std::abs(floor_div(w[j] - w[i], r));
  }
  return n;
}

/// All affine permutation windows of winding zero (sum = r(r+1)/2) with
/// length <= L, found by scanning a box of windows.
inline std::vector<Window> affine_elements_by_box(int r, int L) {
  const int reach = r * (L + 1);
  std::vector<Window> out;
  Window w(static_cast<std::size_t>(r));
  const int target = r * (r + 1) / 2;
  std::function<void(int, int)> rec = [&](int pos, int sum) {
    if (pos == r - 1) {
      w[pos] = target - sum;
      if (std::abs(w[pos] - r) > reach) return;
      std::vector<bool> seen(static_cast<std::size_t>(r), false);
      for (int x : w) {
        int m = ((x % r) + r) % r;
        if (seen[m]) return;
        seen[m] = true;
      }
      if (affine_length(w) <= L) out.push_back(w);
      return;
    }
    for (int x = pos + 1 - reach; x <= pos + 1 + reach; ++x) {
      w[pos] = x;
      rec(pos + 1, sum + x);
    }
  };
  rec(0, 0);
  return out;
}

/// All permutations of 1..n in lexicographic order.
inline std::vector<Window> permutations(int n) {
  Window w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Window> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// s_i * w: swap the values i and i+1.
inline Window left_swap(Window w, int i) {
  for (int& x : w) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return w;
}

/// Dense matrix over Laurent polynomials.
using LMatrix = std::vector<std::vector<LaurentPoly>>;

inline LMatrix lmatmul(const LMatrix& a, const LMatrix& b) {
  const std::size_t n = a.size();
  LMatrix c(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

/// Left regular representation of H(v, S_n) on the basis T_w, with
/// T_s T_w = T_{sw} when inv(sw) > inv(w) and
/// T_s T_w = (v^-2 - 1) T_w + v^-2 T_{sw} otherwise.
/// Matrices of every T_w are built as products of generator matrices.
class RegularRep {
 public:
  explicit RegularRep(int n) : n_(n), elems_(permutations(n)) {
    for (std::size_t k = 0; k < elems_.size(); ++k) index_[elems_[k]] = k;
    const std::size_t d = elems_.size();
    for (int i = 1; i < n; ++i) {
      LMatrix m(d, std::vector<LaurentPoly>(d));
      for (std::size_t col = 0; col < d; ++col) {
        const Window sw = left_swap(elems_[col], i);
        const std::size_t row = index_.at(sw);
        if (inversions(sw) > inversions(elems_[col])) {
          m[row][col] = 1;
        } else {
          m[col][col] = LaurentPoly::v(-2) - LaurentPoly(1);
          m[row][col] = LaurentPoly::v(-2);
        }
      }
      gens_.push_back(std::move(m));
    }
    // T_{s w} = T_s T_w whenever s w is longer; breadth-first from e.
    LMatrix id(d, std::vector<LaurentPoly>(d));
    for (std::size_t k = 0; k < d; ++k) id[k][k] = 1;
    mats_[elems_.front()] = id;
    std::vector<Window> frontier{elems_.front()};
    while (!frontier.empty()) {
      std::vector<Window> next;
      for (const Window& w : frontier) {
        for (int i = 1; i < n; ++i) {
          Window sw = left_swap(w, i);
          if (inversions(sw) <= inversions(w) || mats_.count(sw)) continue;
          mats_[sw] = lmatmul(gens_[static_cast<std::size_t>(i - 1)], mats_.at(w));
          next.push_back(sw);
        }
      }
      frontier = std::move(next);
    }
  }

  const std::vector<Window>& elements() const { return elems_; }
  std::size_t index(const Window& w) const { return index_.at(w); }
  const LMatrix& matrix(const Window& w) const { return mats_.at(w); }
  const LMatrix& generator(int i) const { return gens_.at(static_cast<std::size_t>(i - 1)); }

  /// Coefficients of T_a T_b: column b of the matrix of T_a.
  std::map<Window, LaurentPoly> product(const Window& a, const Window& b) const {
    std::map<Window, LaurentPoly> out;
    const LMatrix& m = mats_.at(a);
    const std::size_t col = index_.at(b);
    for (std::size_t row = 0; row < elems_.size(); ++row) {
      if (!m[row][col].is_zero()) out[elems_[row]] = m[row][col];
    }
    return out;
  }

 private:
  int n_;
  std::vector<Window> elems_;
  std::map<Window, std::size_t> index_;
  std::vector<LMatrix> gens_;
  std::map<Window, LMatrix> mats_;
};

/// Number of standard Young tableaux by the hook length formula.
inline long hook_length_count(const std::vector<int>& shape) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> conj;
  for (int c = 0; c < (shape.empty() ? 0 : shape.front()); ++c) {
    int h = 0;
    for (int row : shape) h += row > c ? 1 : 0;
    conj.push_back(h);
  }
  long num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  long den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      den *= (shape[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

/// Number of standard Young tableaux by removing the largest entry from a
/// corner, recursively.
inline long syt_bruteforce(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    std::vector<int> smaller = shape;
    --smaller[i];
    total += syt_bruteforce(smaller);
  }
  return total;
}

/// Number of partitions of n with parts <= max_part.
inline long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += partition_count(n - p, p);
  return total;
}

inline bool l_regular(const std::vector<int>& shape, int l) {
  std::map<int, int> mult;
  for (int p : shape) ++mult[p];
  for (const auto& [p, m] : mult) {
    if (m >= l) return false;
  }
  return true;
}

inline long binomial(int n, int k) {
  long b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

inline long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// ---------------------------------------------------------------------------
// Random generators

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  Rational rational() {
    int num = uniform(-9, 9);
    int den = uniform(1, 5);
    return Rational(num, den);
  }

  LaurentPoly laurent(int max_terms = 4, int lo = -4, int hi = 4) {
    std::vector<LaurentPoly::Term> terms;
    int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) terms.emplace_back(uniform(lo, hi), rational());
    return LaurentPoly::from_terms(std::move(terms));
  }

  Window permutation(int n) {
    Window w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
  }

  /// Random word in the letters lo..hi.
  std::vector<int> word(int length, int lo, int hi) {
    std::vector<int> w;
    for (int k = 0; k < length; ++k) w.push_back(uniform(lo, hi));
    return w;
  }

  heckelab::NCPoly ncpoly(int max_terms = 3, int max_degree = 3) {
    heckelab::NCPoly p;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
      heckelab::NCWord w;
      int d = uniform(0, max_degree);
      for (int j = 0; j < d; ++j) w.push_back(uniform(0, 3));
      LaurentPoly c = laurent(2, -2, 2);
      if (c.is_zero()) c = 1;
      p.add_term(w, c);
    }
    return p;
  }
};

}  // namespace oracle
