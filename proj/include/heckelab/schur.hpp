#pragma once

// v-Schur algebras S(n,r) = sum over (i,j) of e_i H e_j, the tensor space
// T(n,r) = sum over i of e_i H, the Schur-Weyl duality check, and the
// Doty-Giaquinto relations for S(2,d) on the d-fold tensor power of the
// natural module.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/linalg.hpp"

namespace heckelab {

/// Weakly increasing (i_1 <= ... <= i_r) with entries in 1..n.
struct WeakIndex {
  std::vector<int> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  friend auto operator<=>(const WeakIndex&, const WeakIndex&) = default;
  friend bool operator==(const WeakIndex&, const WeakIndex&) = default;

  /// Lengths of the runs of equal entries.
  std::vector<int> blocks() const {
    std::vector<int> b;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k && entries[k] == entries[k - 1]) {
        ++b.back();
      } else {
        b.push_back(1);
      }
    }
    return b;
  }

  /// Generators of the stabilizer in S_r.
  std::vector<int> stabilizer_generators() const { return young_generators(blocks()); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(entries[k]);
    }
    return s + ")";
  }
};

/// All weakly increasing r-tuples over 1..n in lexicographic order.
inline std::vector<WeakIndex> enumerate_index(int n, int r) {
  if (n < 1 || r < 1) throw DomainError("enumerate_index: n and r must be >= 1");
  std::vector<WeakIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  while (true) {
    out.push_back(WeakIndex{cur});
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    const int next = cur[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j < r; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

/// e_i = sum of T_delta over the stabilizer of i.
template <CoxeterElement W = FinitePermutation>
HeckeElement<W> projector(const WeakIndex& i) {
  const int r = i.size();
  HeckeElement<W> e(r);
  for (const auto& d : parabolic_subgroup<W>(r, i.stabilizer_generators())) e.add_term(d, 1);
  return e;
}

/// P_i = sum of v^{-2 l(delta)} over the stabilizer, so that e_i e_i = P_i e_i.
inline LaurentPoly poincare_polynomial(const WeakIndex& i) {
  LaurentPoly p;
  for (const auto& d : parabolic_subgroup<FinitePermutation>(i.size(), i.stabilizer_generators())) {
    p += LaurentPoly::v(-2 * length(d));
  }
  return p;
}

/// x lies in e_i H e_j iff e_i x = P_i x and x e_j = P_j x.
template <CoxeterElement W>
bool in_block(const WeakIndex& i, const WeakIndex& j, const HeckeElement<W>& x) {
  return mul(projector<W>(i), x) == poincare_polynomial(i) * x &&
         mul(x, projector<W>(j)) == poincare_polynomial(j) * x;
}

namespace detail {

template <CoxeterElement W>
bool is_left_minimal(const W& w, const std::vector<int>& gens) {
  return std::none_of(gens.begin(), gens.end(), [&](int s) { return w.has_left_descent(s); });
}

template <CoxeterElement W>
bool is_right_minimal(const W& w, const std::vector<int>& gens) {
  return std::none_of(gens.begin(), gens.end(), [&](int s) { return w.has_right_descent(s); });
}

/// Minimal element of the double coset S_left w S_right.
template <CoxeterElement W>
W double_coset_minimum(W w, const std::vector<int>& left, const std::vector<int>& right) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : left) {
      if (w.has_left_descent(s)) {
        w = w.generator_times(s);
        moved = true;
      }
    }
    for (int s : right) {
      if (w.has_right_descent(s)) {
        w = w.times_generator(s);
        moved = true;
      }
    }
  }
  return w;
}

}  // namespace detail

/// Element of S(n,r): blocks keyed by (row index, column index) positions in
/// enumerate_index(n, r).
struct SchurElement {
  int n = 0;
  int r = 0;
  std::map<std::pair<std::size_t, std::size_t>, HeckeElement<FinitePermutation>> blocks;

  /// Single-block element; throws DomainError if x is not in e_i H e_j.
  static SchurElement block(int n, const std::vector<WeakIndex>& index, std::size_t i, std::size_t j,
                            HeckeElement<FinitePermutation> x) {
    if (!in_block(index.at(i), index.at(j), x)) {
      throw DomainError("SchurElement: element is not in the block e_" + index[i].to_string() +
                        " H e_" + index[j].to_string());
    }
    SchurElement s;
    s.n = n;
    s.r = index.at(i).size();
    if (!x.is_zero()) s.blocks.emplace(std::make_pair(i, j), std::move(x));
    return s;
  }
};

/// Double-coset basis element: the sum of T_w over S_i d S_j, in block (i,j).
struct SchurBasisElement {
  std::size_t row = 0;
  std::size_t col = 0;
  FinitePermutation minimal;
  SchurElement element;

  const HeckeElement<FinitePermutation>& hecke() const { return element.blocks.begin()->second; }
};

/// One basis element per (i, j, double coset in S_i \ S_r / S_j).
inline std::vector<SchurBasisElement> schur_basis(int n, int r) {
  const auto index = enumerate_index(n, r);
  const auto group = enumerate_up_to_length<FinitePermutation>(r, r * (r - 1) / 2);
  std::vector<SchurBasisElement> out;
  for (std::size_t a = 0; a < index.size(); ++a) {
    const auto left = index[a].stabilizer_generators();
    for (std::size_t b = 0; b < index.size(); ++b) {
      const auto right = index[b].stabilizer_generators();
      std::map<FinitePermutation, HeckeElement<FinitePermutation>> cosets;
      for (const auto& w : group) {
        auto& sum = cosets[detail::double_coset_minimum(w, left, right)];
        sum.add_term(w, 1);
      }
      for (auto& [d, x] : cosets) {
        out.push_back(SchurBasisElement{a, b, d, SchurElement::block(n, index, a, b, std::move(x))});
      }
    }
  }
  return out;
}

/// Dense matrix over the Laurent ring.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static LaurentMatrix identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
  }
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend LaurentMatrix operator*(const LaurentPoly& c, LaurentMatrix a) {
    for (auto& p : a.a_) p = c * p;
    return a;
  }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("LaurentMatrix: shape mismatch in product");
    LaurentMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const LaurentPoly& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  friend LaurentMatrix kron(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.rows_; ++k) {
          for (std::size_t l = 0; l < b.cols_; ++l) {
            if (!b(k, l).is_zero()) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return out;
  }

  CMatrix eval(Complex v) const {
    CMatrix m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).eval(v);
      }
    }
    return m;
  }

 private:
  static void check_same(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("LaurentMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> a_;
};

/// T(n,r) with basis e_i T_d, d running over the minimal representatives of
/// S_i \ W. For the affine group the representatives are truncated at a
/// length cutoff and actions are projected onto the truncated basis.
template <CoxeterElement W = FinitePermutation>
class TensorSpace {
 public:
  struct BasisVector {
    std::size_t block;
    W rep;
  };

  TensorSpace(int n, int r, std::optional<int> cutoff = std::nullopt)
      : n_(n), r_(r), index_(enumerate_index(n, r)) {
    int max_len = r * (r - 1) / 2;
    if constexpr (W::kind == GroupKind::affine) {
      if (!cutoff) throw DomainError("TensorSpace: the affine tensor space needs a length cutoff");
      max_len = *cutoff;
    }
    const auto group = enumerate_up_to_length<W>(r, max_len);
    lookup_.resize(index_.size());
    for (std::size_t b = 0; b < index_.size(); ++b) {
      projectors_.push_back(projector<W>(index_[b]));
      const auto gens = index_[b].stabilizer_generators();
      for (const W& w : group) {
        if (!detail::is_left_minimal(w, gens)) continue;
        lookup_[b].emplace(w, basis_.size());
        basis_.push_back(BasisVector{b, w});
      }
    }
  }

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<WeakIndex>& index() const noexcept { return index_; }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }

  /// e_i T_d as an element of H.
  HeckeElement<W> element(std::size_t k) const {
    const auto& b = basis_.at(k);
    return mul(projectors_[b.block], HeckeElement<W>::basis(b.rep));
  }

  /// Coordinates of x in e_i H: the coefficients at the minimal
  /// representatives of block i.
  std::vector<LaurentPoly> coordinates(std::size_t block, const HeckeElement<W>& x) const {
    std::vector<LaurentPoly> out(dimension());
    for (const auto& [w, k] : lookup_[block]) out[k] = x.coefficient(w);
    return out;
  }

  /// Matrix of right multiplication by T_{s_i}.
  LaurentMatrix right_action(int i) const {
    LaurentMatrix m(dimension(), dimension());
    for (std::size_t k = 0; k < dimension(); ++k) {
      auto col = coordinates(basis_[k].block, right_mul_gen(element(k), i));
      for (std::size_t row = 0; row < dimension(); ++row) m(row, k) = std::move(col[row]);
    }
    return m;
  }

  /// Matrix of a block element x in e_i H e_j: e_j T_d -> x T_d, and zero
  /// on the other blocks.
  LaurentMatrix left_action(std::size_t row_block, std::size_t col_block, const HeckeElement<W>& x) const {
    LaurentMatrix m(dimension(), dimension());
    for (std::size_t k = 0; k < dimension(); ++k) {
      if (basis_[k].block != col_block) continue;
      auto col = coordinates(row_block, mul(x, HeckeElement<W>::basis(basis_[k].rep)));
      for (std::size_t row = 0; row < dimension(); ++row) m(row, k) = std::move(col[row]);
    }
    return m;
  }

 private:
  int n_;
  int r_;
  std::vector<WeakIndex> index_;
  std::vector<HeckeElement<W>> projectors_;
  std::vector<BasisVector> basis_;
  std::vector<std::map<W, std::size_t>> lookup_;
};

/// Exact check that every basis element of S(n,r) commutes with every
/// generator of H on T(n,r). Returns the number of failing pairs.
inline int count_bimodule_violations(int n, int r) {
  TensorSpace<FinitePermutation> space(n, r);
  std::vector<LaurentMatrix> right;
  for (int i = 1; i < r; ++i) right.push_back(space.right_action(i));
  int bad = 0;
  for (const auto& b : schur_basis(n, r)) {
    LaurentMatrix left = space.left_action(b.row, b.col, b.hecke());
    for (const auto& rt : right) {
      if (!(left * rt == rt * left)) ++bad;
    }
  }
  return bad;
}

struct DualityReport {
  int n = 0;
  int r = 0;
  Complex q;
  int dim_endH = 0;
  int dim_S = 0;
  bool match = false;
  std::string mode;
  bool conclusive = true;
};

/// Number of double cosets S_i \ W / S_j whose minimal element has length
/// <= max_length, summed over all pairs (i, j).
template <CoxeterElement W>
int count_double_cosets(int n, int r, int max_length) {
  const auto index = enumerate_index(n, r);
  const auto group = enumerate_up_to_length<W>(r, max_length);
  int count = 0;
  for (const auto& a : index) {
    const auto left = a.stabilizer_generators();
    for (const auto& b : index) {
      const auto right = b.stabilizer_generators();
      for (const W& w : group) {
        if (detail::is_left_minimal(w, left) && detail::is_right_minimal(w, right)) ++count;
      }
    }
  }
  return count;
}

/// Commutant of the right H-action on T(n,r) at q (v = q^{-1/2}), compared
/// with the dimension of S(n,r). The affine mode truncates at a length
/// cutoff and is never conclusive.
inline DualityReport duality_check(int n, int r, Complex q, std::optional<int> affine_cutoff = std::nullopt) {
  if (q == Complex(0.0, 0.0)) throw DomainError("duality_check: q must be nonzero");
  const Complex v = 1.0 / std::sqrt(q);
  DualityReport rep;
  rep.n = n;
  rep.r = r;
  rep.q = q;
  std::vector<CMatrix> gens;
  if (!affine_cutoff) {
    rep.mode = "finite";
    TensorSpace<FinitePermutation> space(n, r);
    for (int i = 1; i < r; ++i) gens.push_back(space.right_action(i).eval(v));
    if (gens.empty()) gens.push_back(CMatrix::Identity(static_cast<Eigen::Index>(space.dimension()),
                                                       static_cast<Eigen::Index>(space.dimension())));
    rep.dim_S = static_cast<int>(schur_basis(n, r).size());
  } else {
    rep.mode = "affine-truncated";
    rep.conclusive = false;
    TensorSpace<AffinePermutation> space(n, r, affine_cutoff);
    for (int i : AffinePermutation::generator_indices(r)) gens.push_back(space.right_action(i).eval(v));
    rep.dim_S = count_double_cosets<AffinePermutation>(n, r, *affine_cutoff);
  }
  rep.dim_endH = commutant_dimension(gens);
  rep.match = rep.dim_endH == rep.dim_S;
  return rep;
}

// ---------------------------------------------------------------------------
// Doty-Giaquinto relations for S(2,d)

inline constexpr const char* kCoproductConvention =
    "Delta(E) = E(x)K + 1(x)E, Delta(F) = F(x)1 + K^-1(x)F, Delta(K) = K(x)K, iterated left to right";

struct DGOperators {
  LaurentMatrix e, f, k, k_inv;
};

/// E, F, K, K^-1 on the d-fold tensor power of the natural 2-dimensional
/// module, exactly.
inline DGOperators dg_operators(int d) {
  if (d < 1) throw DomainError("dg_operators: d must be >= 1");
  LaurentMatrix e1(2, 2), f1(2, 2), k1(2, 2), ki1(2, 2);
  e1(0, 1) = 1;
  f1(1, 0) = 1;
  k1(0, 0) = LaurentPoly::v(1);
  k1(1, 1) = LaurentPoly::v(-1);
  ki1(0, 0) = LaurentPoly::v(-1);
  ki1(1, 1) = LaurentPoly::v(1);
  DGOperators ops{e1, f1, k1, ki1};
  for (int step = 1; step < d; ++step) {
    const LaurentMatrix id = LaurentMatrix::identity(ops.k.rows());
    ops.e = kron(ops.e, k1) + kron(id, e1);
    ops.f = kron(ops.f, LaurentMatrix::identity(2)) + kron(ops.k_inv, f1);
    ops.k = kron(ops.k, k1);
    ops.k_inv = kron(ops.k_inv, ki1);
  }
  return ops;
}

struct DGNumericOperators {
  CMatrix e, f, k, k_inv;
};

/// The same operators built directly in floating point at v.
inline DGNumericOperators dg_operators_numeric(int d, double v) {
  if (d < 1) throw DomainError("dg_operators_numeric: d must be >= 1");
  if (v == 0.0) throw DomainError("dg_operators_numeric: v must be nonzero");
  CMatrix e1 = CMatrix::Zero(2, 2), f1 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2), ki1 = CMatrix::Zero(2, 2);
  e1(0, 1) = 1.0;
  f1(1, 0) = 1.0;
  k1(0, 0) = v;
  k1(1, 1) = 1.0 / v;
  ki1(0, 0) = 1.0 / v;
  ki1(1, 1) = v;
  DGNumericOperators ops{e1, f1, k1, ki1};
  for (int step = 1; step < d; ++step) {
    const CMatrix id = CMatrix::Identity(ops.k.rows(), ops.k.cols());
    ops.e = kron(ops.e, k1) + kron(id, e1);
    ops.f = kron(ops.f, CMatrix::Identity(2, 2)) + kron(ops.k_inv, f1);
    ops.k = kron(ops.k, k1);
    ops.k_inv = kron(ops.k_inv, ki1);
  }
  return ops;
}

struct DGRelation {
  std::string id;
  std::string relation;
  bool pass = false;
  std::optional<double> residual;  // numeric mode only; relative to the scale below
  double scale = 1.0;
};

/// Relations (a) K K^-1 = 1 = K^-1 K, (b) K E K^-1 = v^2 E and
/// K F K^-1 = v^-2 F, (c) (v - v^-1)(EF - FE) = K - K^-1, (d)
/// (K - v^d)(K - v^{d-2})...(K - v^-d) = 0, as exact matrix identities.
inline std::vector<DGRelation> doty_giaquinto_symbolic(int d) {
  const DGOperators o = dg_operators(d);
  const LaurentMatrix id = LaurentMatrix::identity(o.k.rows());
  std::vector<DGRelation> out;
  auto add = [&](std::string id_, std::string rel, bool ok) {
    out.push_back(DGRelation{std::move(id_), std::move(rel), ok, std::nullopt, 1.0});
  };
  add("a", "K K^-1 = 1 = K^-1 K", o.k * o.k_inv == id && o.k_inv * o.k == id);
  add("b-E", "K E K^-1 = v^2 E", o.k * o.e * o.k_inv == LaurentPoly::v(2) * o.e);
  add("b-F", "K F K^-1 = v^-2 F", o.k * o.f * o.k_inv == LaurentPoly::v(-2) * o.f);
  add("c", "(v - v^-1)(EF - FE) = K - K^-1",
      (LaurentPoly::v(1) - LaurentPoly::v(-1)) * (o.e * o.f - o.f * o.e) == o.k - o.k_inv);
  LaurentMatrix prod = id;
  for (int j = 0; j <= d; ++j) prod = prod * (o.k - LaurentPoly::v(d - 2 * j) * id);
  add("d", "(K - v^d)(K - v^(d-2))...(K - v^-d) = 0", prod.is_zero());
  return out;
}

/// Numeric version at a real v. Each residual is the operator norm of
/// (lhs - rhs) divided by max(1, norms of the terms being compared); for (d)
/// the scale is the product of the factor norms.
inline std::vector<DGRelation> doty_giaquinto_numeric(int d, double v, double tol = 1e-12) {
  if (v == 0.0 || v == 1.0 || v == -1.0) throw DomainError("doty_giaquinto_numeric: v must not be 0 or +-1");
  const DGNumericOperators o = dg_operators_numeric(d, v);
  const CMatrix id = CMatrix::Identity(o.k.rows(), o.k.cols());
  std::vector<DGRelation> out;
  auto add = [&](std::string id_, std::string rel, const CMatrix& lhs, const CMatrix& rhs) {
    const double scale = std::max({1.0, operator_norm(lhs), operator_norm(rhs)});
    const double res = operator_norm(lhs - rhs) / scale;
    out.push_back(DGRelation{std::move(id_), std::move(rel), res < tol, res, scale});
  };
  add("a", "K K^-1 = 1", o.k * o.k_inv, id);
  add("a-left", "K^-1 K = 1", o.k_inv * o.k, id);
  add("b-E", "K E K^-1 = v^2 E", o.k * o.e * o.k_inv, v * v * o.e);
  add("b-F", "K F K^-1 = v^-2 F", o.k * o.f * o.k_inv, o.f / (v * v));
  add("c", "EF - FE = (K - K^-1)/(v - v^-1)", o.e * o.f - o.f * o.e, (o.k - o.k_inv) / (v - 1.0 / v));
  CMatrix prod = id;
  double scale = 1.0;
  for (int j = 0; j <= d; ++j) {
    CMatrix factor = o.k - std::pow(v, d - 2 * j) * id;
    scale *= std::max(1.0, operator_norm(factor));
    prod = prod * factor;
  }
  const double res = operator_norm(prod) / scale;
  out.push_back(DGRelation{"d", "(K - v^d)(K - v^(d-2))...(K - v^-d) = 0", res < tol, res, scale});
  return out;
}

}  // namespace heckelab
