#pragma once

// Dipper-James theory for the finite Hecke algebra H(S_n).
//
// The quadratic relation is (T_s + 1)(T_s - q) = 0 with q := v^-2, so exact
// elements live in the Laurent ring and are evaluated at v = q^{-1/2}
// (principal branch) when a numeric q is requested.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/linalg.hpp"

namespace heckelab {

using FiniteHecke = HeckeElement<FinitePermutation>;

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("Partition: the empty partition is not accepted");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Rows and columns interchanged.
  Partition conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(c));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "(2,1)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  /// Accepts "(2,1)", "2,1" or "2 1".
  static Partition parse(std::string_view text) {
    std::string s(text);
    for (char& c : s) {
      if (c == '(' || c == ')' || c == ',') c = ' ';
    }
    std::stringstream ss(s);
    std::vector<int> parts;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("Partition: bad part \"" + tok + "\"");
      }
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, largest first part first: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw DomainError("partitions_of: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// True iff no part value occurs l or more times.
inline bool is_l_regular(const Partition& lambda, int l) {
  if (l < 2) throw DomainError("is_l_regular: l must be >= 2");
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (static_cast<int>(j - i) >= l) return false;
    i = j;
  }
  return true;
}

/// S_{lambda_1} x S_{lambda_2} x ... on consecutive blocks of {1..n}.
inline std::vector<FinitePermutation> young_subgroup(const Partition& lambda) {
  return parabolic_subgroup<FinitePermutation>(lambda.size(), young_generators(lambda.parts()));
}

/// Sum of T_w over the Young subgroup.
inline FiniteHecke symmetrizer(const Partition& lambda) {
  FiniteHecke x(lambda.size());
  for (const auto& w : young_subgroup(lambda)) x.add_term(w, 1);
  return x;
}

/// Sum over the Young subgroup of (-q)^{n(n-1)/2 - l(w)} T_w, with q = v^-2.
inline FiniteHecke antisymmetrizer(const Partition& lambda) {
  const int n = lambda.size();
  const int top = n * (n - 1) / 2;
  FiniteHecke x(n);
  for (const auto& w : young_subgroup(lambda)) {
    const int k = top - length(w);
    x.add_term(w, LaurentPoly::monomial(k % 2 ? -1 : 1, -2 * k));
  }
  return x;
}

/// Elements d of S_n with l(ds) > l(d) for every generator s of the Young
/// subgroup; each left coset of the Young subgroup contains exactly one.
inline std::vector<FinitePermutation> minimal_coset_representatives(const Partition& lambda) {
  const int n = lambda.size();
  const std::vector<int> gens = young_generators(lambda.parts());
  std::vector<FinitePermutation> out;
  for (const auto& w : enumerate_up_to_length<FinitePermutation>(n, n * (n - 1) / 2)) {
    bool minimal = std::none_of(gens.begin(), gens.end(), [&](int i) { return w.has_right_descent(i); });
    if (minimal) out.push_back(w);
  }
  return out;
}

/// Numeric model of the regular module of H(S_n) at a point q.
class RegularModule {
 public:
  RegularModule(int n, Complex q) : n_(n), q_(q) {
    if (n < 1) throw DomainError("RegularModule: n must be >= 1");
    if (q == Complex(0.0, 0.0)) throw DomainError("RegularModule: q must be nonzero");
    v_ = 1.0 / std::sqrt(q);
    elements_ = enumerate_up_to_length<FinitePermutation>(n, n * (n - 1) / 2);
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], static_cast<Eigen::Index>(k));
  }

  int n() const noexcept { return n_; }
  Complex q() const noexcept { return q_; }
  Eigen::Index dimension() const noexcept { return static_cast<Eigen::Index>(elements_.size()); }
  const std::vector<FinitePermutation>& elements() const noexcept { return elements_; }
  Eigen::Index index_of(const FinitePermutation& w) const { return index_.at(w); }

  Complex eval(const LaurentPoly& p) const { return p.eval(v_); }

  CVector vector_of(const FiniteHecke& x) const {
    CVector out = CVector::Zero(dimension());
    for (const auto& [w, c] : x.terms()) out(index_of(w)) = eval(c);
    return out;
  }

  /// Matrix of left multiplication by T_{s_i}.
  CMatrix left_generator(int i) const {
    CMatrix m = CMatrix::Zero(dimension(), dimension());
    for (Eigen::Index k = 0; k < dimension(); ++k) {
      m.col(k) = vector_of(mul_gen_basis(i, elements_[static_cast<std::size_t>(k)]));
    }
    return m;
  }

  /// Matrix of right multiplication by x.
  CMatrix right_multiplication(const FiniteHecke& x) const {
    CMatrix m = CMatrix::Zero(dimension(), dimension());
    for (Eigen::Index k = 0; k < dimension(); ++k) {
      m.col(k) = vector_of(mul(FiniteHecke::basis(elements_[static_cast<std::size_t>(k)]), x));
    }
    return m;
  }

 private:
  int n_;
  Complex q_;
  Complex v_;
  std::vector<FinitePermutation> elements_;
  std::unordered_map<FinitePermutation, Eigen::Index, PermutationHash> index_;
};

/// Linearly independent spanning vectors of a submodule at a point q,
/// expressed in the T_w coordinates of the regular module.
struct ModuleBasis {
  Complex q;
  CMatrix basis;  // orthonormal columns
  std::vector<FinitePermutation> elements;  // row labels
  int dimension() const noexcept { return static_cast<int>(basis.cols()); }
};

/// S^lambda = H A_{lambda'} H Sym_lambda inside the regular module at q.
inline ModuleBasis specht_module(const Partition& lambda, Complex q) {
  const int n = lambda.size();
  RegularModule reg(n, q);
  const FiniteHecke a = antisymmetrizer(lambda.conjugate());
  const FiniteHecke sym = symmetrizer(lambda);

  // A T_w Sym for all w, formed exactly so that vanishing products are
  // exactly zero, then normalized column by column.
  CMatrix span = CMatrix::Zero(reg.dimension(), reg.dimension());
  for (Eigen::Index k = 0; k < reg.dimension(); ++k) {
    FiniteHecke y = mul(mul(a, FiniteHecke::basis(reg.elements()[static_cast<std::size_t>(k)])), sym);
    if (y.is_zero()) continue;
    CVector col = reg.vector_of(y);
    const double nrm = col.norm();
    if (nrm > 0) span.col(k) = col / nrm;
  }
  CMatrix basis = column_space(span, kRankTolerance, 1.0);

  // Close under left multiplication by the generators.
  std::vector<CMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(reg.left_generator(i));
  while (basis.cols() > 0 && !gens.empty()) {
    CMatrix grown(reg.dimension(), basis.cols() * static_cast<Eigen::Index>(gens.size() + 1));
    grown.leftCols(basis.cols()) = basis;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      CMatrix img = gens[g] * basis;
      for (Eigen::Index c = 0; c < img.cols(); ++c) {
        const double nrm = img.col(c).norm();
        if (nrm > 0) img.col(c) /= nrm;
      }
      grown.middleCols(basis.cols() * static_cast<Eigen::Index>(g + 1), basis.cols()) = img;
    }
    CMatrix next = column_space(grown, kRankTolerance, 1.0);
    const bool stable = next.cols() == basis.cols();
    basis = std::move(next);
    if (stable) break;
  }
  return ModuleBasis{q, std::move(basis), reg.elements()};
}

inline int specht_dimension(const Partition& lambda, Complex q) {
  return specht_module(lambda, q).dimension();
}

/// Gram matrix of the bilinear form on S^lambda restricted from the
/// permutation module H Sym_lambda, where the basis T_d Sym_lambda (d a
/// minimal coset representative) is orthogonal with <T_d Sym, T_d Sym> =
/// q^{l(d)}. The coordinate of T_d Sym in x = h Sym is the T_d coefficient
/// of x.
inline CMatrix gram_matrix(const Partition& lambda, Complex q) {
  ModuleBasis s = specht_module(lambda, q);
  std::unordered_map<FinitePermutation, Eigen::Index, PermutationHash> row;
  for (std::size_t k = 0; k < s.elements.size(); ++k) row.emplace(s.elements[k], static_cast<Eigen::Index>(k));
  const auto reps = minimal_coset_representatives(lambda);
  CMatrix coords(static_cast<Eigen::Index>(reps.size()), s.basis.cols());
  CVector weight(static_cast<Eigen::Index>(reps.size()));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    coords.row(static_cast<Eigen::Index>(k)) = s.basis.row(row.at(reps[k]));
    weight(static_cast<Eigen::Index>(k)) = std::pow(q, length(reps[k]));
  }
  return coords.transpose() * weight.asDiagonal() * coords;
}

/// Expected magnitude of a nonzero Gram matrix entry, used as the rank
/// reference scale so a vanishing form reports rank 0.
inline double gram_reference_scale(const Partition& lambda, Complex q) {
  double w = 0.0;
  for (const auto& d : minimal_coset_representatives(lambda)) w = std::max(w, std::abs(std::pow(q, length(d))));
  return w;
}

/// dim D^lambda = rank of the Gram matrix at q.
inline int d_dimension_at(const Partition& lambda, Complex q) {
  return numeric_rank(gram_matrix(lambda, q), kRankTolerance, gram_reference_scale(lambda, q));
}

inline Complex primitive_root_of_unity(int l) {
  if (l < 1) throw DomainError("primitive_root_of_unity: l must be >= 1");
  const double a = 2.0 * std::numbers::pi / l;
  return {std::cos(a), std::sin(a)};
}

/// dim D^lambda at q = exp(2 pi i / l).
inline int d_dimension(const Partition& lambda, int l) {
  if (l < 2) throw DomainError("d_dimension: l must be >= 2");
  return d_dimension_at(lambda, primitive_root_of_unity(l));
}

}  // namespace heckelab
