#pragma once

// Dense complex linear algebra helpers on top of Eigen: SVD ranks,
// nullspaces, intertwiner spaces and operator norms.

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heckelab/errors.hpp"

namespace heckelab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Singular values at or below rel_tol * max(sigma_max, ref_scale) count as
/// zero. ref_scale keeps an all-roundoff matrix from reporting full rank.
inline constexpr double kRankTolerance = 1e-9;

namespace detail {

inline Eigen::VectorXd singular_values(const CMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues();
}

inline double rank_cut(const Eigen::VectorXd& s, double rel_tol, double ref_scale) {
  double top = s.size() ? s.maxCoeff() : 0.0;
  return rel_tol * std::max(top, ref_scale);
}

}  // namespace detail

inline int numeric_rank(const CMatrix& a, double rel_tol = kRankTolerance, double ref_scale = 0.0) {
  Eigen::VectorXd s = detail::singular_values(a);
  if (s.size() == 0) return 0;
  const double cut = detail::rank_cut(s, rel_tol, ref_scale);
  if (s.maxCoeff() <= cut) return 0;
  return static_cast<int>((s.array() > cut).count());
}

/// Orthonormal basis (columns) of the column space.
inline CMatrix column_space(const CMatrix& a, double rel_tol = kRankTolerance, double ref_scale = 0.0) {
  if (a.size() == 0) return CMatrix(a.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = detail::rank_cut(s, rel_tol, ref_scale);
  Eigen::Index k = 0;
  while (k < s.size() && s(k) > cut) ++k;
  return svd.matrixU().leftCols(k);
}

/// Orthonormal basis (columns) of the right nullspace.
inline CMatrix nullspace(const CMatrix& a, double rel_tol = kRankTolerance) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return CMatrix::Identity(n, n);
  // Reduce tall systems to a square triangular factor first; the singular
  // values (and right singular vectors) are unchanged.
  CMatrix sys = a;
  if (a.rows() > n) {
    Eigen::HouseholderQR<CMatrix> qr(a);
    sys = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  }
  Eigen::BDCSVD<CMatrix> svd(sys, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = detail::rank_cut(s, rel_tol, 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  if (s.size() && s(0) <= cut) rank = 0;
  return svd.matrixV().rightCols(n - rank);
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Largest singular value.
inline double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::VectorXd s = detail::singular_values(a);
  return s.size() ? s.maxCoeff() : 0.0;
}

/// Intertwiners X with X A_g = B_g X for all g, as vectorized (column-major)
/// nullspace columns of the stacked Kronecker system.
inline CMatrix intertwiner_space(const std::vector<CMatrix>& as, const std::vector<CMatrix>& bs,
                                 double rel_tol = kRankTolerance) {
  if (as.size() != bs.size()) throw DomainError("intertwiner_space: generator counts differ");
  if (as.empty()) throw DomainError("intertwiner_space: no generators");
  const Eigen::Index da = as.front().rows();
  const Eigen::Index db = bs.front().rows();
  const Eigen::Index unknowns = da * db;
  if (unknowns > 1024) {
    throw DomainError("intertwiner_space: " + std::to_string(unknowns) +
                      " unknowns exceeds the dense solver limit of 1024");
  }
  const CMatrix ia = CMatrix::Identity(da, da);
  const CMatrix ib = CMatrix::Identity(db, db);
  CMatrix sys(static_cast<Eigen::Index>(as.size()) * unknowns, unknowns);
  for (std::size_t g = 0; g < as.size(); ++g) {
    // vec(X A) = (A^T (x) I) vec X, vec(B X) = (I (x) B) vec X
    sys.middleRows(static_cast<Eigen::Index>(g) * unknowns, unknowns) =
        kron(as[g].transpose(), ib) - kron(ia, bs[g]);
  }
  return nullspace(sys, rel_tol);
}

inline int commutant_dimension(const std::vector<CMatrix>& gens, double rel_tol = kRankTolerance) {
  return static_cast<int>(intertwiner_space(gens, gens, rel_tol).cols());
}

}  // namespace heckelab
