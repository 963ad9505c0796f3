#pragma once

// Bernstein presentation of the extended affine Hecke algebra of rank r,
// realized inside the Coxeter presentation.
//
// Lattice elements: for dominant (weakly decreasing) mu, X^mu is the inverse
// of v^{l(t_mu)} T_{t_mu}, where t_mu is the translation i -> i + r*mu_i.
// A general lambda is written lambda = mu - nu with mu, nu dominant and nu
// the smallest such shift, and X^lambda = X^mu (X^nu)^{-1}.

#include <optional>
#include <string>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/laurent.hpp"

namespace heckelab {

using AffineHecke = HeckeElement<AffinePermutation>;
using WeightVector = std::vector<int>;

inline bool is_dominant(const WeightVector& lambda) {
  for (std::size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j - 1] < lambda[j]) return false;
  }
  return true;
}

/// Translation by lambda: window (1 + r*lambda_1, ..., r + r*lambda_r).
inline AffinePermutation translation(const WeightVector& lambda) {
  const int r = static_cast<int>(lambda.size());
  if (r < 2) throw DomainError("translation: rank must be >= 2");
  std::vector<int> w(lambda.size());
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = i + 1 + r * lambda[static_cast<std::size_t>(i)];
  return AffinePermutation(std::move(w));
}

/// v^{l(w)} T_w
inline AffineHecke t_tilde(const AffinePermutation& w) {
  return AffineHecke::basis(w, LaurentPoly::v(length(w)));
}

/// (v^{l(w)} T_w)^{-1}
inline AffineHecke t_tilde_inverse(const AffinePermutation& w) {
  return LaurentPoly::v(-length(w)) * invert_basis(w);
}

/// lambda = mu - nu with nu the smallest dominant vector making mu dominant
/// (nu_r = 0).
inline std::pair<WeightVector, WeightVector> dominant_split(const WeightVector& lambda) {
  const std::size_t r = lambda.size();
  WeightVector nu(r, 0);
  for (std::size_t j = r - 1; j-- > 0;) {
    nu[j] = nu[j + 1] + std::max(0, lambda[j + 1] - lambda[j]);
  }
  WeightVector mu(r);
  for (std::size_t j = 0; j < r; ++j) mu[j] = lambda[j] + nu[j];
  return {mu, nu};
}

/// X^lambda. Throws CutoffExceeded if a translation used in the dominant
/// split is longer than the cutoff.
inline AffineHecke x_monomial(const WeightVector& lambda, std::optional<int> cutoff = std::nullopt) {
  auto [mu, nu] = dominant_split(lambda);
  AffinePermutation tmu = translation(mu);
  AffinePermutation tnu = translation(nu);
  if (cutoff) {
    for (const auto* t : {&tmu, &tnu}) {
      int l = length(*t);
      if (l > *cutoff) throw CutoffExceeded(l, *cutoff);
    }
  }
  AffineHecke xmu = t_tilde_inverse(tmu);
  if (nu == WeightVector(nu.size(), 0)) return xmu;
  return mul(xmu, t_tilde(tnu));
}

/// X_i = X^{e_i}, 1-based.
inline AffineHecke x_generator(int r, int i, int power = 1, std::optional<int> cutoff = std::nullopt) {
  WeightVector lambda(static_cast<std::size_t>(r), 0);
  lambda[static_cast<std::size_t>(i - 1)] = power;
  return x_monomial(lambda, cutoff);
}

struct BernsteinReport {
  std::string id;
  std::string relation;
  AffineHecke lhs;
  AffineHecke rhs;
  bool equal = false;
};

/// Checks the Bernstein relations as exact identities among Coxeter-basis
/// elements: quadratic, T_i T_i^{-1} = 1, braid and far commutation among the
/// T_i; X-invertibility and commutativity; T_i X_i T_i = v^-2 X_{i+1};
/// X_j T_i = T_i X_j for j not in {i, i+1}; centrality of X^{(1,...,1)}.
inline std::vector<BernsteinReport> check_bernstein_relations(int r, int cutoff) {
  if (r < 2) throw DomainError("check_bernstein_relations: r must be >= 2");
  std::vector<BernsteinReport> out;
  const AffineHecke one = AffineHecke::identity(r);
  auto add = [&](std::string id, std::string relation, AffineHecke lhs, AffineHecke rhs) {
    BernsteinReport rep{std::move(id), std::move(relation), std::move(lhs), std::move(rhs), false};
    rep.equal = rep.lhs == rep.rhs;
    out.push_back(std::move(rep));
  };
  auto si = [](int i) { return std::to_string(i); };

  std::vector<AffineHecke> T(static_cast<std::size_t>(r)), Tinv(static_cast<std::size_t>(r));
  for (int i = 1; i < r; ++i) {
    T[static_cast<std::size_t>(i)] = AffineHecke::generator(r, i);
    Tinv[static_cast<std::size_t>(i)] = invert_generator<AffinePermutation>(r, i);
  }
  std::vector<AffineHecke> X(static_cast<std::size_t>(r) + 1), Xinv(static_cast<std::size_t>(r) + 1);
  for (int i = 1; i <= r; ++i) {
    X[static_cast<std::size_t>(i)] = x_generator(r, i, 1, cutoff);
    Xinv[static_cast<std::size_t>(i)] = x_generator(r, i, -1, cutoff);
  }
  auto t = [&](int i) -> const AffineHecke& { return T[static_cast<std::size_t>(i)]; };
  auto x = [&](int i) -> const AffineHecke& { return X[static_cast<std::size_t>(i)]; };

  for (int i = 1; i < r; ++i) {
    add("quadratic[" + si(i) + "]", "(T_" + si(i) + " + 1)(T_" + si(i) + " - v^-2) = 0",
        mul(t(i) + one, t(i) - LaurentPoly::v(-2) * one), AffineHecke(r));
    add("inverse-right[" + si(i) + "]", "T_" + si(i) + " T_" + si(i) + "^-1 = 1",
        mul(t(i), Tinv[static_cast<std::size_t>(i)]), one);
    add("inverse-left[" + si(i) + "]", "T_" + si(i) + "^-1 T_" + si(i) + " = 1",
        mul(Tinv[static_cast<std::size_t>(i)], t(i)), one);
  }
  for (int i = 1; i + 1 < r; ++i) {
    add("braid[" + si(i) + "]",
        "T_" + si(i) + " T_" + si(i + 1) + " T_" + si(i) + " = T_" + si(i + 1) + " T_" + si(i) + " T_" + si(i + 1),
        mul(mul(t(i), t(i + 1)), t(i)), mul(mul(t(i + 1), t(i)), t(i + 1)));
  }
  for (int i = 1; i < r; ++i) {
    for (int j = i + 2; j < r; ++j) {
      add("far-commute[" + si(i) + "," + si(j) + "]", "T_" + si(i) + " T_" + si(j) + " = T_" + si(j) + " T_" + si(i),
          mul(t(i), t(j)), mul(t(j), t(i)));
    }
  }
  for (int i = 1; i <= r; ++i) {
    add("x-inverse[" + si(i) + "]", "X_" + si(i) + " X_" + si(i) + "^-1 = 1",
        mul(x(i), Xinv[static_cast<std::size_t>(i)]), one);
    for (int j = i + 1; j <= r; ++j) {
      add("x-commute[" + si(i) + "," + si(j) + "]", "X_" + si(i) + " X_" + si(j) + " = X_" + si(j) + " X_" + si(i),
          mul(x(i), x(j)), mul(x(j), x(i)));
    }
  }
  for (int i = 1; i < r; ++i) {
    add("cross[" + si(i) + "]", "T_" + si(i) + " X_" + si(i) + " T_" + si(i) + " = v^-2 X_" + si(i + 1),
        mul(mul(t(i), x(i)), t(i)), LaurentPoly::v(-2) * x(i + 1));
    for (int j = 1; j <= r; ++j) {
      if (j == i || j == i + 1) continue;
      add("x-t-commute[" + si(j) + "," + si(i) + "]", "X_" + si(j) + " T_" + si(i) + " = T_" + si(i) + " X_" + si(j),
          mul(x(j), t(i)), mul(t(i), x(j)));
    }
  }
  const AffineHecke central = x_monomial(WeightVector(static_cast<std::size_t>(r), 1), cutoff);
  for (int i = 1; i < r; ++i) {
    add("central[" + si(i) + "]", "X^(1,...,1) T_" + si(i) + " = T_" + si(i) + " X^(1,...,1)",
        mul(central, t(i)), mul(t(i), central));
  }
  return out;
}

}  // namespace heckelab
