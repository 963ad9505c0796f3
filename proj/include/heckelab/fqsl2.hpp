#pragma once

// The quantized function algebra F_v(SL_2): a rewriting system on words in
// t11, t12, t21, t22, the one-dimensional representations tau_t, the
// shift-operator representations pi_t on span{e_0, ..., e_{N-1}}, and
// tensor products along reduced words in S_m.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/linalg.hpp"

namespace heckelab {

// Letters for rank 2: t_ab is (a-1)*2 + (b-1).
enum Letter : int { t11 = 0, t12 = 1, t21 = 2, t22 = 3 };

inline std::string letter_name(int letter) {
  return "t" + std::to_string(letter / 2 + 1) + std::to_string(letter % 2 + 1);
}

using NCWord = std::vector<int>;

/// Element of the free algebra on t11, t12, t21, t22 over the Laurent ring.
class NCPoly {
 public:
  using Terms = std::map<NCWord, LaurentPoly>;

  NCPoly() = default;
  NCPoly(LaurentPoly c) {  // NOLINT(implicit)
    if (!c.is_zero()) terms_.emplace(NCWord{}, std::move(c));
  }
  NCPoly(int c) : NCPoly(LaurentPoly(c)) {}  // NOLINT(implicit)

  static NCPoly word(NCWord w, LaurentPoly c = 1) {
    NCPoly p;
    p.add_term(w, std::move(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  void add_term(const NCWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    for (int l : w) {
      if (l < 0 || l > 3) throw DomainError("NCPoly: letter out of range");
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        NCWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    }
    return out;
  }
  friend NCPoly operator*(const LaurentPoly& c, const NCPoly& p) { return NCPoly(c) * p; }

  /// "v^2*t11*t12 - 1"; terms by ascending degree, then word.
  std::string to_string() const;
  static NCPoly parse(std::string_view text);

 private:
  Terms terms_;
};

inline NCPoly gen(int letter) { return NCPoly::word({letter}); }

enum class RelationMode { paper_literal, corrected };

inline const char* to_string(RelationMode m) {
  return m == RelationMode::corrected ? "corrected" : "paper-literal";
}

inline RelationMode parse_relation_mode(std::string_view s) {
  if (s == "corrected") return RelationMode::corrected;
  if (s == "paper-literal") return RelationMode::paper_literal;
  throw DomainError("unknown relation mode \"" + std::string(s) + "\" (expected corrected or paper-literal)");
}

struct RewriteRule {
  int first;
  int second;
  NCPoly replacement;
};

struct Relation {
  std::string id;
  NCPoly lhs;
  NCPoly rhs;
};

/// Rewrite rules and the defining relations in one of the two modes.
///
/// Both modes share the six ordering rules
///   t12 t11 -> v^2 t11 t12      t21 t11 -> v^2 t11 t21
///   t22 t12 -> v^2 t12 t22      t22 t21 -> v^2 t21 t22
///   t21 t12 -> t12 t21          t22 t11 -> t11 t22 - (v^-2 - v^2) t12 t21
/// The unit relation is t11 t22 - v^-2 t12 t21 = 1 in corrected mode and the
/// printed t11 t12 - v^-2 t12 t21 = 1 in paper-literal mode. Paper-literal
/// mode adds its unit relation as a seventh rule. Corrected mode does not:
/// t11 t22 -> 1 + v^-2 t12 t21 alongside the six rules is not confluent
/// (t11 t22 t12 has two distinct normal forms), so the unit relation there
/// is checked on representations only.
struct RelationSet {
  RelationMode mode = RelationMode::corrected;
  std::vector<RewriteRule> rules;
  std::vector<Relation> relations;

  /// Relations that the rewrite rules encode, i.e. those that normal_form
  /// sends to zero.
  std::size_t rewrite_relation_count() const { return mode == RelationMode::corrected ? 6 : 7; }

  static RelationSet make(RelationMode mode) {
    RelationSet s;
    s.mode = mode;
    const LaurentPoly v2 = LaurentPoly::v(2), vm2 = LaurentPoly::v(-2);
    const LaurentPoly gap = vm2 - v2;
    auto w = [](int a, int b) { return NCPoly::word({a, b}); };
    s.rules = {
        {t12, t11, v2 * w(t11, t12)},
        {t21, t11, v2 * w(t11, t21)},
        {t22, t12, v2 * w(t12, t22)},
        {t22, t21, v2 * w(t21, t22)},
        {t21, t12, w(t12, t21)},
        {t22, t11, w(t11, t22) - gap * w(t12, t21)},
    };
    s.relations = {
        {"q-commute[t11,t12]", w(t11, t12), vm2 * w(t12, t11)},
        {"q-commute[t11,t21]", w(t11, t21), vm2 * w(t21, t11)},
        {"q-commute[t12,t22]", w(t12, t22), vm2 * w(t22, t12)},
        {"q-commute[t21,t22]", w(t21, t22), vm2 * w(t22, t21)},
        {"commute[t12,t21]", w(t12, t21), w(t21, t12)},
        {"commutator[t11,t22]", w(t11, t22) - w(t22, t11), gap * w(t12, t21)},
    };
    if (mode == RelationMode::corrected) {
      s.relations.push_back({"unit[t11 t22 - v^-2 t12 t21]", w(t11, t22) - vm2 * w(t12, t21), NCPoly(1)});
    } else {
      s.relations.push_back({"unit[t11 t12 - v^-2 t12 t21]", w(t11, t12) - vm2 * w(t12, t21), NCPoly(1)});
      s.rules.push_back({t11, t12, NCPoly(1) + vm2 * w(t12, t21)});
    }
    return s;
  }

  /// Index of the rule whose left side is (a, b), or -1.
  int rule_for(int a, int b) const {
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (rules[k].first == a && rules[k].second == b) return static_cast<int>(k);
    }
    return -1;
  }
};

inline constexpr long kDefaultRewriteBudget = 1'000'000;

namespace detail {

/// prefix * replacement * suffix
inline void splice(NCPoly& out, const NCWord& w, std::size_t pos, const RewriteRule& rule, const LaurentPoly& c) {
  for (const auto& [rw, rc] : rule.replacement.terms()) {
    NCWord nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    out.add_term(nw, c * rc);
  }
}

}  // namespace detail

/// Rewrites the leftmost reducible pair of every term, round after round,
/// until no rule applies. Each single rewrite costs one unit of budget.
inline NCPoly normal_form(const NCPoly& p, const RelationSet& rs, long budget = kDefaultRewriteBudget) {
  NCPoly cur = p;
  long steps = 0;
  while (true) {
    NCPoly next;
    bool changed = false;
    for (const auto& [w, c] : cur.terms()) {
      int rule = -1;
      std::size_t pos = 0;
      for (; pos + 1 < w.size(); ++pos) {
        rule = rs.rule_for(w[pos], w[pos + 1]);
        if (rule >= 0) break;
      }
      if (rule < 0) {
        next.add_term(w, c);
        continue;
      }
      if (++steps > budget) {
        throw BudgetExceeded("normal_form: step budget of " + std::to_string(budget) + " exhausted");
      }
      detail::splice(next, w, pos, rs.rules[static_cast<std::size_t>(rule)], c);
      changed = true;
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

/// True if no rule applies anywhere.
inline bool is_normal(const NCPoly& p, const RelationSet& rs) {
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (rs.rule_for(w[k], w[k + 1]) >= 0) return false;
    }
  }
  return true;
}

/// Every result of applying one rule at one position of w.
inline std::vector<NCPoly> single_rewrites(const NCWord& w, const RelationSet& rs) {
  std::vector<NCPoly> out;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    int rule = rs.rule_for(w[pos], w[pos + 1]);
    if (rule < 0) continue;
    NCPoly p;
    detail::splice(p, w, pos, rs.rules[static_cast<std::size_t>(rule)], 1);
    out.push_back(std::move(p));
  }
  return out;
}

struct ConfluenceReport {
  int words_checked = 0;
  std::vector<NCWord> failures;  // words whose rewrite branches disagree
  bool pass() const { return failures.empty(); }
};

/// For every word of the given degree, all one-step rewrites must reach the
/// same normal form.
inline ConfluenceReport check_confluence(const RelationSet& rs, int degree = 3) {
  ConfluenceReport rep;
  NCWord w(static_cast<std::size_t>(degree), 0);
  while (true) {
    ++rep.words_checked;
    const auto branches = single_rewrites(w, rs);
    if (branches.size() > 1) {
      const NCPoly first = normal_form(branches.front(), rs);
      for (std::size_t k = 1; k < branches.size(); ++k) {
        if (!(normal_form(branches[k], rs) == first)) {
          rep.failures.push_back(w);
          break;
        }
      }
    }
    int k = degree - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == 3) w[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++w[static_cast<std::size_t>(k)];
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Representations

enum class Variant { paper_literal, corrected };

inline const char* to_string(Variant v) { return v == Variant::corrected ? "corrected" : "paper-literal"; }

inline Variant parse_variant(std::string_view s) {
  return parse_relation_mode(s) == RelationMode::corrected ? Variant::corrected : Variant::paper_literal;
}

inline constexpr const char* kMatrixCoproduct = "Delta(t_ab) = sum_c t_ac (x) t_cb";

/// Generator images of a representation of F_v(SL_m) on a tensor product of
/// truncated sequence spaces (factors of size N) and a final character.
struct TruncatedRep {
  int m = 2;
  std::vector<CMatrix> images;  // t_ab at (a-1)*m + (b-1)
  Complex t{1.0, 0.0};
  double v = 0.5;
  int N = 1;
  int depth = 0;  // number of truncated factors
  Variant variant = Variant::corrected;
  std::vector<int> word;

  const CMatrix& image(int a, int b) const {
    return images.at(static_cast<std::size_t>((a - 1) * m + (b - 1)));
  }
  Eigen::Index dimension() const { return images.empty() ? 0 : images.front().rows(); }

  /// Basis vectors with every truncated factor index <= N - 1 - band.
  std::vector<Eigen::Index> interior(int band) const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index k = 0; k < dimension(); ++k) {
      Eigen::Index rest = k;
      bool ok = true;
      for (int f = 0; f < depth; ++f) {
        if (rest % N > N - 1 - band) ok = false;
        rest /= N;
      }
      if (ok) out.push_back(k);
    }
    return out;
  }
};

namespace detail {

inline void check_unit(Complex t) {
  if (std::abs(std::abs(t) - 1.0) > 1e-12) throw DomainError("t must lie on the unit circle");
}

inline void check_v(double v) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("v must satisfy 0 < v < 1");
}

}  // namespace detail

/// Point on the unit circle from an angle in turns (0.25 -> i).
inline Complex unit_from_turns(double turns) {
  const double a = 2.0 * std::numbers::pi * turns;
  // Snap quarter turns to exact values.
  const double quarters = turns * 4.0;
  if (std::abs(quarters - std::round(quarters)) < 1e-15) {
    switch (((static_cast<long>(std::round(quarters)) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(a), std::sin(a)};
}

/// tau_t: t11 -> t, t22 -> t^-1, t12, t21 -> 0.
inline TruncatedRep rep_tau(Complex t) {
  detail::check_unit(t);
  TruncatedRep rep;
  rep.t = t;
  rep.N = 1;
  rep.images.assign(4, CMatrix::Zero(1, 1));
  rep.images[t11](0, 0) = t;
  rep.images[t22](0, 0) = 1.0 / t;
  return rep;
}

/// pi_t on span{e_0..e_{N-1}}.
///
/// paper-literal: t11 e_k = sqrt(1-v) e_{k-1}, t22 e_k = sqrt(1-v) e_{k+1},
/// t12 e_k = t v^{2k} e_k, t21 e_k = t^-1 v^{2k+1} e_k.
/// corrected: t11 e_k = c_k e_{k+1}, t22 e_{k+1} = c_k e_k with
/// c_k = sqrt(1 - v^{4(k+1)}), t12 e_k = t v^{2k} e_k,
/// t21 e_k = -t^-1 v^{2k+2} e_k.
/// The raising operator sends e_{N-1} to 0.
inline TruncatedRep rep_pi(Complex t, double v, int N, Variant variant) {
  detail::check_unit(t);
  detail::check_v(v);
  if (N < 2) throw DomainError("rep_pi: N must be >= 2");
  TruncatedRep rep;
  rep.t = t;
  rep.v = v;
  rep.N = N;
  rep.depth = 1;
  rep.variant = variant;
  rep.images.assign(4, CMatrix::Zero(N, N));
  for (int k = 0; k < N; ++k) {
    rep.images[t12](k, k) = t * std::pow(v, 2 * k);
    if (variant == Variant::corrected) {
      rep.images[t21](k, k) = -std::pow(v, 2 * k + 2) / t;
    } else {
      rep.images[t21](k, k) = std::pow(v, 2 * k + 1) / t;
    }
  }
  for (int k = 0; k + 1 < N; ++k) {
    if (variant == Variant::corrected) {
      const double c = std::sqrt(1.0 - std::pow(v, 4 * (k + 1)));
      rep.images[t11](k + 1, k) = c;
      rep.images[t22](k, k + 1) = c;
    } else {
      const double c = std::sqrt(1.0 - v);
      rep.images[t11](k, k + 1) = c;
      rep.images[t22](k + 1, k) = c;
    }
  }
  return rep;
}

/// Image of the rank-m generator t_ab under pi_{s_i}: the pi_{-1} images on
/// the block {i, i+1}, the identity for a = b outside it, zero otherwise.
inline CMatrix pi_si_generator(int i, int m, int a, int b, double v, int N, Variant variant = Variant::corrected) {
  if (m < 2 || i < 1 || i >= m) throw DomainError("pi_si_generator: need 1 <= i <= m-1");
  if (a < 1 || a > m || b < 1 || b > m) throw DomainError("pi_si_generator: generator index out of range");
  const bool ain = a == i || a == i + 1;
  const bool bin = b == i || b == i + 1;
  if (ain && bin) {
    const TruncatedRep base = rep_pi(Complex(-1.0, 0.0), v, N, variant);
    return base.images[static_cast<std::size_t>((a - i) * 2 + (b - i))];
  }
  if (a == b) return CMatrix::Identity(N, N);
  return CMatrix::Zero(N, N);
}

/// Character of rank m extending tau_t: t_11 -> t, t_22 -> t^-1, t_aa -> 1
/// for a > 2, off-diagonal -> 0.
inline Complex tau_character(Complex t, int m, int a, int b) {
  if (a != b) return 0.0;
  if (a == 1) return t;
  if (a == 2) return 1.0 / t;
  (void)m;
  return 1.0;
}

/// pi_{s_{i_1}} (x) ... (x) pi_{s_{i_k}} (x) tau_t for a reduced word in
/// S_m, through the matrix-coefficient coproduct.
inline TruncatedRep tensor_rep(const std::vector<int>& word, int m, Complex t, double v, int N,
                               Variant variant = Variant::corrected) {
  detail::check_unit(t);
  detail::check_v(v);
  if (m < 2) throw DomainError("tensor_rep: m must be >= 2");
  if (N < 2) throw DomainError("tensor_rep: N must be >= 2");
  for (int i : word) {
    if (i < 1 || i >= m) throw DomainError("tensor_rep: letter s" + std::to_string(i) + " out of range");
  }
  if (!is_reduced<FinitePermutation>(m, Word{word})) {
    throw DomainError("tensor_rep: word " + Word{word}.to_string() + " is not reduced");
  }
  const auto idx = [m](int a, int b) { return static_cast<std::size_t>((a - 1) * m + (b - 1)); };
  std::vector<CMatrix> cur(static_cast<std::size_t>(m * m));
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) cur[idx(a, b)] = CMatrix::Constant(1, 1, tau_character(t, m, a, b));
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<CMatrix> next(cur.size());
    for (int a = 1; a <= m; ++a) {
      for (int b = 1; b <= m; ++b) {
        CMatrix acc = CMatrix::Zero(N * cur.front().rows(), N * cur.front().cols());
        for (int c = 1; c <= m; ++c) {
          const CMatrix left = pi_si_generator(*it, m, a, c, v, N, variant);
          if (left.isZero(0.0) || cur[idx(c, b)].isZero(0.0)) continue;
          acc += kron(left, cur[idx(c, b)]);
        }
        next[idx(a, b)] = std::move(acc);
      }
    }
    cur = std::move(next);
  }
  TruncatedRep rep;
  rep.m = m;
  rep.images = std::move(cur);
  rep.t = t;
  rep.v = v;
  rep.N = N;
  rep.depth = static_cast<int>(word.size());
  rep.variant = variant;
  rep.word = word;
  return rep;
}

/// Block-diagonal sum of two representations of the same rank.
inline TruncatedRep direct_sum(const TruncatedRep& a, const TruncatedRep& b) {
  if (a.m != b.m) throw RankMismatch("direct_sum: ranks differ");
  TruncatedRep out = a;
  out.depth = 0;
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    CMatrix s = CMatrix::Zero(a.dimension() + b.dimension(), a.dimension() + b.dimension());
    s.topLeftCorner(a.dimension(), a.dimension()) = a.images[g];
    s.bottomRightCorner(b.dimension(), b.dimension()) = b.images[g];
    out.images[g] = std::move(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residuals

/// rho(p) for a rank-2 representation, or for rank m with the letters
/// substituted by the given generator indices.
inline CMatrix evaluate(const NCPoly& p, const TruncatedRep& rep, const std::vector<int>& letter_map = {}) {
  const Eigen::Index d = rep.dimension();
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& [w, c] : p.terms()) {
    CMatrix prod = CMatrix::Identity(d, d);
    for (int l : w) {
      const int g = letter_map.empty() ? l : letter_map[static_cast<std::size_t>(l)];
      prod = prod * rep.images.at(static_cast<std::size_t>(g));
    }
    out += c.eval(rep.v) * prod;
  }
  return out;
}

/// Operator norm of m restricted to the given columns.
inline double interior_norm(const CMatrix& m, const std::vector<Eigen::Index>& cols) {
  if (cols.empty()) return 0.0;
  CMatrix sub(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
  return operator_norm(sub);
}

struct RelationResidual {
  std::string id;
  double residual = 0.0;
};

struct ResidualReport {
  double max_residual = 0.0;
  int excluded_band = 1;
  bool induced = false;  // rank-m relations from 2x2 submatrices
  std::vector<RelationResidual> relations;

  const RelationResidual* find(std::string_view id) const {
    for (const auto& r : relations) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }
};

/// max over relations of ||rho(L) - rho(R)|| on basis vectors away from the
/// truncation edge. For rank m > 2 the six quadratic relations are checked
/// on every 2x2 submatrix of generators (rows a < c, columns b < d).
inline ResidualReport relation_residual(const TruncatedRep& rep, const RelationSet& rs, int band = 1) {
  ResidualReport out;
  out.excluded_band = rep.depth > 0 ? band : 0;
  const auto cols = rep.interior(out.excluded_band);
  auto record = [&](std::string id, const CMatrix& diff) {
    const double r = interior_norm(diff, cols);
    out.max_residual = std::max(out.max_residual, r);
    out.relations.push_back({std::move(id), r});
  };
  if (rep.m == 2) {
    for (const auto& rel : rs.relations) record(rel.id, evaluate(rel.lhs - rel.rhs, rep));
    return out;
  }
  out.induced = true;
  const int m = rep.m;
  for (int a = 1; a <= m; ++a) {
    for (int c = a + 1; c <= m; ++c) {
      for (int b = 1; b <= m; ++b) {
        for (int d = b + 1; d <= m; ++d) {
          const std::vector<int> map = {(a - 1) * m + (b - 1), (a - 1) * m + (d - 1),
                                        (c - 1) * m + (b - 1), (c - 1) * m + (d - 1)};
          const std::string tag = "[" + std::to_string(a) + std::to_string(c) + "|" + std::to_string(b) +
                                  std::to_string(d) + "]";
          for (std::size_t k = 0; k < 6; ++k) {
            const auto& rel = rs.relations[k];
            record(rel.id + tag, evaluate(rel.lhs - rel.rhs, rep, map));
          }
        }
      }
    }
  }
  return out;
}

/// ||rho(p) - rho(normal_form(p))|| on the interior, band = degree of p.
inline double normal_form_residual(const NCPoly& p, const TruncatedRep& rep, const RelationSet& rs) {
  const NCPoly nf = normal_form(p, rs);
  const int band = std::max(p.degree(), nf.degree());
  return interior_norm(evaluate(p - nf, rep), rep.interior(rep.depth > 0 ? band : 0));
}

inline int commutant_dim(const TruncatedRep& rep) { return commutant_dimension(rep.images); }

/// Sorted eigenvalues of the t12 image (by real part, then imaginary part).
inline std::vector<Complex> t12_spectrum(const TruncatedRep& rep) {
  const CMatrix& a = rep.image(1, 2);
  Eigen::ComplexEigenSolver<CMatrix> es(a, false);
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return ev;
}

struct EquivalenceReport {
  bool equivalent = false;
  bool spectra_match = false;
  int intertwiner_dim = 0;
  std::string reason;
};

/// Greedy tolerance matching of the t12 spectra; on a match, look for an
/// invertible intertwiner among seeded random combinations of a nullspace
/// basis.
inline EquivalenceReport equivalence_check(const TruncatedRep& a, const TruncatedRep& b, double tol = 1e-8,
                                           unsigned seed = 0) {
  if (a.m != b.m) throw RankMismatch("equivalence_check: ranks differ");
  if (a.dimension() != b.dimension()) throw DomainError("equivalence_check: dimensions differ");
  EquivalenceReport rep;
  auto sa = t12_spectrum(a);
  auto sb = t12_spectrum(b);
  std::vector<bool> used(sb.size(), false);
  rep.spectra_match = true;
  for (const Complex& x : sa) {
    bool found = false;
    for (std::size_t k = 0; k < sb.size(); ++k) {
      if (!used[k] && std::abs(x - sb[k]) <= tol * std::max(1.0, std::abs(x))) {
        used[k] = found = true;
        break;
      }
    }
    if (!found) {
      rep.spectra_match = false;
      break;
    }
  }
  if (!rep.spectra_match) {
    rep.reason = "t12 spectra differ";
    return rep;
  }
  const CMatrix space = intertwiner_space(a.images, b.images);
  rep.intertwiner_dim = static_cast<int>(space.cols());
  if (space.cols() == 0) {
    rep.reason = "no nonzero intertwiner";
    return rep;
  }
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  const Eigen::Index d = a.dimension();
  for (int attempt = 0; attempt < 3; ++attempt) {
    CVector coeff(space.cols());
    for (Eigen::Index k = 0; k < coeff.size(); ++k) coeff(k) = Complex(normal(rng), normal(rng));
    CVector x = space * coeff;
    CMatrix X = Eigen::Map<CMatrix>(x.data(), d, d);
    Eigen::VectorXd s = Eigen::BDCSVD<CMatrix>(X).singularValues();
    if (s.minCoeff() > kRankTolerance * s.maxCoeff()) {
      rep.equivalent = true;
      rep.reason = "invertible intertwiner found";
      return rep;
    }
  }
  rep.reason = "intertwiners are all singular";
  return rep;
}

// ---------------------------------------------------------------------------
// NCPoly text format

inline std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->first.size() < b->first.size(); });
  std::ostringstream os;
  bool first = true;
  for (const auto* kv : order) {
    const LaurentPoly& c = kv->second;
    const bool negative = c.is_monomial() && c.terms().front().second < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string word;
    for (std::size_t k = 0; k < kv->first.size(); ++k) {
      if (k) word += '*';
      word += letter_name(kv->first[k]);
    }
    if (word.empty()) {
      os << (mag.is_monomial() ? mag.to_string() : "(" + mag.to_string() + ")");
    } else if (mag == LaurentPoly(1)) {
      os << word;
    } else if (mag.is_monomial()) {
      os << mag.to_string() << '*' << word;
    } else {
      os << '(' << mag.to_string() << ")*" << word;
    }
  }
  return os.str();
}

/// Sums of signed products of factors; a factor is a letter t11..t22, a
/// parenthesised Laurent polynomial, an integer or fraction, or v^k.
inline NCPoly NCPoly::parse(std::string_view text) {
  const std::string s = detail::normalize_minus(text);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("NCPoly: " + what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  };
  auto factor = [&]() -> NCPoly {
    skip_ws();
    if (pos >= s.size()) fail("expected a factor");
    if (s[pos] == 't') {
      if (pos + 2 >= s.size() || (s[pos + 1] != '1' && s[pos + 1] != '2') ||
          (s[pos + 2] != '1' && s[pos + 2] != '2')) {
        fail("expected t11, t12, t21 or t22");
      }
      const int a = s[pos + 1] - '1', b = s[pos + 2] - '1';
      pos += 3;
      return gen(a * 2 + b);
    }
    if (s[pos] == '(') {
      int depth = 0;
      const std::size_t start = pos + 1;
      for (; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')' && --depth == 0) break;
      }
      if (pos >= s.size()) fail("unbalanced parenthesis");
      LaurentPoly c = LaurentPoly::parse(s.substr(start, pos - start));
      ++pos;
      return NCPoly(c);
    }
    std::size_t end = pos;
    if (s[pos] == 'v') {
      ++end;
      if (end < s.size() && s[end] == '^') {
        ++end;
        if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      }
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
    } else {
      fail("unexpected character");
    }
    LaurentPoly c = LaurentPoly::parse(s.substr(pos, end - pos));
    pos = end;
    return NCPoly(c);
  };
  NCPoly out;
  skip_ws();
  if (pos == s.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    NCPoly term = factor();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        term = term * factor();
      } else if (pos < s.size() && s[pos] == 't') {
        term = term * factor();  // juxtaposition "t11 t12"
      } else {
        break;
      }
    }
    out += sign == 1 ? term : NCPoly(-1) * term;
  }
  return out;
}

}  // namespace heckelab
