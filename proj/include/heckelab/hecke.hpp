#pragma once

// Hecke algebra H(v, W) in the Coxeter presentation, over LaurentPoly.
//
// Basis T_w (w in W) with
//   T_s T_w = T_{sw}                              if l(sw) > l(w),
//   T_s T_w = (v^-2 - 1) T_w + v^-2 T_{sw}        otherwise,
// i.e. (T_s + 1)(T_s - v^-2) = 0. For the extended affine group the
// length-zero rotations act by T_pi T_w = T_{pi w}.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/laurent.hpp"

namespace heckelab {

template <CoxeterElement W>
class HeckeElement {
 public:
  using Terms = std::map<W, LaurentPoly>;

  HeckeElement() = default;
  explicit HeckeElement(int rank) : rank_(rank) {}

  static HeckeElement basis(const W& w, LaurentPoly c = 1) {
    HeckeElement x(w.rank());
    x.add_term(w, std::move(c));
    return x;
  }

  static HeckeElement identity(int rank) { return basis(W::identity(rank)); }

  /// T_{s_i}
  static HeckeElement generator(int rank, int i) { return basis(W::generator(rank, i)); }

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentPoly coefficient(const W& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  void add_term(const W& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    check_rank(w.rank());
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest Coxeter length in the support (0 for the zero element).
  int max_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, length(w));
    return m;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.rank_ == b.rank_);
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    if (o.terms_.empty()) return *this;
    check_rank(o.rank_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  HeckeElement& operator-=(const HeckeElement& o) {
    if (o.terms_.empty()) return *this;
    check_rank(o.rank_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  HeckeElement operator-() const {
    HeckeElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
    HeckeElement r(x.rank_);
    if (c.is_zero()) return r;
    for (const auto& [w, p] : x.terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * p);
    return r;
  }

  std::string to_string() const;
  static HeckeElement parse(std::string_view text, int rank);

  friend std::ostream& operator<<(std::ostream& os, const HeckeElement& x) {
    return os << x.to_string();
  }

 private:
  void check_rank(int r) {
    if (rank_ == 0) {
      rank_ = r;
    } else if (r != rank_) {
      throw RankMismatch("HeckeElement: rank " + std::to_string(rank_) + " vs " +
                         std::to_string(r));
    }
  }

  int rank_ = 0;
  Terms terms_;
};

namespace detail {

inline const LaurentPoly& quadratic_a() {
  static const LaurentPoly p = LaurentPoly::v(-2) - LaurentPoly(1);
  return p;
}
inline const LaurentPoly& quadratic_b() {
  static const LaurentPoly p = LaurentPoly::v(-2);
  return p;
}

}  // namespace detail

/// T_{s_i} T_w expanded in the T basis.
template <CoxeterElement W>
HeckeElement<W> mul_gen_basis(int i, const W& w) {
  W sw = w.generator_times(i);
  if (!w.has_left_descent(i)) return HeckeElement<W>::basis(sw);
  HeckeElement<W> x(w.rank());
  x.add_term(w, detail::quadratic_a());
  x.add_term(sw, detail::quadratic_b());
  return x;
}

/// T_w T_{s_i} expanded in the T basis.
template <CoxeterElement W>
HeckeElement<W> mul_basis_gen(const W& w, int i) {
  W ws = w.times_generator(i);
  if (!w.has_right_descent(i)) return HeckeElement<W>::basis(ws);
  HeckeElement<W> x(w.rank());
  x.add_term(w, detail::quadratic_a());
  x.add_term(ws, detail::quadratic_b());
  return x;
}

/// T_{s_i} x
template <CoxeterElement W>
HeckeElement<W> left_mul_gen(int i, const HeckeElement<W>& x) {
  HeckeElement<W> out(x.rank());
  for (const auto& [w, c] : x.terms()) {
    W sw = w.generator_times(i);
    if (!w.has_left_descent(i)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, detail::quadratic_a() * c);
      out.add_term(sw, c.shifted(-2));
    }
  }
  return out;
}

/// x T_{s_i}
template <CoxeterElement W>
HeckeElement<W> right_mul_gen(const HeckeElement<W>& x, int i) {
  HeckeElement<W> out(x.rank());
  for (const auto& [w, c] : x.terms()) {
    W ws = w.times_generator(i);
    if (!w.has_right_descent(i)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, detail::quadratic_a() * c);
      out.add_term(ws, c.shifted(-2));
    }
  }
  return out;
}

/// T_{pi^k} x (affine only).
inline HeckeElement<AffinePermutation> left_mul_rotation(int k, const HeckeElement<AffinePermutation>& x) {
  HeckeElement<AffinePermutation> out(x.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(w.rotated(k), c);
  return out;
}

namespace detail {

template <CoxeterElement W>
void check_cutoff(const HeckeElement<W>& x, std::optional<int> cutoff) {
  if (!cutoff) return;
  for (const auto& [w, c] : x.terms()) {
    int l = length(w);
    if (l > *cutoff) throw CutoffExceeded(l, *cutoff);
  }
}

// T_sigma * b for every sigma requested, sharing work along left descents.
template <CoxeterElement W>
class LeftProductCache {
 public:
  explicit LeftProductCache(const HeckeElement<W>& b) : b_(b) {}

  const HeckeElement<W>& get(const W& sigma) {
    auto it = memo_.find(sigma);
    if (it != memo_.end()) return it->second;
    HeckeElement<W> value;
    if (sigma.is_length_zero()) {
      if constexpr (W::kind == GroupKind::affine) {
        value = sigma.winding() == 0 ? b_ : left_mul_rotation(sigma.winding(), b_);
      } else {
        value = b_;
      }
    } else {
      int i = W::first_generator;
      while (!sigma.has_left_descent(i)) ++i;
      value = left_mul_gen(i, get(sigma.generator_times(i)));
    }
    return memo_.emplace(sigma, std::move(value)).first->second;
  }

 private:
  const HeckeElement<W>& b_;
  std::unordered_map<W, HeckeElement<W>, PermutationHash> memo_;
};

}  // namespace detail

/// Product in H(v, W). With a cutoff, operands and result must be supported
/// on elements of length <= cutoff, otherwise CutoffExceeded is thrown.
template <CoxeterElement W>
HeckeElement<W> mul(const HeckeElement<W>& a, const HeckeElement<W>& b,
                    std::optional<int> cutoff = std::nullopt) {
  if (!a.is_zero() && !b.is_zero() && a.rank() != b.rank()) {
    throw RankMismatch("mul: operands from different groups (rank " + std::to_string(a.rank()) +
                       " vs " + std::to_string(b.rank()) + ")");
  }
  detail::check_cutoff(a, cutoff);
  detail::check_cutoff(b, cutoff);
  HeckeElement<W> out(b.rank() ? b.rank() : a.rank());
  if (a.is_zero() || b.is_zero()) return out;
  detail::LeftProductCache<W> cache(b);
  for (const auto& [sigma, c] : a.terms()) out += c * cache.get(sigma);
  detail::check_cutoff(out, cutoff);
  return out;
}

template <CoxeterElement W>
HeckeElement<W> operator*(const HeckeElement<W>& a, const HeckeElement<W>& b) {
  return mul(a, b);
}

/// T_{s_i}^{-1} = v^2 T_{s_i} + (v^2 - 1) T_e.
template <CoxeterElement W>
HeckeElement<W> invert_generator(int rank, int i) {
  HeckeElement<W> x(rank);
  x.add_term(W::generator(rank, i), LaurentPoly::v(2));
  x.add_term(W::identity(rank), LaurentPoly::v(2) - LaurentPoly(1));
  return x;
}

/// T_w^{-1}, as the product of inverse generators along a reduced expression.
template <CoxeterElement W>
HeckeElement<W> invert_basis(const W& w) {
  const int r = w.rank();
  ReducedExpression e = reduced_expression(w);
  HeckeElement<W> x = HeckeElement<W>::identity(r);
  // (T_pi^k T_{i1} ... T_{il})^{-1} = T_{il}^{-1} ... T_{i1}^{-1} T_pi^{-k}
  if constexpr (W::kind == GroupKind::affine) {
    if (e.rotation != 0) x = left_mul_rotation(-e.rotation, x);
  }
  for (int i : e.word.letters) x = mul(invert_generator<W>(r, i), x);
  return x;
}

// ---------------------------------------------------------------------------
// Relation suite

struct RelationCheck {
  std::string id;
  std::string relation;
  bool pass = true;
  std::string witness;  // first violating instance, empty on success
};

struct PresentationReport {
  GroupKind kind = GroupKind::finite;
  int rank = 0;
  int max_length = 0;
  std::size_t elements = 0;
  std::vector<RelationCheck> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
  }
};

/// Exact check of the quadratic, braid and length-additivity relations on
/// every element of length <= max_length. Relations are checked both as
/// bare identities and after multiplication onto each enumerated T_w.
template <CoxeterElement W>
PresentationReport verify_presentation(int r, int max_length) {
  using H = HeckeElement<W>;
  PresentationReport rep;
  rep.kind = W::kind;
  rep.rank = r;
  rep.max_length = max_length;
  const std::vector<W> elems = enumerate_up_to_length<W>(r, max_length);
  rep.elements = elems.size();
  const H one = H::identity(r);

  auto check_on_basis = [&](RelationCheck& chk, const H& lhs, const H& rhs) {
    if (!(lhs == rhs)) {
      chk.pass = false;
      chk.witness = "bare: " + (lhs - rhs).to_string() + " != 0";
      return;
    }
    for (const W& w : elems) {
      H tw = H::basis(w);
      H diff = mul(lhs, tw) - mul(rhs, tw);
      if (!diff.is_zero()) {
        chk.pass = false;
        chk.witness = "on T" + w.to_string() + ": " + diff.to_string() + " != 0";
        return;
      }
    }
  };

  for (int i : W::generator_indices(r)) {
    RelationCheck chk;
    chk.id = "quadratic[s" + std::to_string(i) + "]";
    chk.relation = "(T_s" + std::to_string(i) + " + 1)(T_s" + std::to_string(i) + " - v^-2) = 0";
    H t = H::generator(r, i);
    H lhs = mul(t + one, t - LaurentPoly::v(-2) * one);
    check_on_basis(chk, lhs, H(r));
    rep.checks.push_back(std::move(chk));
  }

  for (int i : W::generator_indices(r)) {
    for (int j : W::generator_indices(r)) {
      if (j <= i) continue;
      const int m = W::coxeter_m(r, i, j);
      if (m == 0) continue;  // no relation between s_i, s_j
      RelationCheck chk;
      chk.id = "braid[s" + std::to_string(i) + ",s" + std::to_string(j) + "]";
      H ti = H::generator(r, i), tj = H::generator(r, j);
      H lhs, rhs;
      if (m == 3) {
        chk.relation = "T_i T_j T_i = T_j T_i T_j";
        lhs = mul(mul(ti, tj), ti);
        rhs = mul(mul(tj, ti), tj);
      } else {
        chk.relation = "T_i T_j = T_j T_i";
        lhs = mul(ti, tj);
        rhs = mul(tj, ti);
      }
      check_on_basis(chk, lhs, rhs);
      rep.checks.push_back(std::move(chk));
    }
  }

  RelationCheck add;
  add.id = "length-additivity";
  add.relation = "T_x T_y = T_xy when l(xy) = l(x) + l(y)";
  std::vector<int> lens;
  lens.reserve(elems.size());
  for (const W& w : elems) lens.push_back(length(w));
  for (std::size_t a = 0; a < elems.size() && add.pass; ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      W xy = compose(elems[a], elems[b]);
      if (length(xy) != lens[a] + lens[b]) continue;
      H prod = mul(H::basis(elems[a]), H::basis(elems[b]));
      if (!(prod == H::basis(xy))) {
        add.pass = false;
        add.witness = "T" + elems[a].to_string() + " T" + elems[b].to_string() + " = " +
                      prod.to_string();
        break;
      }
    }
  }
  rep.checks.push_back(std::move(add));
  return rep;
}

// ---------------------------------------------------------------------------
// Text format: "(v^-2 - 1)*T[s1] + v^-2*T[]"; affine rotations print as
// "T[pi^k s0 s1]".

namespace detail {

template <CoxeterElement W>
std::string format_basis_word(const W& w) {
  ReducedExpression e = reduced_expression(w);
  std::string s;
  if (e.rotation != 0) s = "pi^" + std::to_string(e.rotation);
  std::string word = e.word.to_string();
  if (!s.empty() && !word.empty()) s += ' ';
  return s + word;
}

}  // namespace detail

template <CoxeterElement W>
std::string HeckeElement<W>::to_string() const {
  if (terms_.empty()) return "0";
  // Longest basis elements first, ties by window.
  std::vector<std::pair<int, const typename Terms::value_type*>> order;
  for (const auto& kv : terms_) order.emplace_back(length(kv.first), &kv);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [len, kv] : order) {
    const LaurentPoly& c = kv->second;
    const std::string basis = "T[" + detail::format_basis_word(kv->first) + "]";
    bool negative = c.is_monomial() && c.terms().front().second < 0;
    LaurentPoly mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag == LaurentPoly(1)) {
      os << basis;
    } else if (mag.is_monomial()) {
      os << mag.to_string() << '*' << basis;
    } else {
      os << '(' << mag.to_string() << ")*" << basis;
    }
  }
  return os.str();
}

template <CoxeterElement W>
HeckeElement<W> HeckeElement<W>::parse(std::string_view text, int rank) {
  const std::string s = detail::normalize_minus(text);
  HeckeElement<W> out(rank);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("HeckeElement: " + what + " at offset " + std::to_string(pos) + " in \"" +
                     s + "\"");
  };
  skip_ws();
  if (pos == s.size()) fail("empty input");
  if (s.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    LaurentPoly coeff(1);
    if (s[pos] == '(') {
      int depth = 0;
      std::size_t start = pos + 1;
      for (; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')' && --depth == 0) break;
      }
      if (pos == s.size()) fail("unbalanced parenthesis");
      coeff = LaurentPoly::parse(s.substr(start, pos - start));
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') ++pos;
      skip_ws();
    } else if (s[pos] != 'T') {
      std::size_t star = s.find('*', pos);
      std::size_t tpos = s.find('T', pos);
      if (star == std::string::npos || tpos == std::string::npos || star > tpos) {
        fail("expected coefficient followed by *T[...]");
      }
      coeff = LaurentPoly::parse(s.substr(pos, star - pos));
      pos = star + 1;
      skip_ws();
    }
    if (pos >= s.size() || s[pos] != 'T') fail("expected T[...]");
    ++pos;
    if (pos >= s.size() || s[pos] != '[') fail("expected [");
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) fail("missing ]");
    std::string inner = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    int rotation = 0;
    std::stringstream ss(inner);
    std::string tok, rest;
    while (ss >> tok) {
      if (tok.rfind("pi^", 0) == 0) {
        try {
          rotation = std::stoi(tok.substr(3));
        } catch (const std::exception&) {
          fail("bad rotation \"" + tok + "\"");
        }
      } else {
        rest += tok + ' ';
      }
    }
    Word word = Word::parse(rest);
    W w = from_word<W>(rank, word, rotation);
    if (length(w) != static_cast<int>(word.size())) fail("word \"" + rest + "\" is not reduced");
    out.add_term(w, sign == 1 ? coeff : -coeff);
  }
  return out;
}

}  // namespace heckelab
