#pragma once

// Exact Laurent polynomials in one variable v with rational coefficients.
//
// Terms are kept as a vector of (exponent, coefficient) pairs sorted by
// exponent with no zero coefficients, so equality is structural and printing
// is deterministic.

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heckelab/errors.hpp"

namespace heckelab {

using Rational = boost::multiprecision::cpp_rational;

class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)
  LaurentPoly(Rational c) {                         // NOLINT(implicit)
    if (c != 0) terms_.emplace_back(0, std::move(c));
  }

  static LaurentPoly monomial(Rational c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exponent, std::move(c));
    return p;
  }

  /// v^k
  static LaurentPoly v(int k = 1) { return monomial(1, k); }

  /// Builds from arbitrary (exponent, coefficient) pairs, combining repeats.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
      } else {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(int exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
  }

  int min_degree() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.back().first; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second, b.terms_[0].first);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second, a.terms_[0].first);
    // Dense accumulation over the exponent window.
    const int lo = a.min_degree() + b.min_degree();
    const int hi = a.max_degree() + b.max_degree();
    std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
      }
    }
    LaurentPoly r;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    }
    return r;
  }

  /// c * v^shift * this
  LaurentPoly scaled(const Rational& c, int shift = 0) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, x] : terms_) r.terms_.emplace_back(e + shift, x * c);
    return r;
  }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const { return scaled(1, k); }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  /// Substitution v -> v^{-1}.
  LaurentPoly bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      r.terms_.emplace_back(-it->first, it->second);
    }
    return r;
  }

  std::complex<double> eval(std::complex<double> z) const {
    if (z == std::complex<double>(0.0, 0.0)) {
      throw DomainError("LaurentPoly::eval: evaluation point must be nonzero");
    }
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) {
      sum += c.convert_to<double>() * std::pow(z, e);
    }
    return sum;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [e, c] : terms_) {
      h ^= std::hash<int>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= std::hash<std::string>{}(c.str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
  }

  std::vector<Term> terms_;
};

namespace detail {

inline std::string format_rational(const Rational& c) {
  const auto num = boost::multiprecision::numerator(c);
  const auto den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string format_power(int e) {
  if (e == 1) return "v";
  return "v^" + std::to_string(e);
}

// Accepts ASCII '-' and the UTF-8 minus sign U+2212.
inline std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string text) : s_(std::move(text)) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      skip_ws();
      auto [e, c] = term();
      terms.emplace_back(e, sign * c);
      first = false;
      skip_ws();
      if (pos_ >= s_.size()) break;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term term() {
    Rational c = 1;
    int e = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        e = power();
      } else if (peek() == 'v') {
        e = power();
      }
    } else if (peek() == 'v') {
      e = power();
    } else {
      fail("expected coefficient or v");
    }
    return {e, c};
  }

  int power() {
    if (get() != 'v') fail("expected v");
    skip_ws();
    if (peek() != '^') return 1;
    get();
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    return sign * static_cast<int>(integer());
  }

  Rational rational() {
    boost::multiprecision::cpp_int num = integer();
    if (peek() == '/') {
      get();
      boost::multiprecision::cpp_int den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  boost::multiprecision::cpp_int integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return boost::multiprecision::cpp_int(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw ParseError(std::string("LaurentPoly: ") + what + " at offset " +
                     std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << detail::format_rational(mag);
    } else if (mag == 1) {
      os << detail::format_power(e);
    } else {
      os << detail::format_rational(mag) << '*' << detail::format_power(e);
    }
  }
  return os.str();
}

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s = detail::normalize_minus(text);
  if (std::all_of(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
    throw ParseError("LaurentPoly: empty input");
  }
  // "0" parses as the zero polynomial via a zero coefficient.
  return detail::PolyParser(std::move(s)).parse();
}

}  // namespace heckelab
