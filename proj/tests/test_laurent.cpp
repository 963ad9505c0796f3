#include <gtest/gtest.h>

#include <complex>

#include "oracles.hpp"

using heckelab::LaurentPoly;
using heckelab::Rational;

namespace {

std::complex<double> naive_eval(const LaurentPoly& p, std::complex<double> z) {
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> zp = 1.0;
    for (int k = 0; k < std::abs(e); ++k) zp *= e > 0 ? z : 1.0 / z;
    s += c.convert_to<double>() * zp;
  }
  return s;
}

}  // namespace

TEST(Laurent, ZeroAndConstants) {
  LaurentPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_EQ(LaurentPoly(0), z);
  EXPECT_EQ(LaurentPoly::monomial(0, 5), z);
  EXPECT_EQ(LaurentPoly(3).coefficient(0), Rational(3));
  EXPECT_EQ(LaurentPoly::v(-2).min_degree(), -2);
}

TEST(Laurent, CancellationDropsTerms) {
  LaurentPoly a = LaurentPoly::v(2) + LaurentPoly(1);
  LaurentPoly b = a - LaurentPoly::v(2);
  EXPECT_EQ(b, LaurentPoly(1));
  EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Laurent, QuadraticEigenvalueIdentity) {
  // (x + 1)(x - v^-2) vanishes at x = -1 and x = v^-2.
  const LaurentPoly q = LaurentPoly::v(-2);
  EXPECT_TRUE(((q + 1) * (q - q)).is_zero());
  EXPECT_EQ((LaurentPoly(-1) + 1) * (LaurentPoly(-1) - q), LaurentPoly());
  EXPECT_EQ((LaurentPoly::v(-1) - LaurentPoly::v(1)) * (LaurentPoly::v(-1) + LaurentPoly::v(1)),
            LaurentPoly::v(-2) - LaurentPoly::v(2));
}

TEST(Laurent, FormatAndParseRoundTrip) {
  LaurentPoly p = LaurentPoly::from_terms({{-2, Rational(1)}, {0, Rational(-1)}, {3, Rational(5, 2)}});
  EXPECT_EQ(p.to_string(), "v^-2 - 1 + 5/2*v^3");
  EXPECT_EQ(LaurentPoly::parse(p.to_string()), p);
  EXPECT_EQ(LaurentPoly::parse("v^-2 - 1"), LaurentPoly::v(-2) - LaurentPoly(1));
  EXPECT_EQ(LaurentPoly::parse("0"), LaurentPoly());
  EXPECT_EQ(LaurentPoly::parse("-v"), -LaurentPoly::v(1));
}

TEST(Laurent, ParseRejectsGarbage) {
  EXPECT_THROW(LaurentPoly::parse(""), heckelab::ParseError);
  EXPECT_THROW(LaurentPoly::parse("v^"), heckelab::ParseError);
  EXPECT_THROW(LaurentPoly::parse("x^2"), heckelab::ParseError);
  EXPECT_THROW(LaurentPoly::parse("1 +"), heckelab::ParseError);
}

TEST(Laurent, EvalAtZeroIsDomainError) {
  EXPECT_THROW(LaurentPoly::v(-1).eval(0.0), heckelab::DomainError);
  EXPECT_THROW(LaurentPoly(1).eval(0.0), heckelab::DomainError);
}

TEST(Laurent, PowAndShift) {
  LaurentPoly x = LaurentPoly::v(1) + LaurentPoly::v(-1);
  EXPECT_EQ(x.pow(0), LaurentPoly(1));
  EXPECT_EQ(x.pow(2), LaurentPoly::v(2) + LaurentPoly(2) + LaurentPoly::v(-2));
  EXPECT_EQ(x.shifted(3), LaurentPoly::v(4) + LaurentPoly::v(2));
  EXPECT_EQ(x.scaled(Rational(1, 2), -1), LaurentPoly::monomial(Rational(1, 2), 0) +
                                              LaurentPoly::monomial(Rational(1, 2), -2));
}

TEST(LaurentProperty, RingAxioms) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = g.laurent(), b = g.laurent(), c = g.laurent();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(a * LaurentPoly(1), a);
  }
}

TEST(LaurentProperty, BarIsAnInvolutiveRingMap) {
  oracle::Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = g.laurent(), b = g.laurent();
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ((a + b).bar(), a.bar() + b.bar());
  }
}

TEST(LaurentProperty, EvaluationIsAHomomorphism) {
  oracle::Gen g(13);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = g.laurent(), b = g.laurent();
    std::complex<double> z(g.real(0.3, 1.5), g.real(-1.0, 1.0));
    EXPECT_NEAR(std::abs(a.eval(z) - naive_eval(a, z)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs((a * b).eval(z) - a.eval(z) * b.eval(z)), 0.0, 1e-8 * (1 + std::abs(a.eval(z) * b.eval(z))));
    EXPECT_NEAR(std::abs((a + b).eval(z) - a.eval(z) - b.eval(z)), 0.0, 1e-9 * (1 + std::abs(a.eval(z))));
  }
}

TEST(LaurentProperty, TextRoundTrip) {
  oracle::Gen g(14);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = g.laurent(5, -6, 6);
    EXPECT_EQ(LaurentPoly::parse(a.to_string()), a) << a.to_string();
  }
}

TEST(LaurentProperty, HashRespectsEquality) {
  oracle::Gen g(15);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = g.laurent();
    LaurentPoly b = LaurentPoly::parse(a.to_string());
    EXPECT_EQ(a.hash(), b.hash());
  }
}
