#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace heckelab;

TEST(Bernstein, TranslationWindows) {
  EXPECT_EQ(translation({1, 0}).to_string(), "[3,2]");
  EXPECT_EQ(translation({0, 0, 0}), AffinePermutation::identity(3));
  EXPECT_EQ(length(translation({1, 0})), 1);
  EXPECT_EQ(length(translation({1, 1})), 0);
  EXPECT_THROW(translation({1}), DomainError);
}

TEST(Bernstein, DominanceAndSplit) {
  EXPECT_TRUE(is_dominant({2, 1, 1, -3}));
  EXPECT_FALSE(is_dominant({0, 1}));
  oracle::Gen g(41);
  for (int trial = 0; trial < 200; ++trial) {
    WeightVector l(static_cast<std::size_t>(g.uniform(2, 4)));
    for (int& x : l) x = g.uniform(-3, 3);
    auto [mu, nu] = dominant_split(l);
    EXPECT_TRUE(is_dominant(mu));
    EXPECT_TRUE(is_dominant(nu));
    EXPECT_EQ(nu.back(), 0);
    for (std::size_t j = 0; j < l.size(); ++j) EXPECT_EQ(mu[j] - nu[j], l[j]);
    if (is_dominant(l)) EXPECT_EQ(nu, WeightVector(l.size(), 0));
  }
}

TEST(Bernstein, TildeInverse) {
  for (int r = 2; r <= 3; ++r) {
    for (const auto& w : enumerate_up_to_length<AffinePermutation>(r, 3)) {
      EXPECT_EQ(mul(t_tilde(w), t_tilde_inverse(w)), AffineHecke::identity(r));
    }
  }
}

TEST(Bernstein, ZeroWeightIsTheUnit) {
  EXPECT_EQ(x_monomial({0, 0}), AffineHecke::identity(2));
  EXPECT_EQ(x_monomial({0, 0, 0}), AffineHecke::identity(3));
}

TEST(Bernstein, RelationsRankTwo) {
  auto reports = check_bernstein_relations(2, 8);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.equal) << r.id << ": " << r.relation;
}

TEST(Bernstein, RelationsRankThree) {
  auto reports = check_bernstein_relations(3, 8);
  std::set<std::string> ids;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.equal) << r.id << ": " << r.relation;
    ids.insert(r.id);
  }
  for (const char* id : {"quadratic[1]", "braid[1]", "cross[2]", "x-commute[1,3]", "x-t-commute[3,1]",
                         "central[2]", "inverse-left[2]", "x-inverse[3]"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Bernstein, RankOneIsRejected) { EXPECT_THROW(check_bernstein_relations(1, 4), DomainError); }

TEST(BernsteinProperty, LatticeHomomorphismRadiusOne) {
  for (int r = 2; r <= 3; ++r) {
    std::vector<WeightVector> box;
    WeightVector l(static_cast<std::size_t>(r), -1);
    while (true) {
      box.push_back(l);
      std::size_t k = 0;
      while (k < l.size() && l[k] == 1) l[k++] = -1;
      if (k == l.size()) break;
      ++l[k];
    }
    for (const auto& a : box) {
      for (const auto& b : box) {
        WeightVector s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        EXPECT_EQ(mul(x_monomial(a), x_monomial(b)), x_monomial(s));
      }
    }
  }
}

TEST(BernsteinProperty, XMonomialsCommute) {
  oracle::Gen g(42);
  for (int trial = 0; trial < 25; ++trial) {
    WeightVector a(3), b(3);
    for (int& x : a) x = g.uniform(-2, 2);
    for (int& x : b) x = g.uniform(-2, 2);
    EXPECT_EQ(mul(x_monomial(a), x_monomial(b)), mul(x_monomial(b), x_monomial(a)));
  }
}

TEST(Bernstein, CutoffRefusesLongTranslations) {
  EXPECT_THROW(x_monomial({3, -3}, 4), CutoffExceeded);
  EXPECT_NO_THROW(x_monomial({1, 0}, 4));
  EXPECT_THROW(x_generator(3, 1, 3, 2), CutoffExceeded);
}
