#include <gtest/gtest.h>

#include "support.hpp"

using namespace patchideal;
using testing_support::random_point;
using testing_support::random_poly;

namespace {

RingPtr ring4() { return testing_support::lower_ring(4); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Ring, ColumnFirstOrderWithTLast) {
  auto R = make_ring({{3, 2}, {2, 1}, {4, 1}, {3, 1}});
  ASSERT_EQ(R->chart_size(), 4u);
  EXPECT_EQ(R->var(0).name(), "z[2][1]");
  EXPECT_EQ(R->var(1).name(), "z[3][1]");
  EXPECT_EQ(R->var(2).name(), "z[4][1]");
  EXPECT_EQ(R->var(3).name(), "z[3][2]");
  EXPECT_EQ(R->homog_index(), 4u);
  EXPECT_THROW(R->index(VarId::z(1, 1)), chart_mismatch_error);
  EXPECT_THROW(make_ring({{2, 1}, {2, 1}}), std::invalid_argument);
}

TEST(Polynomial, TextRoundTrip) {
  auto R = ring4();
  for (std::string text : {"-1/2*z[3][1]^2*z[2][1] + z[4][1]", "z[3][2]*z[3][1]*z[2][1] - z[3][1]^2 - z[3][2] + z[4][1]",
                           "3", "0", "-z[4][3]^3"}) {
    Polynomial p = parse_polynomial(R, text);
    EXPECT_EQ(p.str(), text);
    EXPECT_EQ(parse_polynomial(R, p.str()), p);
  }
  EXPECT_THROW(parse_polynomial(R, "z[1][2]"), chart_mismatch_error);
  EXPECT_THROW(parse_polynomial(R, "z[2][1] +"), std::invalid_argument);
}

TEST(Polynomial, DefaultOrderListsLargestFirst) {
  auto R = ring4();
  Polynomial p = var(R, 2, 1) + var(R, 3, 1).pow(2) + var(R, 4, 3) * var(R, 2, 1);
  // Degree first; among equal degree, more of the smallest variable z21 is smaller.
  EXPECT_EQ(p.str(), "z[3][1]^2 + z[4][3]*z[2][1] + z[2][1]");
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  auto R = ring4();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  auto R = ring4();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(R, rng), b = random_poly(R, rng);
    auto pt = random_point(R, rng);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
    EXPECT_EQ(a.pow(3).evaluate(pt), a.evaluate(pt) * a.evaluate(pt) * a.evaluate(pt));
  }
}

TEST(Polynomial, SubstitutionIsAHomomorphism) {
  auto R = ring4();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<VarId, Polynomial> sub;
    sub.emplace(VarId::z(2, 1), var(R, 2, 1) + var(R, 3, 1) * var(R, 3, 2));
    sub.emplace(VarId::z(4, 3), random_poly(R, rng, 3, 2));
    Polynomial a = random_poly(R, rng), b = random_poly(R, rng);
    EXPECT_EQ(substitute_affine(a * b, sub), substitute_affine(a, sub) * substitute_affine(b, sub));
    EXPECT_EQ(substitute_affine(a + b, sub), substitute_affine(a, sub) + substitute_affine(b, sub));
  }
}

TEST(Polynomial, DerivativeObeysLeibniz) {
  auto R = ring4();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = random_poly(R, rng), b = random_poly(R, rng);
    std::size_t v = rng() % R->chart_size();
    EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
  }
  Polynomial p = parse_polynomial(R, "z[3][1]^3*z[2][1] - 2*z[3][1]");
  EXPECT_EQ(p.derivative(R->index(VarId::z(3, 1))).str(), "3*z[3][1]^2*z[2][1] - 2");
}

TEST(Polynomial, HomogenizeAndLowestForm) {
  auto R = ring4();
  Polynomial p = parse_polynomial(R, "z[3][2]*z[3][1]*z[2][1] - z[3][1]^2 - z[3][2] + z[4][1]");
  Polynomial h = p.homogenize();
  EXPECT_EQ(h.str(), "z[3][2]*z[3][1]*z[2][1] - z[3][1]^2*t - z[3][2]*t^2 + z[4][1]*t^2");
  EXPECT_EQ(h.dehomogenize(), p);
  EXPECT_EQ(p.lowest_form().str(), "-z[3][2] + z[4][1]");
  EXPECT_THROW(Polynomial(R).lowest_form(), degenerate_input_error);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = random_poly(R, rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a.homogenize().dehomogenize(), a);
    EXPECT_EQ(a.lowest_form().total_degree(), a.lowest_form().terms().back().mono.degree());
  }
}

TEST(Polynomial, NormalizationIsContentFreeWithPositiveLead) {
  auto R = ring4();
  Polynomial p = parse_polynomial(R, "-3/2*z[3][1]^2 + 9/4*z[2][1]");
  Polynomial q = p.normalized();
  EXPECT_EQ(q.str(), "2*z[3][1]^2 - 3*z[2][1]");
  EXPECT_EQ(q.normalized(), q);
  EXPECT_EQ(p.monic().leading().coef, 1);
}

TEST(TermOrder, MultiplicativeAndTotal) {
  auto R = ring4();
  std::vector<std::int64_t> w(R->size(), 0);
  for (std::size_t k = 0; k < R->chart_size(); ++k) w[k] = static_cast<std::int64_t>(k % 3) + 1;
  std::vector<TermOrder> orders{TermOrder::lex(*R), TermOrder::grevlex(*R), TermOrder::t_first(*R),
                                TermOrder::weighted(*R, w)};
  std::mt19937_64 rng(23);
  auto random_mono = [&] {
    Monomial m;
    for (int e = 0; e < 4; ++e) {
      std::size_t v = rng() % R->size();
      m.set(v, m[v] + 1);
    }
    return m;
  };
  for (const auto& ord : orders)
    for (int trial = 0; trial < 500; ++trial) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      int ab = ord.compare(a, b);
      EXPECT_EQ(ab, -ord.compare(b, a)) << ord.name();
      EXPECT_EQ(ab == 0, a == b) << ord.name();
      EXPECT_EQ(ord.compare(a * c, b * c), ab) << ord.name();
      EXPECT_GE(ord.compare(a, Monomial{}), 0) << ord.name();
    }
  EXPECT_THROW(TermOrder::weighted(*R, std::vector<std::int64_t>(R->size(), 0)), std::invalid_argument);
}

TEST(TermOrder, TFirstPrefersHighPowersOfT) {
  auto R = ring4();
  TermOrder o = TermOrder::t_first(*R);
  Polynomial hi = var(R, 2, 1) * homog_var(R).pow(2);
  Polynomial lo = var(R, 2, 1).pow(3);
  EXPECT_GT(o.compare(hi.leading().mono, lo.leading().mono), 0);
  EXPECT_EQ(o.name(), "tFirstThenGrevlex");
}

TEST(Univariate, IntPolyBasics) {
  IntPoly p{1, 2, 1};
  EXPECT_EQ(p.at_one(), 4);
  EXPECT_EQ(p.str(), "1 + 2*eta + eta^2");
  EXPECT_EQ((IntPoly{1, 1} * IntPoly{1, 1}), p);
  auto q = (IntPoly::one_minus_power(1) * p).divide_one_minus_eta();
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, p);
  EXPECT_FALSE(p.divide_one_minus_eta());
  EXPECT_EQ(IntPoly{-1}.str(), "-1");
}

TEST(Univariate, LaurentFactorsExpand) {
  // (1 - chi^3)^2 (1 - chi^4), expanded by hand.
  LaurentPoly k = expand_factors({3, 3, 4});
  LaurentPoly expect(std::map<int, std::int64_t>{{0, 1}, {3, -2}, {4, -1}, {6, 1}, {7, 2}, {10, -1}});
  EXPECT_EQ(k, expect);
  EXPECT_EQ(expand_factors({}), LaurentPoly::one());
  EXPECT_EQ(expand_factors({-1}), LaurentPoly(std::map<int, std::int64_t>{{0, 1}, {-1, -1}}));
}

TEST(Grading, DegreesAndHomogeneity) {
  auto R = ring4();
  std::vector<WeightVector> w;
  for (const auto& v : R->vars())
    if (v.kind == VarId::Kind::chart) w.push_back({v.row - v.col});
  Grading g(R, 1, w);
  auto d = grade_degree(parse_polynomial(R, "z[3][1]*z[2][1] + z[4][1]*z[2][1] - z[3][2]^3"), g);
  EXPECT_FALSE(d);
  auto e = grade_degree(parse_polynomial(R, "z[3][1] + z[2][1]^2 - z[4][3]*z[3][2]"), g);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->front(), 2);
  EXPECT_THROW(grade_degree(Polynomial(R), g), degenerate_input_error);
}

}  // namespace
