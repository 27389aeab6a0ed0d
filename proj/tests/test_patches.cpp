#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace patchideal;
using testing_support::binomial;

namespace {

Polynomial P(const GeneratorSet& G, const std::string& text) { return parse_polynomial(G.chart.ring(), text); }

bool has_up_to_sign(const GeneratorSet& G, const Polynomial& p) {
  Polynomial q = p.normalized();
  return std::any_of(G.gens.begin(), G.gens.end(), [&](const Generator& g) { return g.poly == q || g.poly == -q; });
}

std::vector<std::pair<Permutation, Permutation>> parabolic_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  auto ps = enumerate_parabolics(n);
  for (const auto& q : ps)
    for (const auto& p : ps)
      if (bruhat_leq(q.w, p.w)) out.emplace_back(q.w, p.w);
  return out;
}

TEST(Chart, FreePositions) {
  auto fp = make_chart(Permutation::parse("2143")).free_positions();
  std::set<std::pair<int, int>> got(fp.begin(), fp.end());
  std::set<std::pair<int, int>> want{{1, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {3, 3}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(make_chart(Permutation::parse("12")).free_positions(), (std::vector<std::pair<int, int>>{{2, 1}}));
  auto w0 = make_chart(Permutation::parse("321")).free_positions();
  std::set<std::pair<int, int>> w0set(w0.begin(), w0.end());
  EXPECT_EQ(w0set, (std::set<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_parabolics(n))
      EXPECT_EQ(static_cast<long>(make_chart(p.w).free_positions().size()), binomial(n, 2));
}

TEST(Alpha, WorkedExample2143) {
  PatchChart chart(Permutation::parse("2143"));
  auto a = alpha_table(chart, HessenbergSpec::peterson(4));
  const auto& R = chart.ring();
  EXPECT_EQ(a.at(1, 1), parse_polynomial(R, "z[3][1]"));
  EXPECT_EQ(a.at(1, 2), parse_polynomial(R, "1 - z[3][1]*z[1][1]"));
  EXPECT_EQ(a.at(2, 1), parse_polynomial(R, "z[3][2]"));
  EXPECT_EQ(a.at(2, 2), parse_polynomial(R, "-z[3][2]*z[1][1]"));
  EXPECT_EQ(a.at(2, 3), parse_polynomial(R, "-z[4][1]*z[3][2] + z[4][2]*z[3][2]*z[1][1]"));
}

TEST(Alpha, IdentityChartByHand) {
  PatchChart chart(Permutation::parse("123"));
  auto a = alpha_table(chart, HessenbergSpec::peterson(3));
  EXPECT_EQ(a.at(1, 1), parse_polynomial(chart.ring(), "z[2][1]"));
  EXPECT_EQ(a.at(1, 2), parse_polynomial(chart.ring(), "z[3][1] - z[2][1]^2"));
}

TEST(Peterson, WorkedExample2143) {
  auto G = peterson_generators(Permutation::parse("2143"));
  ASSERT_EQ(G.size(), 3u);
  for (const char* text : {"z[4][1] - z[3][2] - z[3][1]^2 + z[3][1]*z[3][2]*z[1][1]",
                           "z[4][1]*z[3][1] + z[4][2] - z[4][2]*z[3][1]*z[1][1]",
                           "z[4][2] - z[3][1]*z[3][2] + z[3][2]^2*z[1][1] + z[4][1]*z[3][2]*z[3][3] - "
                           "z[4][2]*z[3][2]*z[3][3]*z[1][1]"})
    EXPECT_TRUE(has_up_to_sign(G, P(G, text))) << text;
}

TEST(Peterson, Pet3AtIdentity) {
  auto G = peterson_generators(Permutation::parse("123"));
  ASSERT_EQ(G.size(), 1u);
  EXPECT_TRUE(has_up_to_sign(G, P(G, "z[2][1]*z[3][1] + z[3][1]*z[3][2] - z[2][1]^2*z[3][2]")));
}

TEST(Peterson, SmallCasesAndErrors) {
  EXPECT_EQ(peterson_generators(Permutation::parse("12")).size(), 0u);
  EXPECT_EQ(peterson_generators(Permutation::parse("21")).size(), 0u);
  try {
    peterson_generators(Permutation::parse("1342"));
    FAIL() << "expected precondition_error";
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("not a parabolic"), std::string::npos);
  }
}

TEST(Peterson, GeneratorCountIsCodimension) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_parabolics(n))
      EXPECT_EQ(static_cast<long>(peterson_generators(p.w).size()), binomial(n - 1, 2)) << p.w.str();
}

TEST(Peterson, AlphaLocality) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_parabolics(n)) {
      PatchChart chart(p.w);
      auto a = alpha_table(chart, HessenbergSpec::peterson(n));
      for (int j = 1; j <= n; ++j)
        for (std::size_t l = 0; l < a.values[static_cast<std::size_t>(j - 1)].size(); ++l)
          for (const auto& t : a.values[static_cast<std::size_t>(j - 1)][l].terms())
            for (std::uint64_t s = t.mono.support(); s; s &= s - 1)
              EXPECT_LE(chart.ring()->var(static_cast<std::size_t>(__builtin_ctzll(s))).col, j) << p.w.str();
    }
}

TEST(Peterson, AlphaSolvesTheSolvedRows) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_parabolics(n)) {
      PatchChart chart(p.w);
      auto a = alpha_table(chart, HessenbergSpec::peterson(n));
      for (int j = 1; j <= n - 2; ++j)
        for (int m = 1; m <= j + 1; ++m) {
          int k = p.w(m);
          // Row k of N Z_j - sum_l alpha_{j,l} Z_l, with (N Z_j)_k = z_{k+1,j}.
          Polynomial f = chart.entry(k + 1, j);
          for (int l = 1; l <= j + 1; ++l) f -= a.at(j, l) * chart.entry(k, l);
          EXPECT_TRUE(f.is_zero()) << p.w.str() << " j=" << j << " k=" << k;
        }
    }
}

TEST(Peterson, GeneratorsAreHomogeneousOfExpectedDegree) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : enumerate_parabolics(n)) {
      auto G = peterson_generators(p.w);
      Grading g = coarse_grading(G.chart);
      for (const auto& gen : G.gens) {
        auto d = grade_degree(gen.poly, g);
        ASSERT_TRUE(d) << p.w.str() << " " << gen.tag.str();
        EXPECT_EQ(d->front(), gen.tag.k + 1 - p.w(gen.tag.j)) << p.w.str() << " " << gen.tag.str();
        EXPECT_NE(d->front(), 0);
      }
    }
}

TEST(Recenter, IdentityAndInverse) {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_parabolics(n)) {
      auto G = peterson_generators(p.w);
      auto same = recenter(G, GroupPoint::identity(p.composition));
      EXPECT_EQ(same.polys(), G.polys());
      std::vector<Rational> flat;
      for (int k = 0; k < n - static_cast<int>(p.composition.size()); ++k)
        flat.push_back(testing_support::small_rational(rng));
      GroupPoint b = GroupPoint::from_flat(p.composition, flat);
      auto moved = recenter(G, b);
      ASSERT_EQ(moved.size(), G.size());
      for (std::size_t k = 0; k < G.size(); ++k) EXPECT_EQ(moved.gens[k].poly.total_degree(), G.gens[k].poly.total_degree());
      EXPECT_EQ(recenter(moved, b.inverse()).polys(), G.polys()) << p.w.str() << " " << b.str();
      bool small = std::all_of(p.composition.parts().begin(), p.composition.parts().end(), [](int s) { return s <= 2; });
      if (small) {
        std::vector<Rational> neg;
        for (const auto& v : flat) neg.push_back(-v);
        EXPECT_EQ(recenter(moved, GroupPoint::from_flat(p.composition, neg)).polys(), G.polys());
      }
    }
}

TEST(Recenter, OriginStaysOnTheVariety) {
  auto G = peterson_generators(Permutation::parse("213"));
  auto moved = recenter(G, GroupPoint::from_flat(Composition::parse("2,1"), {Rational(1)}));
  ASSERT_EQ(moved.size(), 1u);
  std::vector<Rational> zero(G.chart.ring()->size(), 0);
  EXPECT_EQ(moved.gens[0].poly.evaluate(zero), 0);
  EXPECT_TRUE(moved.gens[0].tag.recentered);
  EXPECT_THROW(recenter(G, GroupPoint::identity(Composition::parse("1,2"))), precondition_error);
}

TEST(Richardson, VacuousAndPointCases) {
  for (const auto& w : {"123", "213", "231", "321"})
    EXPECT_EQ(richardson_generators(Permutation::parse(w), Permutation::parse("321"), Permutation::parse("123")).size(), 0u);
  auto G = richardson_generators(Permutation::parse("12"), Permutation::parse("12"), Permutation::parse("12"));
  ASSERT_FALSE(G.gens.empty());
  EXPECT_TRUE(same_ideal(G.ideal(), Ideal(G.chart.ring(), {var(G.chart.ring(), 2, 1)})));
  EXPECT_THROW(richardson_generators(Permutation::parse("123"), Permutation::parse("321"), Permutation::parse("132")),
               precondition_error);
}

TEST(Richardson, DimensionIsLengthDifference) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> perms;
    do perms.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    int checked = 0;
    for (const auto& u : perms)
      for (const auto& v : perms) {
        if (!bruhat_leq(v, u)) continue;
        for (const auto& x : perms) {
          if (!bruhat_leq(v, x) || !bruhat_leq(x, u)) continue;
          auto G = richardson_generators(x, u, v);
          EXPECT_EQ(krull_dimension(G.ideal()), std::optional<std::size_t>(u.length() - v.length()))
              << x.str() << " " << u.str() << " " << v.str();
          EXPECT_TRUE(same_ideal(G.ideal(), richardson_generators(x, u, v, {true}).ideal()));
          ++checked;
        }
      }
    EXPECT_GT(checked, 0);
  }
  auto G = richardson_generators(Permutation::parse("132"), Permutation::parse("321"), Permutation::parse("132"));
  EXPECT_EQ(krull_dimension(G.ideal()), std::optional<std::size_t>(2));
}

TEST(PetersonSchubert, TopStratumIsPeterson) {
  for (int n = 2; n <= 5; ++n) {
    Permutation w0 = Permutation::longest(n);
    EXPECT_EQ(peterson_schubert_generators(w0, w0).polys(), peterson_generators(w0).polys());
  }
  auto G = peterson_schubert_generators(Permutation::parse("2143"), Permutation::parse("2143"));
  EXPECT_EQ(krull_dimension(G.ideal()), std::optional<std::size_t>(2));
  EXPECT_THROW(peterson_schubert_generators(Permutation::parse("3214"), Permutation::parse("2143")), precondition_error);
  EXPECT_THROW(peterson_schubert_generators(Permutation::parse("1243"), Permutation::parse("1342")), precondition_error);
}

TEST(PetersonSchubert, BlockPresentationGeneratesTheSameIdeal) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& [q, p] : parabolic_pairs(n)) {
      auto A = peterson_schubert_generators(q, p);
      auto B = peterson_schubert_block_generators(q, p);
      EXPECT_TRUE(same_ideal(A.ideal(), B.ideal())) << q.str() << " " << p.str();
      EXPECT_EQ(krull_dimension(A.ideal()), std::optional<std::size_t>(n - composition_of(p)->size()))
          << q.str() << " " << p.str();
    }
}

TEST(Hessenberg, PetersonSpecMatchesPeterson) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_parabolics(n)) {
      auto H = hessenberg_generators(HessenbergSpec::peterson(n), p.w);
      EXPECT_EQ(H.polys(), peterson_generators(p.w).polys());
      EXPECT_FALSE(H.setTheoretic);
    }
}

TEST(Hessenberg, SpringerFiberTwoLines) {
  // Jordan type (2,1), h(i) = i: near 132 the fiber is two lines through the origin.
  HessenbergSpec spec{nilpotent_of_jordan_type({2, 1}), {1, 2, 3}};
  auto G = hessenberg_generators(spec, Permutation::parse("132"));
  EXPECT_TRUE(G.setTheoretic);
  Ideal I = G.ideal();
  const auto& R = G.chart.ring();
  EXPECT_EQ(krull_dimension(I), std::optional<std::size_t>(1));
  // Points of z21 = z22 = 0 and z21 = z31 = 0 lie on it; a generic point does not.
  std::size_t i22 = R->index(VarId::z(2, 2)), i31 = R->index(VarId::z(3, 1));
  for (int a = -3; a <= 3; ++a) {
    std::vector<Rational> p1(R->size(), 0), p2(R->size(), 0);
    p1[i31] = a;
    p2[i22] = a;
    for (const auto& g : G.gens) {
      EXPECT_EQ(g.poly.evaluate(p1), 0);
      EXPECT_EQ(g.poly.evaluate(p2), 0);
    }
  }
  std::vector<Rational> off(R->size(), 0);
  off[i22] = 1;
  off[i31] = 1;
  EXPECT_TRUE(std::any_of(G.gens.begin(), G.gens.end(), [&](const Generator& g) { return g.poly.evaluate(off) != 0; }));
  Polynomial z21 = var(R, 2, 1);
  EXPECT_FALSE(I.contains(z21));
  EXPECT_TRUE(I.contains(z21 * z21));
}

TEST(Hessenberg, ValidationAndMembership) {
  HessenbergSpec bad{regular_nilpotent(3), {2, 1, 3}};
  EXPECT_THROW(bad.validate(), precondition_error);
  HessenbergSpec small{regular_nilpotent(3), {1, 1, 3}};
  EXPECT_THROW(small.validate(), precondition_error);
  HessenbergSpec shape{regular_nilpotent(3), {2, 3}};
  EXPECT_THROW(shape.validate(), std::invalid_argument);
  // The lowered Hessenberg function misses the longest element.
  HessenbergSpec h1{regular_nilpotent(4), {1, 3, 4, 4}};
  EXPECT_TRUE(hessenberg_membership_failure(h1, Permutation::longest(4)));
  EXPECT_THROW(hessenberg_generators(h1, Permutation::longest(4)), precondition_error);
  EXPECT_FALSE(hessenberg_membership_failure(h1, Permutation::parse("1234")));
  // A zero matrix puts every flag on the variety.
  HessenbergSpec zero{RationalMatrix(3, std::vector<Rational>(3, 0)), {1, 2, 3}};
  EXPECT_EQ(hessenberg_generators(zero, Permutation::parse("231")).size(), 0u);
}

}  // namespace
