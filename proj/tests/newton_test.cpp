#include <gtest/gtest.h>

#include <random>

#include "orebasis/newton.hpp"

using namespace orebasis;

namespace {

IntPoly quartic(long a, long b, long c) { return IntPoly{c, b, a, 0, 1}; }
const IntPoly X{0, 1};

std::vector<Rational> Q(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> r;
  for (auto [n, d] : v) {
    Rational q(n, d);
    q.canonicalize();
    r.push_back(q);
  }
  return r;
}

}  // namespace

TEST(PhiExpand, Examples) {
  auto e = phi_expand(quartic(0, 0, -2), X);
  ASSERT_EQ(e.coefficients.size(), 5u);
  EXPECT_EQ(e.coefficients[0], IntPoly{-2});
  EXPECT_TRUE(e.coefficients[1].is_zero());
  EXPECT_EQ(e.coefficients[4], IntPoly{1});
  EXPECT_EQ(e.quotients[1], (IntPoly{0, 0, 0, 1}));
  EXPECT_EQ(e.quotients[4], IntPoly{1});

  auto e2 = phi_expand(quartic(1, 0, 50), X);
  EXPECT_EQ(e2.coefficients[0], IntPoly{50});
  EXPECT_EQ(e2.quotients[1], (IntPoly{0, 1, 0, 1}));

  auto e3 = phi_expand(quartic(2, 0, 4), IntPoly{0, 0, 1});
  ASSERT_EQ(e3.coefficients.size(), 3u);
  EXPECT_EQ(e3.coefficients[0], IntPoly{4});
  EXPECT_EQ(e3.coefficients[1], IntPoly{2});
  EXPECT_EQ(e3.coefficients[2], IntPoly{1});
  EXPECT_EQ(e3.quotients[1], (IntPoly{2, 0, 1}));
}

TEST(PhiExpand, Reconstruction) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> fc(7), pc(3);
    for (int i = 0; i < 6; ++i) fc[i] = dist(rng);
    fc[6] = 1;
    for (int i = 0; i < 2; ++i) pc[i] = dist(rng);
    pc[2] = 1;
    IntPoly f(fc), phi(pc);
    auto e = phi_expand(f, phi);
    IntPoly sum;
    for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
      EXPECT_LT(e.coefficients[i].degree(), phi.degree());
      sum += e.coefficients[i] * phi.pow(i);
    }
    EXPECT_EQ(sum, f);
    for (std::size_t j = 1; j < e.quotients.size(); ++j) {
      EXPECT_EQ(e.residues[j] + e.quotients[j] * phi.pow(j), f);
      EXPECT_LT(e.residues[j].degree(), static_cast<int>(j) * phi.degree());
    }
  }
}

TEST(NewtonPolygon, Examples) {
  Prime two(2);
  auto N1 = newton_polygon(phi_expand(quartic(0, 0, -2), X), two);
  ASSERT_EQ(N1.sides.size(), 1u);
  EXPECT_EQ(N1.sides[0].slope, Rational(-1, 4));
  EXPECT_EQ(N1.sides[0].length, 4);
  EXPECT_EQ(N1.sides[0].degree, 1);
  EXPECT_EQ(N1.sides[0].ramification, 4);

  auto N2 = newton_polygon(phi_expand(quartic(2, 0, 4), X), two);
  ASSERT_EQ(N2.sides.size(), 1u);
  EXPECT_EQ(N2.vertices.size(), 2u);
  EXPECT_EQ(N2.sides[0].slope, Rational(-1, 2));
  EXPECT_EQ(N2.sides[0].degree, 2);
  EXPECT_EQ(N2.sides[0].ramification, 2);

  auto N3 = newton_polygon(phi_expand(quartic(0, 2, 4), X), two);
  ASSERT_EQ(N3.sides.size(), 2u);
  EXPECT_EQ(N3.sides[0].slope, Rational(-1));
  EXPECT_EQ(N3.sides[1].slope, Rational(-1, 3));
}

TEST(NewtonPolygon, PrincipalPart) {
  auto N = principal_part(newton_polygon(phi_expand(quartic(1, 0, 50), X), Prime(5)));
  ASSERT_EQ(N.sides.size(), 1u);
  EXPECT_EQ(N.end(), 2);
  EXPECT_EQ(N.sides[0].slope, -1);

  auto N2 = principal_part(newton_polygon(phi_expand(quartic(0, 0, -2), X), Prime(2)));
  EXPECT_EQ(N2.end(), 4);

  auto N3 = principal_part(newton_polygon(phi_expand(quartic(1, 1, 1), X), Prime(2)));
  EXPECT_TRUE(N3.sides.empty());
  EXPECT_EQ(N3.length, 0);
}

TEST(NewtonPolygon, Ordinates) {
  auto y1 = ordinates(principal_part(newton_polygon(phi_expand(quartic(0, 0, -2), X), Prime(2))));
  EXPECT_EQ(y1, Q({{1, 1}, {3, 4}, {1, 2}, {1, 4}, {0, 1}}));
  auto y2 = ordinates(principal_part(newton_polygon(phi_expand(quartic(2, 0, 4), X), Prime(2))));
  EXPECT_EQ(y2, Q({{2, 1}, {3, 2}, {1, 1}, {1, 2}, {0, 1}}));
  auto y3 = ordinates(principal_part(newton_polygon(phi_expand(quartic(1, 0, 50), X), Prime(5))));
  EXPECT_EQ(y3, Q({{2, 1}, {1, 1}, {0, 1}}));
}

TEST(NewtonPolygon, PhiIndex) {
  EXPECT_EQ(phi_index(quartic(0, 0, -2), X, Prime(2)), 0);
  EXPECT_EQ(phi_index(quartic(2, 0, 4), X, Prime(2)), 2);
  EXPECT_EQ(phi_index(quartic(1, 0, 50), X, Prime(5)), 1);
}

TEST(Residual, Coefficients) {
  {
    auto e = phi_expand(quartic(1, 0, 50), X);
    auto P = principal_part(newton_polygon(e, Prime(5)));
    FiniteField F(Prime(5), X);
    auto c = residual_coefficients(P, e, F);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], F.from_integer(2));
    EXPECT_EQ(c[1], F.zero());
    EXPECT_EQ(c[2], F.one());
    EXPECT_EQ(residual_polynomial(P.sides[0], c), (FqPoly{F.from_integer(2), F.zero(), F.one()}));
  }
  {
    auto e = phi_expand(quartic(2, 0, 4), X);
    auto P = principal_part(newton_polygon(e, Prime(2)));
    FiniteField F(Prime(2), X);
    auto c = residual_coefficients(P, e, F);
    EXPECT_EQ(c[0], F.one());
    EXPECT_EQ(c[2], F.one());
    EXPECT_EQ(c[4], F.one());
    EXPECT_EQ(residual_polynomial(P.sides[0], c), (FqPoly{F.one(), F.one(), F.one()}));
  }
  {
    // (1, u_1 = 3) lies strictly above the side from (0,2) to (2,0).
    auto e = phi_expand(IntPoly{4, 8, 1}, X);
    auto P = principal_part(newton_polygon(e, Prime(2)));
    FiniteField F(Prime(2), X);
    EXPECT_EQ(residual_coefficients(P, e, F)[1], F.zero());
  }
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_phi_regular(quartic(2, 0, 4), X, Prime(2)).regular);
  EXPECT_TRUE(is_phi_regular(quartic(1, 0, 50), X, Prime(5)).regular);
  auto r = is_phi_regular(quartic(4, 0, 4), X, Prime(2));
  ASSERT_FALSE(r.regular);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->side.slope, Rational(-1, 2));
  EXPECT_EQ(r.witness->multiplicity, 2u);
  FiniteField F(Prime(2), X);
  EXPECT_EQ(r.witness->factor, (FqPoly{F.one(), F.one()}));

  EXPECT_TRUE(is_p_regular(quartic(2, 0, 4), Prime(2)).regular);
  EXPECT_FALSE(is_p_regular(quartic(4, 0, 4), Prime(2)).regular);
  EXPECT_TRUE(is_p_regular(quartic(0, 1, 1), Prime(2)).regular);
}

TEST(Serialization, JsonAndSvg) {
  auto N = newton_polygon(phi_expand(quartic(0, 2, 4), X), Prime(2));
  auto j = polygon_to_json(N);
  EXPECT_EQ(j["sides"][0]["slope"], "-1/1");
  EXPECT_EQ(j["sides"][1]["slope"], "-1/3");
  EXPECT_EQ(j["sides"][1]["length"], 3);
  EXPECT_TRUE(j["points"][2][1].is_null());
  std::string svg = polygon_to_svg(N);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
}
