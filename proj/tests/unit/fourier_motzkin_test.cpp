#include "regionbound/fourier_motzkin.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "support/generators.hpp"

namespace regionbound {
namespace {

bool strictly_inside(const Point2& p, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) {
    if (sgn(h.a * p.x + h.b * p.y + h.c) <= 0) return false;
  }
  return true;
}

TEST(FourierMotzkin, EmptySystemIsFeasible) {
  auto p = strict_feasible_point({});
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Point2{0, 0}));
}

TEST(FourierMotzkin, Triangle) {
  const std::vector<HalfPlane> hs = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}};
  auto p = strict_feasible_point(hs);
  ASSERT_TRUE(p);
  EXPECT_TRUE(strictly_inside(*p, hs));
}

TEST(FourierMotzkin, OpenStripOfZeroWidthIsInfeasible) {
  // x > 0 and x < 0 share only the boundary line.
  EXPECT_FALSE(strict_feasible_point(std::vector<HalfPlane>{{1, 0, 0}, {-1, 0, 0}}));
  // y > x and y < x.
  EXPECT_FALSE(strict_feasible_point(std::vector<HalfPlane>{{-1, 1, 0}, {1, -1, 0}}));
}

TEST(FourierMotzkin, ConstantConstraints) {
  EXPECT_TRUE(strict_feasible_point(std::vector<HalfPlane>{{0, 0, 1}}));
  EXPECT_FALSE(strict_feasible_point(std::vector<HalfPlane>{{0, 0, 0}}));
  EXPECT_FALSE(strict_feasible_point(std::vector<HalfPlane>{{0, 0, -2}}));
}

TEST(FourierMotzkin, OneDimensional) {
  const std::vector<Rational> alpha{1, -1};
  const std::vector<Rational> beta{-1, 3};
  auto x = strict_feasible_point_1d(alpha, beta);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, 2);
  const std::vector<Rational> beta_empty{-3, 3};
  EXPECT_FALSE(strict_feasible_point_1d(alpha, beta_empty));
}

// A grid point strictly inside proves feasibility; a witness must be interior.
TEST(FourierMotzkin, AgreesWithGridSearch) {
  testing::for_all(300, 31, [](testing::Gen& g) {
    std::vector<HalfPlane> hs;
    const int n = g.uniform(1, 6);
    for (int i = 0; i < n; ++i) {
      hs.push_back({g.rational(4, 3), g.rational(4, 3), g.rational(9, 3)});
    }
    bool grid_hit = false;
    for (int xi = -40; xi <= 40 && !grid_hit; ++xi) {
      for (int yi = -40; yi <= 40 && !grid_hit; ++yi) {
        grid_hit = strictly_inside(Point2{testing::rational(xi, 4), testing::rational(yi, 4)}, hs);
      }
    }
    auto p = strict_feasible_point(hs);
    if (grid_hit) EXPECT_TRUE(p);
    if (p) EXPECT_TRUE(strictly_inside(*p, hs));
  });
}

}  // namespace
}  // namespace regionbound
