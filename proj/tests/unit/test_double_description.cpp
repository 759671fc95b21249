#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qlogic/double_description.hpp"

using namespace qlogic;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(DoubleDescription, PositiveOrthant) {
  ConeSystem s{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {}};
  const auto g = double_description(s);
  EXPECT_TRUE(g.lineality.empty());
  EXPECT_EQ(sorted(g.rays), sorted({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}));
}

TEST(DoubleDescription, SquareCone) {
  // cone over the square [-1,1]^2 at height t
  ConeSystem s{3, {iv({1, 1, 0}), iv({1, -1, 0}), iv({1, 0, 1}), iv({1, 0, -1})}, {}};
  const auto g = double_description(s);
  EXPECT_EQ(sorted(g.rays), sorted({iv({1, 1, 1}), iv({1, 1, -1}), iv({1, -1, 1}), iv({1, -1, -1})}));
}

TEST(DoubleDescription, LinealityAndEqualities) {
  // y0 >= 0 in R^3: halfspace with a 2-dimensional lineality space
  ConeSystem half{3, {iv({1, 0, 0})}, {}};
  const auto g = double_description(half);
  EXPECT_EQ(g.rays.size(), 1u);
  EXPECT_EQ(g.lineality.size(), 2u);
  EXPECT_EQ(g.rays[0], iv({1, 0, 0}));

  // y >= 0, y0 + y1 + y2 = 0  ->  only the origin
  ConeSystem point{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {iv({1, 1, 1})}};
  const auto p = double_description(point);
  EXPECT_TRUE(p.rays.empty());
  EXPECT_TRUE(p.lineality.empty());

  // y >= 0, y0 = y1
  ConeSystem wedge{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {iv({1, -1, 0})}};
  EXPECT_EQ(sorted(double_description(wedge).rays), sorted({iv({1, 1, 0}), iv({0, 0, 1})}));
}

TEST(DoubleDescription, RedundantRowsIgnored) {
  ConeSystem s{2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({2, 1}), iv({1, 0})}, {}};
  EXPECT_EQ(sorted(double_description(s).rays), sorted({iv({1, 0}), iv({0, 1})}));
}

TEST(DoubleDescription, CrossPolytopeConeHasCubeCount) {
  // the 8 facets of the 3-dimensional cross-polytope, homogenized; the
  // cone's rays are its 6 vertices
  ConeSystem s{4, {}, {}};
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) s.inequalities.push_back(iv({1, a, b, c}));
  const auto g = double_description(s);
  EXPECT_EQ(g.rays.size(), 6u);
}

TEST(DoubleDescription, RaysSatisfyEveryRow) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 3;
    ConeSystem s{n, {}, {}};
    IntVector anchor(n, 0);
    anchor[0] = 1;
    // rows with positive first entry keep (1,0,..,0) strictly inside
    for (int r = 0; r < 8; ++r) {
      IntVector row(n);
      row[0] = 4;
      for (std::size_t c = 1; c < n; ++c) row[c] = static_cast<long>(rng() % 7) - 3;
      s.inequalities.push_back(row);
    }
    const auto g = double_description(s);
    ASSERT_FALSE(g.rays.empty());
    for (const auto& ray : g.rays) {
      std::size_t tight = 0;
      std::vector<RatVector> tight_rows;
      for (const auto& row : s.inequalities) {
        Integer d = 0;
        for (std::size_t c = 0; c < n; ++c) d += row[c] * ray[c];
        EXPECT_GE(sgn(d), 0);
        if (sgn(d) == 0) {
          ++tight;
          tight_rows.push_back(to_rational(row));
        }
      }
      // extreme: the tight rows pin the ray down to a line
      EXPECT_EQ(oracle::rank(tight_rows), n - 1);
    }
  }
}

TEST(DoubleDescription, RayLimit) {
  ConeSystem s{4, {}, {}};
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) s.inequalities.push_back(iv({1, a, b, c}));
  EXPECT_THROW(double_description(s, {3}), RayLimitExceeded);
}
