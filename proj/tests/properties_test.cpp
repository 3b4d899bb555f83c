#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "monoalg/properties.hpp"
#include "monoalg/sweep.hpp"
#include "oracles.hpp"

using namespace monoalg;

namespace {

AffineSemigroup buchsbaum3d() {
  return AffineSemigroup::validate(
      {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 0, 3}, {0, 2, 2}, {3, 0, 1}, {1, 2, 1}});
}

AffineSemigroup numerical(std::initializer_list<std::int64_t> gens) {
  std::vector<Point> pts;
  for (auto g : gens) pts.push_back({g});
  return AffineSemigroup::validate(pts);
}

std::vector<oracle::Vec> as_vecs(const std::vector<Point>& pts) {
  std::vector<oracle::Vec> out;
  for (const auto& p : pts) out.emplace_back(p.begin(), p.end());
  return out;
}

void expect_chain(const PropertyReport& r) {
  if (r.normal.holds) EXPECT_TRUE(r.seminormal.holds);
  if (r.normal.holds) EXPECT_TRUE(r.cohen_macaulay.holds);
  if (r.gorenstein.holds) EXPECT_TRUE(r.cohen_macaulay.holds);
  if (r.cohen_macaulay.holds) EXPECT_TRUE(r.buchsbaum.holds);
}

}  // namespace

TEST(Properties, Buchsbaum3d) {
  const auto r = full_report(buchsbaum3d());
  EXPECT_FALSE(r.seminormal.holds);
  EXPECT_FALSE(r.normal.holds);
  EXPECT_FALSE(r.cohen_macaulay.holds);
  EXPECT_TRUE(r.buchsbaum.holds);
  EXPECT_FALSE(r.gorenstein.holds);
  ASSERT_TRUE(r.seminormal.witness);
  EXPECT_EQ(r.seminormal.witness->element, (Point{6, 0, 2}));
  EXPECT_EQ(r.seminormal.witness->lambda, (RatVector{Rational(3, 2), Rational(0), Rational(1, 2)}));
  ASSERT_TRUE(r.cohen_macaulay.witness);
  EXPECT_EQ(r.cohen_macaulay.witness->shift, (Point{2, 0, 2}));
  EXPECT_TRUE(r.cohen_macaulay.witness->ideal.is_maximal());
}

TEST(Properties, PolynomialRing) {
  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<Point> gens;
    for (std::size_t k = 0; k < d; ++k) {
      Point e(d, 0);
      e[k] = 1;
      gens.push_back(e);
    }
    const auto r = full_report(AffineSemigroup::validate(gens));
    EXPECT_TRUE(r.seminormal.holds && r.normal.holds && r.cohen_macaulay.holds && r.buchsbaum.holds &&
                r.gorenstein.holds);
  }
}

TEST(Properties, PlaneFan) {
  const auto b = AffineSemigroup::validate({{1, 0}, {1, 1}, {1, 2}});
  EXPECT_TRUE(is_seminormal(b).holds);
  EXPECT_TRUE(is_normal(b).holds);
  EXPECT_TRUE(oracle::normal_by_parallelepiped({{1, 0}, {1, 1}, {1, 2}}));
}

TEST(Properties, NumericalFixtures) {
  const auto two_three = full_report(numerical({2, 3}));
  EXPECT_TRUE(two_three.gorenstein.holds);
  EXPECT_TRUE(two_three.cohen_macaulay.holds);

  const auto r = full_report(numerical({3, 4, 5}));
  EXPECT_TRUE(r.cohen_macaulay.holds);
  EXPECT_TRUE(r.buchsbaum.holds);
  EXPECT_FALSE(r.gorenstein.holds);
  EXPECT_FALSE(r.seminormal.holds);
  EXPECT_FALSE(r.normal.holds);
  ASSERT_TRUE(r.seminormal.witness);
  EXPECT_EQ(r.seminormal.witness->element, (Point{5}));
  EXPECT_EQ(r.seminormal.witness->lambda, (RatVector{Rational(5, 3)}));
}

TEST(Properties, QuinticBuchsbaumFails) {
  const auto b = AffineSemigroup::validate({{5, 0}, {4, 1}, {1, 4}, {0, 5}});
  const auto r = is_buchsbaum(b);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->kind, BuchsbaumWitness::Kind::IdealNotUnitOrMaximal);
  EXPECT_EQ(r.witness->ideal, (MonomialIdeal{2, {{2, 0}, {0, 1}}}));
  EXPECT_EQ(r.witness->shift, (Point{2, 3}));
}

TEST(Properties, NumericalGorensteinIsSymmetry) {
  // every numerical semigroup with up to three generators below 12
  int checked = 0;
  for (std::int64_t a = 2; a < 12; ++a)
    for (std::int64_t b = a + 1; b < 12; ++b)
      for (std::int64_t c = b; c < 12; ++c) {
        std::vector<std::int64_t> gens{a, b};
        if (c != b) gens.push_back(c);
        std::int64_t g = 0;
        for (auto v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        std::vector<Point> pts;
        for (auto v : gens) pts.push_back({v});
        const auto sg = AffineSemigroup::validate(pts);
        const auto r = full_report(sg);
        // one-dimensional domains are Cohen-Macaulay
        ASSERT_TRUE(r.cohen_macaulay.holds);
        ASSERT_EQ(r.gorenstein.holds, oracle::symmetric_numerical(std::vector<long long>(gens.begin(), gens.end()))) << a << "," << b << "," << c;
        ++checked;
      }
  EXPECT_GT(checked, 100);
}

TEST(Properties, AgreeWithDefinitionOraclesInPlane) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> entry(0, 6);
  for (int trial = 0; trial < 250; ++trial) {
    std::vector<Point> gens;
    const std::size_t n = 1 + trial % 4;
    while (gens.size() < n) {
      Point g{entry(rng), entry(rng)};
      if (!is_zero(g) && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    const auto b = AffineSemigroup::validate(gens);
    const auto d = decompose(b);
    const auto og = as_vecs(gens);
    ASSERT_EQ(is_seminormal(d).holds, oracle::seminormal(og)) << trial;
    ASSERT_EQ(is_normal(d).holds, oracle::normal(og)) << trial;
    ASSERT_EQ(is_normal(d).holds, oracle::normal_by_parallelepiped(og)) << trial;
    ASSERT_EQ(is_cohen_macaulay(d).holds, oracle::cohen_macaulay(og)) << trial;
    expect_chain(full_report(b, d));
  }
}

TEST(Properties, ImplicationChainRandomSpace) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + trial % 2, degree = 2 + trial % 3;
    const int extra = dim == 2 ? std::min(degree - 1, 1 + trial % 2) : 1 + trial % 3;
    const auto b = AffineSemigroup::validate(random_homogeneous_generators(rng, dim, degree, extra));
    expect_chain(full_report(b));
  }
}

TEST(Properties, BuchsbaumOnCohenMacaulay) {
  for (auto gens : {std::vector<Point>{{2, 0}, {1, 1}, {0, 2}}, std::vector<Point>{{3, 0}, {2, 1}, {0, 3}}}) {
    const auto b = AffineSemigroup::validate(gens);
    if (is_cohen_macaulay(b).holds) EXPECT_TRUE(is_buchsbaum(b).holds);
  }
}
