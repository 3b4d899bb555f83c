#include <gtest/gtest.h>

#include <random>

#include "monoalg/errors.hpp"
#include "monoalg/semigroup.hpp"
#include "monoalg/simplex.hpp"
#include "oracles.hpp"

using namespace monoalg;

namespace {

AffineSemigroup buchsbaum3d() {
  return AffineSemigroup::validate(
      {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 0, 3}, {0, 2, 2}, {3, 0, 1}, {1, 2, 1}});
}

std::vector<oracle::Vec> as_vecs(const std::vector<Point>& pts) {
  std::vector<oracle::Vec> out;
  for (const auto& p : pts) out.emplace_back(p.begin(), p.end());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::vector<Point> ray_generators(const AffineSemigroup& b) {
  std::vector<Point> out;
  for (auto i : extreme_rays(b)) out.push_back(b.generator(i));
  return out;
}

}  // namespace

TEST(Validate, Accepts) {
  const auto b = AffineSemigroup::validate({{4, 0, 0}, {0, 4, 0}});
  EXPECT_EQ(b.ambient_dim(), 3u);
  EXPECT_EQ(b.size(), 2u);
}

TEST(Validate, Rejects) {
  EXPECT_EQ(kind_of([] { AffineSemigroup::validate({}); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { AffineSemigroup::validate({{0, 0}}); }), ErrorKind::ZeroGenerator);
  EXPECT_EQ(kind_of([] { AffineSemigroup::validate({{1, -1}}); }), ErrorKind::NegativeEntry);
  EXPECT_EQ(kind_of([] { AffineSemigroup::validate({{1, 2}, {1}}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { AffineSemigroup::validate({{1, 2}, {1, 2}}); }), ErrorKind::DuplicateGenerator);
}

TEST(Member, NumericalTwoThree) {
  const auto b = AffineSemigroup::validate({{2}, {3}});
  EXPECT_FALSE(b.member({1}));
  EXPECT_TRUE(b.member({7}));
  EXPECT_TRUE(b.member({0}));
  EXPECT_EQ(kind_of([&] { b.member({1, 1}); }), ErrorKind::DimensionMismatch);
}

TEST(Member, AgreesWithTableOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> entry(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 3;
    std::vector<Point> gens;
    while (gens.size() < 3) {
      Point g(m);
      for (auto& v : g) v = entry(rng);
      if (!is_zero(g) && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    const auto b = AffineSemigroup::validate(gens);
    const auto og = as_vecs(gens);
    for (int q = 0; q < 30; ++q) {
      Point x(m);
      for (auto& v : x) v = entry(rng) + entry(rng);
      ASSERT_EQ(b.member(x), oracle::member(og, oracle::Vec(x.begin(), x.end()))) << to_string(x);
    }
  }
}

TEST(Cone, RationalMembership) {
  const std::vector<IntVector> gens{{Integer(1), Integer(0)}, {Integer(1), Integer(2)}};
  EXPECT_TRUE(in_rational_cone(gens, {Integer(1), Integer(1)}));
  EXPECT_FALSE(in_rational_cone(gens, {Integer(0), Integer(1)}));
  EXPECT_TRUE(in_rational_cone(gens, {Integer(0), Integer(0)}));
}

TEST(ExtremeRays, Buchsbaum3d) {
  const std::vector<Point> want{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}};
  EXPECT_EQ(ray_generators(buchsbaum3d()), want);
}

TEST(ExtremeRays, Plane) {
  const auto n2 = AffineSemigroup::validate({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(ray_generators(n2), (std::vector<Point>{{1, 0}, {0, 1}}));
  const auto fan = AffineSemigroup::validate({{1, 0}, {1, 1}, {1, 2}});
  EXPECT_EQ(ray_generators(fan), (std::vector<Point>{{1, 2}, {1, 0}}));
}

TEST(ExtremeRays, AgreeWithAngleOracleInPlane) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> entry(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> gens;
    const std::size_t n = 1 + trial % 4;
    while (gens.size() < n) {
      Point g{entry(rng), entry(rng)};
      if (!is_zero(g) && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    const auto b = AffineSemigroup::validate(gens);
    auto got = as_vecs(ray_generators(b));
    auto want = oracle::frame_2d(as_vecs(gens));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got, want);
  }
}

TEST(Simplicial, Cases) {
  EXPECT_TRUE(is_simplicial(buchsbaum3d()));
  const auto sec2 = AffineSemigroup::validate(
      {{4, 0, 0}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {0, 3, 1}, {3, 1, 0}, {1, 1, 2}});
  EXPECT_FALSE(is_simplicial(sec2));
  EXPECT_EQ(kind_of([&] { select_frame(sec2); }), ErrorKind::NotSimplicial);
  EXPECT_TRUE(is_simplicial(AffineSemigroup::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST(Frame, SelectionAndLambda) {
  const auto frame = select_frame(buchsbaum3d());
  EXPECT_EQ(frame.elements(), (std::vector<Point>{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}));
  const RatVector want{Rational(3, 2), Rational(0), Rational(1, 2)};
  EXPECT_EQ(lambda_coords(frame, {6, 0, 2}), want);
  EXPECT_EQ(frame.lambda({4, 0, 0}), (RatVector{Rational(1), Rational(0), Rational(0)}));
  EXPECT_EQ(frame.combine(want), (Point{6, 0, 2}));

  const auto two_three = select_frame(AffineSemigroup::validate({{2}, {3}}));
  EXPECT_EQ(two_three.elements(), (std::vector<Point>{{2}}));
  const auto f345 = select_frame(AffineSemigroup::validate({{3}, {4}, {5}}));
  EXPECT_EQ(f345.lambda({5}), (RatVector{Rational(5, 3)}));

  const auto plane = select_frame(AffineSemigroup::validate({{1, 1}, {2, 2}}));
  EXPECT_EQ(kind_of([&] { plane.lambda({1, 0}); }), ErrorKind::OutsideSpan);
}

TEST(Degree, Functional) {
  const auto f = degree_functional(buchsbaum3d());
  ASSERT_TRUE(f);
  const RatVector quarter(3, Rational(1, 4));
  EXPECT_EQ(f->coefficients, quarter);
  EXPECT_EQ(f->degree({2, 2, 4}), 2);
  EXPECT_EQ(kind_of([&] { f->degree({1, 0, 0}); }), ErrorKind::NotHomogeneous);
  EXPECT_FALSE(degree_functional(AffineSemigroup::validate({{2}, {3}})));
  const auto std3 = degree_functional(AffineSemigroup::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  ASSERT_TRUE(std3);
  EXPECT_EQ(std3->coefficients, RatVector(3, Rational(1)));
}

TEST(Minimalize, Cases) {
  EXPECT_EQ(minimalize_check(AffineSemigroup::validate({{1, 0}, {0, 1}, {1, 1}})),
            std::vector<std::size_t>{2});
  EXPECT_TRUE(minimalize_check(buchsbaum3d()).empty());
  EXPECT_EQ(minimalize_check(AffineSemigroup::validate({{2}, {3}, {5}})), std::vector<std::size_t>{2});
}

TEST(ModuleGenerators, Fixtures) {
  const auto b = buchsbaum3d();
  const auto got = module_generators(b, select_frame(b));
  std::vector<Point> want{{0, 0, 0}, {3, 0, 1}, {3, 2, 3}, {0, 2, 2}, {1, 0, 3},
                          {1, 2, 1}, {2, 2, 4}, {6, 0, 2}, {2, 4, 2}, {2, 0, 6}};
  std::sort(want.begin(), want.end(), std::greater<>());
  EXPECT_EQ(got, want);

  const auto t = AffineSemigroup::validate({{2}, {3}});
  EXPECT_EQ(module_generators(t, select_frame(t)), (std::vector<Point>{{3}, {0}}));
  const auto f = AffineSemigroup::validate({{3}, {4}, {5}});
  EXPECT_EQ(module_generators(f, select_frame(f)), (std::vector<Point>{{5}, {4}, {0}}));
}

TEST(ModuleGenerators, AgreeWithDefinitionOracle) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> entry(0, 5);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const std::size_t m = 1 + trial % 2;
    std::vector<Point> gens;
    while (gens.size() < 1 + static_cast<std::size_t>(trial % 4)) {
      Point g(m);
      for (auto& v : g) v = entry(rng);
      if (!is_zero(g) && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    const auto b = AffineSemigroup::validate(gens);
    const auto frame = select_frame(b);
    const auto og = as_vecs(gens);
    const auto want = oracle::module_generators(og, as_vecs(frame.elements()));
    const auto got = as_vecs(module_generators(b, frame));
    ASSERT_EQ(std::set<oracle::Vec>(got.begin(), got.end()), want);
    EXPECT_EQ(frame_quotient(b, frame).order(), oracle::group_order(og, as_vecs(frame.elements())));
    ++checked;
  }
}

TEST(Points, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(kind_of([&] { add_points({big}, {1}); }), ErrorKind::Overflow);
}

namespace {

// Caratheodory: target is in the cone iff it is a nonnegative combination
// of some linearly independent subset of the generators.
bool cone_oracle(const std::vector<oracle::Vec>& gens, const oracle::Vec& target) {
  if (std::all_of(target.begin(), target.end(), [](long long v) { return v == 0; })) return true;
  const std::size_t n = gens.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<oracle::Vec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(gens[i]);
    if (sub.size() > target.size()) continue;
    // independence: lambda of each member against the rest must fail
    bool independent = true;
    for (std::size_t i = 0; i < sub.size() && independent; ++i) {
      std::vector<oracle::Vec> rest(sub);
      rest.erase(rest.begin() + static_cast<long>(i));
      if (!rest.empty() && !oracle::lambda(rest, sub[i]).empty()) independent = false;
    }
    if (!independent) continue;
    const auto lam = oracle::lambda(sub, target);
    if (lam.empty()) continue;
    if (std::none_of(lam.begin(), lam.end(), [](oracle::Frac f) { return f < oracle::Frac(0); }))
      return true;
  }
  return false;
}

}  // namespace

TEST(Cone, AgreesWithCaratheodoryOracle) {
  std::mt19937_64 rng(37);
  for (long long scale : {1LL, 1LL << 40}) {
    std::uniform_int_distribution<long long> entry(-3, 3);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t m = 1 + trial % 3, n = 1 + trial % 5;
      std::vector<oracle::Vec> gens(n, oracle::Vec(m));
      oracle::Vec target(m);
      for (auto& g : gens)
        for (auto& v : g) v = entry(rng);
      for (auto& v : target) v = entry(rng);
      std::vector<IntVector> ig;
      for (const auto& g : gens) {
        IntVector v;
        for (auto x : g) v.push_back(Integer(static_cast<long>(x)) * static_cast<long>(scale));
        ig.push_back(v);
      }
      IntVector it;
      for (auto x : target) it.push_back(Integer(static_cast<long>(x)) * static_cast<long>(scale));
      ASSERT_EQ(in_rational_cone(ig, it), cone_oracle(gens, target)) << "trial " << trial << " scale " << scale;
    }
  }
}
