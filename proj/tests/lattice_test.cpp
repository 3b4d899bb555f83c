#include <gtest/gtest.h>

#include <random>
#include <set>

#include "monoalg/errors.hpp"
#include "monoalg/lattice.hpp"

using namespace monoalg;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<long>> data) {
  std::vector<IntVector> r;
  std::size_t cols = 0;
  for (const auto& row : data) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    cols = v.size();
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r, cols);
}

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> data) {
  const auto m = rows(data);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_smith_diagonal(const IntMatrix& d) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (k = 0; k + 1 < n; ++k) {
    if (d(k, k) < 0) return false;
    if (d(k, k) == 0) {
      if (d(k + 1, k + 1) != 0) return false;
    } else if (d(k + 1, k + 1) % d(k, k) != 0) {
      return false;
    }
  }
  return n == 0 || d(n - 1, n - 1) >= 0;
}

}  // namespace

TEST(Smith, Identity) {
  const auto m = IntMatrix::identity(3);
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal, IntMatrix::identity(3));
}

TEST(Smith, DiagTwoThree) {
  const auto s = smith_normal_form(rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal, rows({{1, 0}, {0, 6}}));
}

TEST(Smith, AlreadyReduced) {
  const auto m = rows({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}});
  EXPECT_EQ(smith_normal_form(m).diagonal, m);
}

TEST(Smith, RandomMatricesFactorCorrectly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const auto m = random_matrix(rng, r, c, -9, 9);
    const auto s = smith_normal_form(m);
    ASSERT_EQ(s.left * m * s.right, s.diagonal) << m.to_string();
    ASSERT_TRUE(is_smith_diagonal(s.diagonal)) << s.diagonal.to_string();
    const Integer du = determinant(s.left), dv = determinant(s.right);
    ASSERT_TRUE(abs(du) == 1 && abs(dv) == 1);
  }
}

TEST(Hermite, RowSpanAndShape) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 3;
    const auto m = random_matrix(rng, r, c, -6, 6);
    const auto h = hermite_normal_form(m);
    EXPECT_EQ(h.rows(), rank(m));
    // every input row has integer coordinates in the HNF basis, and vice versa
    for (std::size_t i = 0; i < m.rows(); ++i) ASSERT_TRUE(lattice_coordinates(h, m.row(i)).has_value());
    std::size_t lead = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (h(i, lead) == 0) ++lead;
      ASSERT_GT(h(i, lead), 0);
      for (std::size_t k = 0; k < i; ++k) {
        ASSERT_GE(h(k, lead), 0);
        ASSERT_LT(h(k, lead), h(i, lead));
      }
      ++lead;
    }
  }
}

TEST(LatticeBasis, GcdInOneDimension) {
  const std::vector<IntVector> span{{Integer(2)}, {Integer(3)}};
  EXPECT_EQ(lattice_basis(span, 1), rows({{1}}));
}

TEST(LatticeBasis, Collinear) {
  const std::vector<IntVector> span{{Integer(1), Integer(1)}, {Integer(2), Integer(2)}};
  EXPECT_EQ(lattice_basis(span, 2), rows({{1, 1}}));
}

TEST(LatticeBasis, EmptySpan) { EXPECT_EQ(lattice_basis(std::vector<IntVector>{}, 3).rows(), 0u); }

TEST(LatticeBasis, MatchesBoxClosure) {
  // brute-force closure of integer combinations inside a box
  const std::vector<IntVector> span{{Integer(4), Integer(0)},
                                    {Integer(0), Integer(4)},
                                    {Integer(3), Integer(1)},
                                    {Integer(1), Integer(3)}};
  const auto basis = lattice_basis(span, 2);
  EXPECT_EQ(basis.rows(), 2u);
  std::set<std::pair<long, long>> closure;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long e = -4; e <= 4; ++e) {
          const long x = 4 * a + 3 * c + e, y = 4 * b + c + 3 * e;
          if (std::abs(x) <= 6 && std::abs(y) <= 6) closure.emplace(x, y);
        }
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      const bool in = lattice_coordinates(basis, {Integer(x), Integer(y)}).has_value();
      EXPECT_EQ(in, closure.count({x, y}) == 1) << x << "," << y;
      EXPECT_EQ(in, ((x + y) % 4 + 4) % 4 == 0);
    }
}

TEST(Quotient, IntegersModTwo) {
  const auto sup = lattice_basis(vecs({{2}, {3}}), 1);
  const auto g = quotient_group(sup, vecs({{2}}));
  EXPECT_EQ(g.order(), 2u);
}

TEST(Quotient, Buchsbaum3dLattice) {
  const std::vector<IntVector> span{
      {Integer(4), Integer(0), Integer(0)}, {Integer(0), Integer(4), Integer(0)},
      {Integer(0), Integer(0), Integer(4)}, {Integer(1), Integer(0), Integer(3)},
      {Integer(0), Integer(2), Integer(2)}, {Integer(3), Integer(0), Integer(1)},
      {Integer(1), Integer(2), Integer(1)}};
  const auto g = quotient_group(lattice_basis(span, 3), vecs({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}));
  EXPECT_EQ(g.order(), 8u);
  const std::vector<Integer> expect{Integer(2), Integer(4)};
  EXPECT_EQ(g.invariant_factors(), expect);
  // labels separate the eight residues represented by the eight shifts
  std::set<CosetLabel> labels;
  for (auto p : {std::vector<long>{0, 0, 0}, {3, 0, 1}, {3, 2, 3}, {0, 2, 2},
                 {1, 0, 3}, {1, 2, 1}, {2, 2, 4}, {2, 0, 2}})
    labels.insert(g.project({Integer(p[0]), Integer(p[1]), Integer(p[2])}));
  EXPECT_EQ(labels.size(), 8u);
  EXPECT_EQ(g.project({Integer(4), Integer(0), Integer(0)}), g.project({Integer(0), Integer(0), Integer(0)}));
}

TEST(Quotient, TrivialWhenEqual) {
  const auto g = quotient_group(rows({{1, 1}, {0, 2}}), vecs({{1, 1}, {0, 2}}));
  EXPECT_EQ(g.order(), 1u);
}

TEST(Quotient, Errors) {
  const auto sup = rows({{1, 0}, {0, 1}});
  try {
    quotient_group(sup, vecs({{1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteQuotient);
  }
  try {
    quotient_group(rows({{2, 0}, {0, 2}}), vecs({{1, 0}, {0, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInLattice);
  }
}

TEST(Solve, DiagonalFrame) {
  const auto sol = solve_rational(rows({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}),
                                  {Integer(6), Integer(0), Integer(2)});
  ASSERT_TRUE(sol);
  const RatVector expect{Rational(3, 2), Rational(0), Rational(1, 2)};
  EXPECT_EQ(*sol, expect);
}

TEST(Solve, PlaneAndInconsistent) {
  const auto m = rows({{4, 0}, {0, 4}});
  const auto sol = solve_rational(m, {Integer(2), Integer(2)});
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], Rational(1, 2));
  EXPECT_EQ((*sol)[1], Rational(1, 2));
  // columns (4,0,0),(0,4,0) cannot reach (1,0,1)
  EXPECT_FALSE(solve_rational(rows({{4, 0}, {0, 4}, {0, 0}}), {Integer(1), Integer(0), Integer(1)}));
}

TEST(Solve, DependentColumnsAreAmbiguous) {
  try {
    solve_rational(rows({{1, 2}, {1, 2}}), {Integer(3), Integer(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousSolution);
  }
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(rows({{2, 1}, {1, 3}})), 5);
  EXPECT_EQ(determinant(rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(rows({{1, 2}, {2, 4}})), 0);
}
