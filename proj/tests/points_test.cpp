#include <gtest/gtest.h>

#include <random>

#include "icstalk/points.hpp"
#include "test_support.hpp"

using namespace icstalk;

namespace {

RatVector pt(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ProjectivePointSet collinear_p2() {
  return ProjectivePointSet::make(2, {pt({1, 0, 0}), pt({1, 1, 0}), pt({1, 2, 0})});
}

ProjectivePointSet coordinate_points(std::size_t n, std::size_t count) {
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(icstalk::testing::unit(n + 1, i));
  return ProjectivePointSet::make(n, std::move(pts));
}

}  // namespace

TEST(PointSet, NormalizesAndRejects) {
  const auto s = ProjectivePointSet::make(2, {pt({0, 2, 4}), pt({-3, 0, 3})});
  EXPECT_EQ(s.points()[0], (RatVector{Rational(0), Rational(1), Rational(2)}));
  EXPECT_EQ(s.points()[1], (RatVector{Rational(1), Rational(0), Rational(-1)}));

  EXPECT_THROW(ProjectivePointSet::make(2, {pt({0, 0, 0})}), InputError);
  EXPECT_THROW(ProjectivePointSet::make(2, {pt({1, 2})}), InputError);
  EXPECT_THROW(ProjectivePointSet::make(2, {pt({1, 2, 3}), pt({2, 4, 6})}), InputError);
}

TEST(MonomialBasis, Counts) {
  EXPECT_EQ(monomial_basis(2, 1).size(), 3u);
  EXPECT_EQ(monomial_basis(2, 4).size(), 15u);
  EXPECT_EQ(monomial_basis(3, 2).size(), 10u);
  EXPECT_EQ(monomial_basis(2, 0).size(), 1u);
  const auto m = monomial_basis(2, 2);
  EXPECT_EQ(m.front(), (Exponents{2, 0, 0}));
  EXPECT_EQ(m.back(), (Exponents{0, 0, 2}));
  for (const auto& e : monomial_basis(4, 3)) {
    std::int64_t sum = 0;
    for (auto x : e) sum += x;
    EXPECT_EQ(sum, 3);
  }
}

TEST(EvaluationMatrix, Examples) {
  const auto one = ProjectivePointSet::make(2, {pt({1, 5, 7})});
  const auto e0 = evaluation_matrix(one, 0);
  EXPECT_EQ(e0, (RatMatrix{{1}}));
  EXPECT_EQ(rank(evaluation_matrix(collinear_p2(), 1)), 2u);
  EXPECT_EQ(rank(evaluation_matrix(coordinate_points(2, 3), 1)), 3u);
}

TEST(Conditions, Examples) {
  auto r = conditions_report(collinear_p2(), 1);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.h1_ideal, 1);
  EXPECT_FALSE(r.independent);
  EXPECT_EQ(r.h0_ambient, 3);
  EXPECT_EQ(r.h0_ideal, 1);

  r = conditions_report(grid_nodes(2, 4), 4);
  EXPECT_EQ(r.delta, 9);
  EXPECT_EQ(r.rank, 9);
  EXPECT_EQ(r.h1_ideal, 0);
  EXPECT_TRUE(r.independent);

  r = conditions_report(grid_nodes(2, 5), 5);
  EXPECT_EQ(r.delta, 16);
  EXPECT_EQ(r.h0_ambient, 21);
  EXPECT_EQ(r.rank, 15);
  EXPECT_EQ(r.h1_ideal, 1);
}

// Frozen from an independent sympy rank computation of the same grids.
TEST(Conditions, GridFamilyFrozenValues) {
  struct Case {
    std::size_t n;
    std::int64_t k;
    std::int64_t h1;
  };
  for (const auto& c : {Case{2, 2, 0}, Case{2, 3, 0}, Case{2, 4, 0}, Case{2, 5, 1}, Case{2, 6, 3},
                        Case{3, 2, 0}, Case{3, 3, 0}, Case{3, 4, 4}})
    EXPECT_EQ(conditions_report(grid_nodes(c.n, c.k), c.k).h1_ideal, c.h1)
        << "n=" << c.n << " k=" << c.k;
}

TEST(Conditions, IndependentMeansExpectedSections) {
  const auto r = conditions_report(coordinate_points(4, 3), 1);
  ASSERT_TRUE(r.independent);
  EXPECT_EQ(r.h0_ideal, r.h0_ambient - r.delta);  // N + 1 - delta with N = 4
}

TEST(Conditions, RankInvariances) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const std::int64_t d = 1 + trial % 3;
    const auto s = icstalk::testing::random_point_set(rng, n, 3 + trial % 5);
    const auto base = conditions_report(s, d).rank;

    auto pts = s.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    for (auto& p : pts)
      for (auto& x : p) x *= Rational(-7, 2);
    EXPECT_EQ(conditions_report(ProjectivePointSet::make(n, pts), d).rank, base);

    const auto g = icstalk::testing::random_invertible(rng, n + 1);
    std::vector<RatVector> moved;
    for (const auto& p : s.points()) moved.push_back(matvec(g, std::span<const Rational>(p)));
    EXPECT_EQ(conditions_report(ProjectivePointSet::make(n, moved), d).rank, base);
  }
}

TEST(Conditions, MonotoneOnGridFamily) {
  // Empirical: h1 of the grid ideal does not increase with the degree.
  for (std::int64_t k = 2; k <= 5; ++k) {
    const auto g = grid_nodes(2, k);
    std::int64_t prev = conditions_report(g, 1).h1_ideal;
    for (std::int64_t d = 2; d <= 7; ++d) {
      const auto h1 = conditions_report(g, d).h1_ideal;
      EXPECT_LE(h1, prev) << "k=" << k << " d=" << d;
      prev = h1;
    }
  }
}

TEST(NodeSpan, Examples) {
  EXPECT_EQ(node_span_dim(ProjectivePointSet::make(
                3, {pt({1, 0, 0, 0}), pt({1, 1, 0, 0}), pt({1, 2, 0, 0})})),
            1);
  EXPECT_EQ(node_span_dim(coordinate_points(5, 4)), 3);
  EXPECT_EQ(node_span_dim(grid_nodes(2, 3)), 2);
}

TEST(NormalCrossing, Examples) {
  EXPECT_EQ(normal_crossing_check(coordinate_points(3, 2)), (NormalCrossingCheck{true, 1}));
  EXPECT_EQ(normal_crossing_check(ProjectivePointSet::make(
                3, {pt({1, 0, 0, 0}), pt({1, 1, 0, 0}), pt({1, 2, 0, 0})})),
            (NormalCrossingCheck{false, 1}));
  EXPECT_EQ(normal_crossing_check(ProjectivePointSet::make(6, {pt({0, 3, 1, 0, 0, 2, 9})})),
            (NormalCrossingCheck{true, 5}));
}

TEST(Severi, ExpectedDimension) {
  EXPECT_EQ(severi_expected_dim(5, 2), 3);
  EXPECT_EQ(severi_expected_dim(7, 0), 7);
  EXPECT_EQ(severi_expected_dim(7, 7), 0);
  EXPECT_THROW(severi_expected_dim(3, 4), InputError);
}

TEST(Grid, Counts) {
  EXPECT_EQ(grid_nodes(2, 2).size(), 1u);
  EXPECT_EQ(grid_nodes(2, 4).size(), 9u);
  EXPECT_EQ(grid_nodes(3, 3).size(), 8u);
  EXPECT_EQ(node_count_ci(2, 4), 9);
  EXPECT_EQ(node_count_ci(3, 3), 8);
  EXPECT_EQ(node_count_ci(5, 2), 1);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t k = 2; k <= 5; ++k)
      EXPECT_EQ(static_cast<std::int64_t>(grid_nodes(n, k).size()),
                node_count_ci(static_cast<std::int64_t>(n), k));
}

TEST(Grid, PointsAreCommonZerosOfTheProductForms) {
  const std::vector<RatVector> params{{Rational(0), Rational(1, 2), Rational(-3)},
                                      {Rational(2), Rational(5), Rational(7, 3)}};
  const auto g = grid_nodes(2, 4, params);
  EXPECT_EQ(g.size(), 9u);
  for (const auto& p : g.points()) {
    for (std::size_t i = 0; i < 2; ++i) {
      Rational f(1);
      for (const auto& c : params[i]) f *= p[i] - c * p[2];
      EXPECT_TRUE(f.is_zero());
    }
  }
}

TEST(Grid, Errors) {
  EXPECT_THROW(grid_nodes(2, 1), InputError);
  EXPECT_THROW(grid_nodes(2, 3, std::vector<RatVector>{{Rational(1), Rational(1)},
                                                        {Rational(1), Rational(2)}}),
               InputError);
  EXPECT_THROW(grid_nodes(2, 3, std::vector<RatVector>{{Rational(1), Rational(2)}}), InputError);
}

TEST(NodeCountQuadrics, Values) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(node_count_quadrics(n, 1), n + 1);
    EXPECT_EQ(2 * node_count_quadrics(n, 2), (n + 1) * (n + 2));
  }
  EXPECT_EQ(node_count_quadrics(3, 2), 10);
  EXPECT_THROW(node_count_quadrics(3, 0), InputError);
}
