#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "stretchlab/error.hpp"
#include "stretchlab/metric.hpp"
#include "support.hpp"

using namespace stretchlab;
using testsupport::random_torus;

namespace {
const IdealTriangulation kTorus = standard_torus_triangulation();
}

TEST(KMetric, IdenticalStructuresGiveZero) {
  std::mt19937_64 rng(31);
  const ShearStructure g = random_torus(rng);
  const RatioReport r = k_lower_bound(g, g, slope_curves(10));
  EXPECT_EQ(r.k_lower, 0.0);
  EXPECT_EQ(r.best_curve, to_string(slope_curves(10).front()));  // ties keep enumeration order
  for (const RatioRow& row : r.table) EXPECT_EQ(row.log_ratio, 0.0);
}

TEST(KMetric, TableSortedAndMatchesOracle) {
  std::mt19937_64 rng(32);
  const ShearStructure g = random_torus(rng), h = random_torus(rng);
  const auto curves = slope_curves(12);
  const RatioReport r = k_lower_bound(g, h, curves);
  ASSERT_EQ(r.table.size(), curves.size());
  const auto og = testsupport::oracle_rep(g.shears()), oh = testsupport::oracle_rep(h.shears());
  double best = -1e300;
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    if (i) EXPECT_GE(r.table[i - 1].log_ratio, r.table[i].log_ratio);
    const std::string w = slope_word(std::get<Slope>(r.table[i].curve)).letters;
    const double expect = std::log(testsupport::oracle_length(oh, w) / testsupport::oracle_length(og, w));
    EXPECT_NEAR(r.table[i].log_ratio, expect, 1e-10);
    best = std::max(best, expect);
  }
  EXPECT_NEAR(r.k_lower, best, 1e-10);
}

TEST(KMetric, PeripheralCurvesSkippedAndErrors) {
  std::mt19937_64 rng(33);
  const ShearStructure g = random_torus(rng), h = random_torus(rng);
  std::vector<Curve> curves{puncture_loops(kTorus)[0], Slope{1, 0}};
  EXPECT_EQ(k_lower_bound(g, h, curves).table.size(), 1u);
  EXPECT_THROW(k_lower_bound(g, h, {puncture_loops(kTorus)[0]}), StretchError);
  EXPECT_THROW(k_lower_bound(g, h, {}), StretchError);
  const auto other = IdealTriangulation::from_edge_lists({{0, 1, 2}, {3, 4, 5}, {0, 4, 2}, {3, 1, 5}});
  const ShearStructure z(other, std::vector<double>(6, 0.0));
  EXPECT_THROW(k_lower_bound(g, z, {Slope{1, 0}}), StretchError);
}

TEST(KMetric, EstimateStabilizesAndValidates) {
  std::mt19937_64 rng(34);
  const ShearStructure g = random_torus(rng), h = random_torus(rng);
  const RatioReport r = k_estimate(g, h, {5, 10, 20});
  EXPECT_EQ(r.levels, (std::vector<int>{5, 10, 20}));
  EXPECT_EQ(r.k_lower, k_lower_bound(g, h, slope_curves(20)).k_lower);
  EXPECT_THROW(k_estimate(g, h, {}), StretchError);
  EXPECT_THROW(k_estimate(g, h, {10, 5}), StretchError);
  EXPECT_FALSE(k_estimate(g, h, {20}).stabilized);  // a single level proves nothing
}

TEST(KMetric, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(35);
  const ShearStructure g = random_torus(rng), h = random_torus(rng);
  const auto curves = slope_curves(25);
  setenv("STRETCHLAB_THREADS", "1", 1);
  const auto one = curve_lengths(g, curves);
  const RatioReport r1 = k_lower_bound(g, h, curves);
  setenv("STRETCHLAB_THREADS", "4", 1);
  const auto four = curve_lengths(g, curves);
  const RatioReport r4 = k_lower_bound(g, h, curves);
  unsetenv("STRETCHLAB_THREADS");
  EXPECT_EQ(one, four);
  EXPECT_EQ(r1.k_lower, r4.k_lower);
  EXPECT_EQ(r1.best_curve, r4.best_curve);
}

TEST(Gradient, MatchesOracleDifferences) {
  std::mt19937_64 rng(36);
  const auto basis = completeness_basis(kTorus);
  for (int i = 0; i < 10; ++i) {
    const ShearStructure g = random_torus(rng);
    for (const Slope& s : enumerate_slopes(6)) {
      const auto grad = grad_log_length(g, s).components;
      const std::string w = slope_word(s).letters;
      for (int k = 0; k < 2; ++k) {
        auto at = [&](double t) {
          std::vector<double> x = g.shears();
          for (int e = 0; e < 3; ++e) x[e] += t * basis[k][e];
          return std::log(testsupport::oracle_length(testsupport::oracle_rep(x), w));
        };
        const double h = 1e-4;
        // fourth-order stencil as an independent estimate
        const double d = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
        EXPECT_NEAR(grad[k], d, 1e-7) << to_string(s);
      }
    }
  }
}

TEST(Gradient, WeightIgnoredAndValidated) {
  const ShearStructure g(kTorus, {0.3, -0.1, -0.2});
  EXPECT_EQ(grad_log_length(g, Slope{2, 1}, kGradientStep, 3.0).components,
            grad_log_length(g, Slope{2, 1}).components);
  EXPECT_THROW(grad_log_length(g, Slope{2, 1}, kGradientStep, 0.0), StretchError);
  EXPECT_THROW(grad_log_length(g, puncture_loops(kTorus)[0]), StretchError);
}

TEST(Gradient, StretchDirectionHasNoComponentForZeroShear) {
  // at the zero-shear point the three basic slopes are permuted by symmetry
  const ShearStructure g(kTorus, {0, 0, 0});
  std::array<double, 2> sum{0, 0};
  for (const Slope s : {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}}) {
    const auto c = grad_log_length(g, s).components;
    sum[0] += c[0];
    sum[1] += c[1];
  }
  EXPECT_NEAR(sum[0], 0, 1e-9);
  EXPECT_NEAR(sum[1], 0, 1e-9);
}

TEST(Hull, SquareWithCollinearPoints) {
  const auto hull = convex_hull({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 1}});
  EXPECT_EQ(hull.size(), 4u);
  EXPECT_NEAR(outside_distance(hull, {1, 1}), -1, 1e-15);
  EXPECT_NEAR(outside_distance(hull, {3, 1}), 1, 1e-15);
  EXPECT_NEAR(outside_distance(hull, {2, 1}), 0, 1e-15);
}

TEST(Cloud, ZeroShearAndSmallN) {
  const ShearStructure zero(kTorus, {0, 0, 0});
  const CloudReport big = convex_cloud(zero, 20);
  EXPECT_TRUE(big.origin_interior);
  EXPECT_TRUE(big.all_vertices);
  EXPECT_EQ(convex_cloud(zero, 2).points.size(), 4u);
  EXPECT_THROW(convex_cloud(zero, 1), StretchError);
}

TEST(Twist, AntisymmetrySelfIsZero) {
  std::mt19937_64 rng(37);
  const ShearStructure g = random_torus(rng);
  EXPECT_EQ(antisymmetry_residual(g, {2, 1}, {2, 1}), 0.0);
  EXPECT_LT(std::abs(antisymmetry_residual(g, {2, 1}, {-1, 3})), 1e-4);
  // disjoint curves do not feel each other's twist
  const HolonomyRep h = shear_to_holonomy_rep(g);
  EXPECT_NEAR(twisted_word_length(h, {1, 0}, 0.5, slope_word({1, 0})),
              curve_length(g, Slope{1, 0}), 1e-12);
}

TEST(Twist, DerivativeIsCosineOfAngle) {
  // for i(s, t) = 1 the twist derivative of l_t is cos of the crossing angle,
  // which lies in (-1, 1)
  std::mt19937_64 rng(38);
  for (int i = 0; i < 20; ++i) {
    const ShearStructure g = random_torus(rng);
    const HolonomyRep h = shear_to_holonomy_rep(g);
    const FreeWord w = slope_word({0, 1});
    const double d = (twisted_word_length(h, {1, 0}, 1e-4, w) - twisted_word_length(h, {1, 0}, -1e-4, w)) / 2e-4;
    EXPECT_LT(std::abs(d), 1.0);
  }
}

TEST(March, IdenticalPairIsEmpty) {
  std::mt19937_64 rng(39);
  const ShearStructure g = random_torus(rng);
  const MarchResult r = stretch_march(g, g, {});
  EXPECT_EQ(r.status, MarchStatus::Converged);
  EXPECT_TRUE(r.steps.empty());
}

TEST(March, DecreasesToStep) {
  const ShearStructure g(kTorus, {0.8, -0.3, -0.5}), h(kTorus, {-0.2, 0.5, -0.3});
  const MarchResult r = stretch_march(g, h, {0.01, 500, 20});
  EXPECT_EQ(r.status, MarchStatus::Converged);
  double prev = r.initial_k;
  for (const MarchStep& s : r.steps) {
    EXPECT_LE(s.k_lower, prev + 1e-3);
    prev = s.k_lower;
  }
  EXPECT_LT(prev, 0.01);
  EXPECT_THROW(stretch_march(g, h, {0.0, 10, 10}), StretchError);
}

TEST(March, StepLimitReported) {
  const ShearStructure g(kTorus, {0.8, -0.3, -0.5}), h(kTorus, {-0.2, 0.5, -0.3});
  EXPECT_EQ(stretch_march(g, h, {0.01, 3, 20}).status, MarchStatus::MaxSteps);
}

TEST(Asymmetry, PinchedPairRatioAboveTwo) {
  const ShearStructure g(kTorus, {0, -8, 8}), h(kTorus, {0, 0, 0});
  const auto [kgh, khg] = asymmetry_probe(g, h, 30);
  EXPECT_GT(kgh / khg, 2.0);
}

TEST(Coords, HyperplaneRoundTrip) {
  const ShearStructure s = from_hyperplane_coords(kTorus, {0.4, -0.7});
  const auto x = to_shear_coords(kTorus, {{0.4, -0.7}});
  for (int e = 0; e < 3; ++e) EXPECT_NEAR(s.shear(e), x[e], 1e-15);
}
