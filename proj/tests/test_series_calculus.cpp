#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pharmonic/pharmonic.hpp"
#include "test_support.hpp"

using namespace pharmonic;
using testsupport::expect_close;
using testsupport::fd_jet;
using testsupport::random_map;
using testsupport::random_point;
using testsupport::random_series;

namespace {

PHarmonicMap weighted_identity(int p) {
  return build_weighted_map(HarmonicSeries::identity(), p);
}

}  // namespace

TEST(HarmonicSeries, EvalAndCoefficients) {
  HarmonicSeries s;
  s.set_c0(Complex{0.5, 0.0});
  s.set_c(2, Complex{0.0, 1.0});
  s.set_d(1, Complex{-1.0, 0.0});
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s.c(2), (Complex{0.0, 1.0}));
  EXPECT_EQ(s.c(5), Complex{});
  const Complex z{0.3, 0.4};
  expect_close(s(z), Complex{0.5, 0.0} + Complex{0.0, 1.0} * z * z -
                         std::conj(z),
               1e-15);
}

TEST(HarmonicSeries, SetCoefficientRejectsBadIndex) {
  HarmonicSeries s;
  EXPECT_THROW(s.set_c(0, Complex{1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(s.set_d(-2, Complex{1.0, 0.0}), std::invalid_argument);
}

TEST(PHarmonicMap, EvalIdentityAndWeightedLayers) {
  const PHarmonicMap ident{HarmonicSeries::identity()};
  const Complex z{0.3, 0.4};
  expect_close(ident(z), z, 0.0);

  // |z|^2 z at z = 0.5 is 0.125, |z|^4 z at 0.5 is 0.03125
  expect_close(weighted_identity(2)(Complex{0.5, 0.0}), Complex{0.125, 0.0},
               1e-16);
  expect_close(weighted_identity(3)(Complex{0.5, 0.0}), Complex{0.03125, 0.0},
               1e-16);
}

TEST(PHarmonicMap, RejectsEmptyLayerList) {
  EXPECT_THROW(PHarmonicMap{std::vector<HarmonicSeries>{}},
               std::invalid_argument);
}

TEST(PHarmonicMap, DeepestLayerNonzero) {
  std::vector<HarmonicSeries> layers(3);
  layers[0] = HarmonicSeries::identity();
  const PHarmonicMap f{layers};
  EXPECT_EQ(f.deepest_layer_nonzero(), 1);
  EXPECT_EQ(PHarmonicMap{std::vector<HarmonicSeries>(2)}.deepest_layer_nonzero(),
            0);
}

TEST(PHarmonicMap, EvalMatchesBipolyExpansion) {
  std::mt19937 gen(101);
  for (int trial = 0; trial < 50; ++trial) {
    const PHarmonicMap f = random_map(gen, 4, 6, 1.0);
    const BiPolynomial q = to_bipoly(f);
    for (int i = 0; i < 5; ++i) {
      const Complex z = random_point(gen, 0.95);
      expect_close(f(z), q(z), 1e-12);
    }
  }
}

TEST(ToBipoly, SlotPlacement) {
  // f = |z|^2 z: layer 1 zero, layer 2 = z -> single slot (2, 1)
  const BiPolynomial q2 = to_bipoly(weighted_identity(2));
  EXPECT_EQ(q2.terms().size(), 1u);
  EXPECT_EQ(q2.coeff(2, 1), (Complex{1.0, 0.0}));

  // conj(z)^2 as a single layer -> slot (0, 2)
  HarmonicSeries s;
  s.set_d(2, Complex{1.0, 0.0});
  const BiPolynomial q1 = to_bipoly(PHarmonicMap{s});
  EXPECT_EQ(q1.coeff(0, 2), (Complex{1.0, 0.0}));

  // layer 1 = z, layer 2 = 1 -> slots (1, 0) and (1, 1)
  std::vector<HarmonicSeries> layers{HarmonicSeries::identity(),
                                     HarmonicSeries::constant({1.0, 0.0})};
  const BiPolynomial q3 = to_bipoly(PHarmonicMap{layers});
  EXPECT_EQ(q3.coeff(1, 0), (Complex{1.0, 0.0}));
  EXPECT_EQ(q3.coeff(1, 1), (Complex{1.0, 0.0}));
}

TEST(BiPolynomial, LaplacianMonomials) {
  BiPolynomial q;
  q.add_term(1, 1, Complex{1.0, 0.0});  // |z|^2
  const BiPolynomial lap = q.laplacian();
  EXPECT_EQ(lap.coeff(0, 0), (Complex{4.0, 0.0}));

  BiPolynomial r;
  r.add_term(2, 1, Complex{1.0, 0.0});  // |z|^2 z
  EXPECT_EQ(r.laplacian().coeff(1, 0), (Complex{8.0, 0.0}));
  EXPECT_TRUE(r.laplacian().laplacian().is_zero());
}

TEST(BiPolynomial, KernelExactness) {
  std::mt19937 gen(202);
  for (int trial = 0; trial < 100; ++trial) {
    const PHarmonicMap f = random_map(gen, 5, 8, 1.0);
    BiPolynomial q = to_bipoly(f);
    for (int k = 1; k < f.p(); ++k) q = q.laplacian();
    EXPECT_FALSE(q.is_zero());  // deepest layer is forced nonzero
    EXPECT_TRUE(q.laplacian().is_zero());
  }
}

TEST(MocanuOperator, CommutesWithExpansionExactly) {
  std::mt19937 gen(303);
  for (int trial = 0; trial < 100; ++trial) {
    const PHarmonicMap f = random_map(gen, 5, 8, 1.0);
    EXPECT_TRUE(to_bipoly(apply_D(f)) == mocanu_D(to_bipoly(f)));
  }
}

TEST(MocanuOperator, Examples) {
  // D(z) = z
  const PHarmonicMap ident{HarmonicSeries::identity()};
  EXPECT_TRUE(to_bipoly(apply_D(ident)) == to_bipoly(ident));

  // D(conj(z)) = -conj(z)
  HarmonicSeries anti;
  anti.set_d(1, Complex{1.0, 0.0});
  const PHarmonicMap f{anti};
  EXPECT_EQ(to_bipoly(apply_D(f)).coeff(0, 1), (Complex{-1.0, 0.0}));

  // D annihilates the pure weight |z|^2
  std::vector<HarmonicSeries> layers{HarmonicSeries::zero(),
                                     HarmonicSeries::constant({1.0, 0.0})};
  EXPECT_TRUE(apply_D(PHarmonicMap{layers}).is_zero());
}

TEST(MocanuOperator, TwiceMatchesMonomialRule) {
  std::mt19937 gen(404);
  for (int trial = 0; trial < 50; ++trial) {
    const PHarmonicMap f = random_map(gen, 4, 8, 1.0);
    const BiPolynomial lhs = to_bipoly(apply_D(apply_D(f)));
    const BiPolynomial rhs = mocanu_D(mocanu_D(to_bipoly(f)));
    EXPECT_TRUE(lhs == rhs);
  }
}

TEST(Wirtinger, WeightedIdentityJet) {
  // f = |z|^2 z = z^2 conj(z): f_z = 2 z conj(z), f_zbar = z^2
  const Complex z{0.5, 0.0};
  const WirtingerJet jet = wirtinger(weighted_identity(2), z);
  expect_close(jet.f, Complex{0.125, 0.0}, 0.0);
  expect_close(jet.f_z, Complex{0.5, 0.0}, 0.0);
  expect_close(jet.f_zbar, Complex{0.25, 0.0}, 0.0);
  expect_close(jet.f_zz, 2.0 * std::conj(z), 0.0);
  expect_close(jet.f_zzbar, 2.0 * z, 0.0);
  expect_close(jet.f_zbarzbar, Complex{}, 0.0);
}

TEST(Wirtinger, MatchesFiniteDifferences) {
  std::mt19937 gen(505);
  int checked = 0;
  while (checked < 100) {
    const PHarmonicMap f = random_map(gen, 4, 8, 1.0);
    const JetEvaluator jets(f);
    for (int i = 0; i < 4; ++i, ++checked) {
      const Complex z = random_point(gen, 0.8);
      const WirtingerJet a = jets.at(z);
      const WirtingerJet b = fd_jet(f, z);
      expect_close(a.f_z, b.f_z, 1e-6);
      expect_close(a.f_zbar, b.f_zbar, 1e-6);
      expect_close(a.f_zz, b.f_zz, 1e-5);
      expect_close(a.f_zbarzbar, b.f_zbarzbar, 1e-5);
      expect_close(a.f_zzbar, b.f_zzbar, 1e-5);
    }
  }
}

TEST(Wirtinger, HarmonicLayerHasNoMixedDerivative) {
  std::mt19937 gen(606);
  for (int trial = 0; trial < 20; ++trial) {
    const PHarmonicMap f{random_series(gen, 8, 1.0)};
    const WirtingerJet jet = wirtinger(f, random_point(gen, 0.9));
    EXPECT_EQ(jet.f_zzbar, Complex{});
  }
}

TEST(Metrics, Examples) {
  const PHarmonicMap ident{HarmonicSeries::identity()};
  const PointMetrics m1 = metrics(ident, Complex{0.2, 0.0});
  EXPECT_DOUBLE_EQ(m1.lambda, 1.0);
  EXPECT_DOUBLE_EQ(m1.Lambda, 1.0);
  EXPECT_DOUBLE_EQ(m1.jacobian, 1.0);

  const PointMetrics m2 = metrics(weighted_identity(2), Complex{0.5, 0.0});
  EXPECT_DOUBLE_EQ(m2.lambda, 0.25);
  EXPECT_DOUBLE_EQ(m2.Lambda, 0.75);
  EXPECT_DOUBLE_EQ(m2.jacobian, 0.1875);

  HarmonicSeries anti;
  anti.set_d(1, Complex{1.0, 0.0});
  const PointMetrics m3 = metrics(PHarmonicMap{anti}, Complex{0.3, 0.3});
  EXPECT_DOUBLE_EQ(m3.lambda, -1.0);
  EXPECT_DOUBLE_EQ(m3.jacobian, -1.0);
}

TEST(Metrics, JacobianFactorization) {
  std::mt19937 gen(707);
  for (int trial = 0; trial < 100; ++trial) {
    const PHarmonicMap f = random_map(gen, 4, 8, 1.0);
    const WirtingerJet jet = wirtinger(f, random_point(gen, 0.95));
    const PointMetrics m = metrics(jet);
    const double direct = std::norm(jet.f_z) - std::norm(jet.f_zbar);
    const double scale = std::max(1.0, std::abs(direct));
    EXPECT_LE(std::abs(m.jacobian - direct), 1e-12 * scale);
  }
}

TEST(CoefficientExtremal, AttainsSharpBound) {
  const HarmonicSeries s = coefficient_extremal_series(1, 1.0, {1.0, 0.0},
                                                       {1.0, 0.0}, 1);
  const double pi = std::numbers::pi;
  expect_close(s.c(1), Complex{0.0, -2.0 / pi}, 1e-15);
  expect_close(s.d(1), Complex{0.0, 2.0 / pi}, 1e-15);
  EXPECT_LE(std::abs(std::abs(s.c(1)) + std::abs(s.d(1)) - 4.0 / pi), 1e-12);
}

TEST(CoefficientExtremal, ShiftedSlotAndHigherTerms) {
  const HarmonicSeries s = coefficient_extremal_series(2, 1.5, {1.0, 0.0},
                                                       {0.0, 1.0}, 3);
  EXPECT_EQ(s.c(1), Complex{});
  EXPECT_EQ(s.d(1), Complex{});
  const double pi = std::numbers::pi;
  EXPECT_LE(std::abs(std::abs(s.c(2)) + std::abs(s.d(2)) - 6.0 / pi), 1e-12);
  // k = 2 populates slot n(2k-1) = 6 with a 1/3 falloff
  EXPECT_LE(std::abs(std::abs(s.c(6)) - 1.0 / pi), 1e-12);
}

TEST(CoefficientExtremal, Validation) {
  EXPECT_THROW(coefficient_extremal_series(0, 1.0, {1, 0}, {1, 0}, 1),
               std::invalid_argument);
  EXPECT_THROW(coefficient_extremal_series(1, -1.0, {1, 0}, {1, 0}, 1),
               std::invalid_argument);
  EXPECT_THROW(coefficient_extremal_series(1, 1.0, {0.9, 0}, {1, 0}, 1),
               std::invalid_argument);
  EXPECT_THROW(coefficient_extremal_series(1, 1.0, {1, 0}, {1, 0}, 0),
               std::invalid_argument);
  EXPECT_TRUE(coefficient_extremal_series(1, 0.0, {1, 0}, {1, 0}, 2).is_zero());
}

TEST(CoefficientBounds, ReportSlackAndSup) {
  const HarmonicSeries s = coefficient_extremal_series(1, 1.0, {1.0, 0.0},
                                                       {1.0, 0.0}, 50);
  const CoefficientBoundReport rep = coefficient_bound_report(s, 1.0);
  ASSERT_GE(rep.slack.size(), 1u);
  EXPECT_LE(std::abs(rep.slack[0]), 1e-12);  // sharp at n = 1
  EXPECT_GE(rep.min_slack(), -1e-12);
  // The partial sum overshoots the limit near the boundary jump (Gibbs),
  // by at most ~18 percent.
  EXPECT_GT(rep.sampled_sup, 0.9);
  EXPECT_LT(rep.sampled_sup, 1.2);

  const CoefficientBoundReport ident_rep =
      coefficient_bound_report(HarmonicSeries::identity(), 1.0);
  EXPECT_NEAR(ident_rep.slack[0], 4.0 / std::numbers::pi - 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(ident_rep.c0_slack, 1.0);
}

TEST(CoefficientBounds, HeinzColonnaGrowth) {
  std::mt19937 gen(808);
  const double pi = std::numbers::pi;
  for (int trial = 0; trial < 100; ++trial) {
    HarmonicSeries s = random_series(gen, 8, 1.0);
    s.set_c0(Complex{});
    const double total = testsupport::coefficient_sum(s);
    if (total == 0.0) continue;
    const double target = testsupport::uniform(gen, 0.3, 1.0);
    s = s.scaled(Complex{target / total, 0.0});

    const PHarmonicMap f{s};
    const JetEvaluator jets(f);
    for (int i = 0; i < 20; ++i) {
      const Complex z = random_point(gen, 0.95);
      const double r = std::abs(z);
      EXPECT_LE(std::abs(s(z)), 4.0 / pi * std::atan(r) + 1e-9);
      const double Lambda = metrics(jets.at(z)).Lambda;
      EXPECT_LE(Lambda, 4.0 / pi / (1.0 - r * r) + 1e-9);
    }
  }
}
