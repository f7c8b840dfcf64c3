#include <gtest/gtest.h>

#include <cmath>

#include "dampwave/errors.hpp"
#include "dampwave/grid.hpp"
#include "dampwave/problem.hpp"

using namespace dampwave;

TEST(KProfile, ConstantAndPiecewiseIntegrals) {
  const auto k = KProfile::constant(0.5);
  EXPECT_DOUBLE_EQ(k.integral(0.25, 0.5), 0.125);
  EXPECT_DOUBLE_EQ(k.complement_moment(), 0.25);
  const auto p = KProfile::piecewise({0.5}, {1.0, 0.0});
  EXPECT_DOUBLE_EQ(p.integral(0.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(p.integral(0.25, 0.75), 0.25);
  EXPECT_DOUBLE_EQ(p.value(0.5), 0.0);
  EXPECT_DOUBLE_EQ(p.complement_moment(), 0.375);
  EXPECT_EQ(p.sup(), 1.0);
}

TEST(KProfile, TabulatedLinearInterpolation) {
  const auto t = KProfile::tabulated({0.0, 1.0});
  EXPECT_DOUBLE_EQ(t.value(0.25), 0.25);
  EXPECT_NEAR(t.integral(0.0, 1.0), 0.5, 1e-14);
}

TEST(KProfile, RejectsNegativeValues) {
  EXPECT_THROW(KProfile::constant(-0.1), ConfigurationError);
  EXPECT_THROW(KProfile::piecewise({0.5}, {1.0, -1.0}), ConfigurationError);
}

TEST(AlphaSchedule, OnOffIsRightContinuous) {
  const auto a = AlphaSchedule::on_off(1.0, 2.0);
  EXPECT_EQ(a.value_at(0.0), 1.0);
  EXPECT_EQ(a.value_at(0.999), 1.0);
  EXPECT_EQ(a.value_at(1.0), 0.0);
  EXPECT_EQ(a.value_at(1.999), 0.0);
  EXPECT_EQ(a.value_at(2.0), 1.0);
  EXPECT_EQ(a.value_at(3.5), 0.0);
  EXPECT_DOUBLE_EQ(a.total_variation(4.5), 4.0);
  EXPECT_THROW(AlphaSchedule::constant(1.5), ConfigurationError);
}

TEST(Grid, NodeMassesForConstantAndPiecewiseK) {
  ProblemSpec spec;
  spec.k = KProfile::constant(0.5);
  const Grid g = build_grid(spec, 4);
  ASSERT_EQ(g.delta.size(), 3u);
  for (double v : g.delta) {
    EXPECT_DOUBLE_EQ(v, 0.125);
  }
  spec.k = KProfile::piecewise({0.5}, {1.0, 0.0});
  const Grid p = build_grid(spec, 4);
  EXPECT_DOUBLE_EQ(p.delta[0], 0.25);
  EXPECT_DOUBLE_EQ(p.delta[1], 0.25);
  EXPECT_DOUBLE_EQ(p.delta[2], 0.0);
}

TEST(Grid, RejectsOddNAndSmallnessViolation) {
  ProblemSpec spec;
  EXPECT_THROW(build_grid(spec, 3), ConfigurationError);
  spec.k = KProfile::constant(8.0);
  try {
    build_grid(spec, 4);
    FAIL() << "expected ConfigurationError";
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("refine N"), std::string::npos);
  }
  EXPECT_NO_THROW(build_grid(spec, 16));
}

TEST(Homogenize, ZeroBetaIsIdentity) {
  ProblemSpec spec;
  spec.k = KProfile::constant(0.5);
  const ProblemSpec h = homogenize_boundary(spec);
  EXPECT_FALSE(h.shift.has_value());
}

TEST(Homogenize, ConstantFromMassBalance) {
  ProblemSpec spec;
  spec.k = KProfile::constant(1.0);
  spec.beta = 1.0;
  spec.initial = InitialData::analytic([](double) { return 0.0; }, [](double) { return 1.0; });
  const ProblemSpec h = homogenize_boundary(spec);
  ASSERT_TRUE(h.shift.has_value());
  // int rho_beta = C - 2 g(beta) int_0^1 x dx = 0 so C = d
  EXPECT_DOUBLE_EQ(h.shift->constant, 1.0);
  EXPECT_DOUBLE_EQ(h.g(0.0), 0.0);
  // homogenized data: w = J0 - beta = 0, v = rho0 - rho_beta
  const SampledData s = sample_initial(h, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(s.J(j), 0.0, 1e-15);
    EXPECT_NEAR(s.rho(j), -(1.0 - 2.0 * 0.25 * static_cast<double>(j)), 1e-15);
  }
  spec.alpha = AlphaSchedule::on_off(1.0, 2.0);
  EXPECT_THROW(homogenize_boundary(spec), ConfigurationError);
}

TEST(SampleInitial, CellDataAndBounds) {
  ProblemSpec spec;
  spec.initial = InitialData::cells({0.0, 0.4}, {0.2, 0.0});
  const SampledData s = sample_initial(spec, 2);
  EXPECT_DOUBLE_EQ(s.m, 0.0);
  EXPECT_DOUBLE_EQ(s.M, 0.4);
  EXPECT_DOUBLE_EQ(s.mass0, 0.5 * (0.2 + 0.4));
  EXPECT_THROW(sample_initial(spec, 4), DimensionError);
}

TEST(WorkingInterval, CoversShiftedRange) {
  const auto [lo, hi] = working_interval(-1.0, 1.0);
  EXPECT_LE(lo, -2.0);
  EXPECT_GE(hi, 2.0);
}
