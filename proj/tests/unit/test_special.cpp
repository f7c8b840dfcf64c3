#include <gtest/gtest.h>

#include <cmath>

#include "dampwave/special.hpp"

using namespace dampwave;

TEST(Special, BesselValues) {
  EXPECT_EQ(bessel_I(0, 0.0), 1.0);
  EXPECT_EQ(bessel_I(1, 0.0), 0.0);
  EXPECT_NEAR(bessel_I(0, 1.0), 1.2660658777520084, 1e-15);
  EXPECT_NEAR(bessel_I(1, 1.0), 0.56515910399248503, 1e-15);
}

TEST(Special, KSmallDLimit) {
  EXPECT_NEAR(K_of_d(0.5), 0.16068883806610992, 1e-15);
  EXPECT_NEAR(K_of_d(1e-3) / 1e-6, 0.50025006, 1e-8);
  EXPECT_NEAR(f0_of_d(1e-3) / 1e-9, 0.25, 1e-6);
  EXPECT_GT(f0_of_d(1e-8), 0.0);
}

TEST(Special, ClosedFormConstants) {
  EXPECT_EQ(calC_of_d(0.0), 1.0);
  EXPECT_NEAR(calC_of_d(0.5), 0.8094896831824956, 1e-14);
  EXPECT_NEAR(calC_of_d(1.0), 1.4248439117999037, 1e-14);
  EXPECT_NEAR(calC_N_of_d(256, 0.5), 0.81074154781897726, 1e-14);
  const auto c = contraction_constants(64, 0.5);
  EXPECT_NEAR(c.C_N, 0.69961556640442152, 1e-14);
  EXPECT_NEAR(c.C_limit, 0.69673467014368329, 1e-15);
  EXPECT_NEAR(c.calC_N, 0.81449714748016158, 1e-14);
}

TEST(Special, CriticalD) {
  const double ds = d_star();
  EXPECT_NEAR(ds, 0.74730153822020383, 1e-10);
  EXPECT_NEAR(calC_of_d(ds), 1.0, 1e-10);
}

TEST(Special, LogRateConvergesAtFirstOrder) {
  const double C3 = std::abs(std::log(calC_of_d(0.5)));
  double prev_err = 0.0;
  for (int N : {64, 128, 256, 512}) {
    const double err = std::abs(std::abs(std::log(calC_N_of_d(N, 0.5))) - C3);
    if (prev_err > 0.0) {
      EXPECT_NEAR(prev_err / err, 2.0, 0.1);
    }
    prev_err = err;
  }
}

TEST(Special, CNConvergesToLimit) {
  for (int N : {64, 128, 256, 512}) {
    for (double d : {0.25, 0.5, 1.0}) {
      const auto c = contraction_constants(N, d);
      EXPECT_LE(std::abs(c.C_N - c.C_limit), (K_of_d(d) + d * d * std::exp(d)) / N);
    }
  }
}
