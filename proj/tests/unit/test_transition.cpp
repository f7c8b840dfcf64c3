#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dampwave/errors.hpp"
#include "dampwave/special.hpp"
#include "dampwave/transition.hpp"

using namespace dampwave;

namespace {

// B2(gamma) built entry by entry from the block rule
Eigen::MatrixXd B2_by_hand(const Vec& gamma) {
  const int N = static_cast<int>(gamma.size()) + 1;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  M(0, 0) = 1.0;
  M(2 * N - 1, 2 * N - 1) = 1.0;
  for (int j = 1; j < N; ++j) {
    const double g = gamma[static_cast<std::size_t>(j - 1)];
    const int a = 2 * j - 1;
    const int b = 2 * j;
    M(a, a) = g / (1.0 + g);
    M(a, b) = 1.0 / (1.0 + g);
    M(b, a) = 1.0 / (1.0 + g);
    M(b, b) = g / (1.0 + g);
  }
  return M;
}

Eigen::MatrixXd B1_by_hand(int N) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    M(2 * i, 2 * i + 1) = 1.0;
    M(2 * i + 1, 2 * i) = 1.0;
  }
  return M;
}

Vec random_gamma(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vec g(static_cast<std::size_t>(N - 1));
  for (auto& v : g) {
    v = uni(rng);
  }
  return g;
}

}  // namespace

TEST(Transition, B1Examples) {
  EXPECT_EQ(apply_B1({1, 2, 3, 4}), (Vec{2, 1, 4, 3}));
  EXPECT_EQ(apply_B1({0.5, -0.5}), (Vec{-0.5, 0.5}));
}

TEST(Transition, DenseMatchesHandBuiltMatrices) {
  std::mt19937_64 rng(1);
  for (int N : {2, 3, 4, 8}) {
    const Vec gamma = random_gamma(rng, N);
    EXPECT_EQ((dense(StructuredOperator::B1(N)) - B1_by_hand(N)).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE((dense(StructuredOperator::B2(gamma)) - B2_by_hand(gamma)).cwiseAbs().maxCoeff(), 1e-16);
    const Eigen::MatrixXd B = B2_by_hand(gamma) * B1_by_hand(N);
    EXPECT_LE((dense(StructuredOperator::B(gamma)) - B).cwiseAbs().maxCoeff(), 1e-16);
    Eigen::MatrixXd bt(2 * N, 2 * N);
    for (int i = 0; i < 2 * N; ++i) {
      Vec e(static_cast<std::size_t>(2 * N), 0.0);
      e[static_cast<std::size_t>(i)] = 1.0;
      bt.col(i) = Eigen::Map<const Eigen::VectorXd>(apply_B_transpose(gamma, e).data(), 2 * N);
    }
    EXPECT_LE((bt - B.transpose()).cwiseAbs().maxCoeff(), 1e-16);
  }
}

TEST(Transition, DoublyStochasticWithEigenvectors) {
  std::mt19937_64 rng(2);
  for (int N : {2, 6, 16}) {
    const Vec gamma = random_gamma(rng, N);
    const Eigen::MatrixXd B = dense(StructuredOperator::B(gamma));
    EXPECT_LE((B.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-15);
    EXPECT_LE((B.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-15);
    EXPECT_GE(B.minCoeff(), 0.0);
    const Vec vm = v_minus_vector(N);
    const Vec r = apply_B_transpose(gamma, vm);
    for (std::size_t i = 0; i < vm.size(); ++i) {
      EXPECT_NEAR(r[i], -vm[i], 1e-15);
    }
  }
}

TEST(Transition, SourceTermEntersAntisymmetrically) {
  const Vec w{0.1, 0.2, 0.3, 0.4};
  const Vec gamma{0.5};
  const Vec plain = apply_B2(gamma, w);
  const Vec src = apply_B2(gamma, w, {0.25}, -1.0);
  EXPECT_DOUBLE_EQ(src[1] - plain[1], 0.25);
  EXPECT_DOUBLE_EQ(src[2] - plain[2], -0.25);
  EXPECT_EQ(src[0], plain[0]);
  EXPECT_EQ(src[3], plain[3]);
}

TEST(Transition, PermutationPowers) {
  for (int N : {2, 8, 64}) {
    const PermutationPower P(N);
    const auto id = P.index_map(2 * N);
    const auto anti = P.index_map(N);
    const auto back = P.index_map(-N);
    for (int i = 0; i < 2 * N; ++i) {
      EXPECT_EQ(id[static_cast<std::size_t>(i)], i);
      EXPECT_EQ(anti[static_cast<std::size_t>(i)], 2 * N - 1 - i);
      EXPECT_EQ(back[static_cast<std::size_t>(i)], 2 * N - 1 - i);
    }
    int total = 0;
    for (int len : P.cycle_lengths()) {
      EXPECT_EQ(len, 2 * N);
      total += len;
    }
    EXPECT_EQ(total, 2 * N);
  }
}

TEST(Transition, PowerMatchesRepeatedApplication) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int N = 6;
  Vec w(12);
  for (auto& v : w) {
    v = uni(rng);
  }
  const PermutationPower P(N);
  Vec r = w;
  const Vec zero = uniform_gamma(N, 0.0);
  for (int p = 1; p <= 15; ++p) {
    r = apply_B(zero, r);
    EXPECT_EQ(P.apply(p, w), r);
  }
}

TEST(Transition, CycleAverageIsHatP) {
  for (int N : {2, 4, 8}) {
    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int j = 0; j < N; ++j) {
      avg += dense(StructuredOperator::B0_power(N, 2 * j));
    }
    avg /= N;
    EXPECT_LE((avg - dense(StructuredOperator::hat_P(N))).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Transition, PhiProperties) {
  const Vec f = phi({1, 2, 3, 4});
  EXPECT_EQ(f, (Vec{10, -3, 3, -10}));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int N : {2, 4, 16}) {
    Vec w(static_cast<std::size_t>(2 * N));
    for (auto& v : w) {
      v = uni(rng);
    }
    const double mean = dot(w, ones_vector(N)) / (2.0 * N);
    for (auto& v : w) {
      v -= mean;
    }
    const Vec pw = phi(w);
    EXPECT_NEAR(dot(pw, ones_vector(N)), 0.0, 1e-13);
    const Vec ppw = phi(pw);
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_NEAR(ppw[i], -pw[i], 1e-13);
    }
  }
}

TEST(Transition, CoefficientsAgainstBinomialSums) {
  const int N = 12;
  const double d = 0.9;
  const double g = d / N;
  auto binom = [](int n, int k) { return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)); };
  for (int j = 0; j < N; ++j) {
    double z = 0.0;
    for (int l = 1; l <= std::min(j, N - j - 1); ++l) {
      z += std::pow(g, 2 * l + 1) * binom(j, l) * binom(N - j - 1, l);
    }
    double e = 0.0;
    for (int i = 1; i <= std::min(j, N - j); ++i) {
      e += std::pow(g, 2 * i) * binom(j, i) * binom(N - j - 1, i - 1);
    }
    EXPECT_NEAR(zeta_coeff(j, N, d), z, 1e-15);
    if (j >= 1) {
      EXPECT_NEAR(eta_coeff(j, N, d), e, 1e-15);
    }
  }
  EXPECT_EQ(zeta_coeff(0, N, d), 0.0);
  EXPECT_THROW(eta_coeff(0, N, d), DimensionError);
}

TEST(Transition, ExpansionIdentity) {
  for (int N : {2, 4, 8, 32}) {
    for (double d : {0.1, 0.7, 1.5}) {
      EXPECT_LE(expansion_residual(N, d), 1e-12) << "N = " << N << ", d = " << d;
    }
  }
}

TEST(Transition, CoefficientBounds) {
  for (int N : {8, 64, 512}) {
    for (double d : {0.25, 0.5, 1.0}) {
      const CoefficientSums s = coefficient_sums(N, d);
      EXPECT_LE(s.zeta + s.eta, std::expm1(d) - d + K_of_d(d) / N + 1e-12);
      EXPECT_LE(s.zeta, std::sinh(d) - d + f0_of_d(d) / N + 1e-12);
      EXPECT_LE(s.eta, std::cosh(d) - 1.0 + f1_of_d(d) / N + 1e-12);
    }
  }
}

TEST(Transition, DenseGuardAndLengthChecks) {
  EXPECT_THROW(dense(StructuredOperator::B1(513)), DimensionError);
  EXPECT_THROW(apply_B2({0.1}, Vec{1.0, 2.0}), DimensionError);
}
