#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dampwave/errors.hpp"
#include "dampwave/riemann.hpp"

using namespace dampwave;

namespace {

DampingFunction cubic(double c) {
  return DampingFunction::custom([c](double J) { return J + c * J * J * J; },
                                 [c](double J) { return 1.0 + 3.0 * c * J * J; }, "cubic");
}

DampingFunction tanh_g() {
  return DampingFunction::custom([](double J) { return std::tanh(J); },
                                 [](double J) { return 1.0 - std::tanh(J) * std::tanh(J); }, "tanh");
}

}  // namespace

TEST(Damping, LinearIsExactIdentity) {
  const auto g = DampingFunction::linear();
  EXPECT_EQ(g(0.3), 0.3);
  EXPECT_EQ(g.derivative(-7.0), 1.0);
  EXPECT_TRUE(g.is_linear());
  EXPECT_EQ(g.certify(-2.0, 2.0), 1.0);
}

TEST(Damping, CertifyRejectsBadFunctions) {
  const auto shifted = DampingFunction::custom([](double J) { return J + 1.0; }, [](double) { return 1.0; });
  EXPECT_THROW(shifted.certify(-1.0, 1.0), ConfigurationError);
  const auto decreasing = DampingFunction::custom([](double J) { return -J; }, [](double) { return -1.0; });
  EXPECT_THROW(decreasing.certify(-1.0, 1.0), ConfigurationError);
}

TEST(Damping, ShiftedVanishesAtZero) {
  const auto g = cubic(0.5);
  const auto s = g.shifted(1.0);
  EXPECT_DOUBLE_EQ(s(0.0), 0.0);
  EXPECT_DOUBLE_EQ(s(0.4), g(1.4) - g(1.0));
  EXPECT_DOUBLE_EQ(s.derivative(0.4), g.derivative(1.4));
  EXPECT_TRUE(DampingFunction::linear().shifted(2.0).is_linear());
}

TEST(SolveMiddleJ, Examples) {
  const auto g = DampingFunction::linear();
  EXPECT_EQ(solve_middle_J(0.9, 0.2, 0.0, g), 0.9 - 0.2);
  EXPECT_EQ(solve_middle_J(0.4, 0.4, 0.8, cubic(2.0)), 0.0);
  EXPECT_DOUBLE_EQ(solve_middle_J(1.0, 0.0, 0.5, g), 2.0 / 3.0);
  EXPECT_THROW(solve_middle_J(1.0, 0.0, -0.1, g), ConfigurationError);
}

TEST(SolveMiddleJ, ResidualWithinToleranceForNonlinearG) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  std::uniform_real_distribution<double> del(0.0, 5.0);
  for (const auto& g : {cubic(1.5), tanh_g()}) {
    for (int i = 0; i < 2000; ++i) {
      const double fp = uni(rng);
      const double fm = uni(rng);
      const double d = del(rng);
      const double J = solve_middle_J(fp, fm, d, g);
      const double rhs = fp - fm;
      EXPECT_LE(std::abs(J + g(J) * d - rhs), kRootTolerance * (1.0 + std::abs(rhs)));
    }
  }
}

TEST(SolveRiemann, StationaryZeroFluxState) {
  const DiagState s{0.2, 0.2};
  const RiemannFan fan = solve_riemann(s, s, 0.3, 1.0, DampingFunction::linear());
  EXPECT_EQ(fan.sigma_minus1, 0.0);
  EXPECT_EQ(fan.sigma_plus1, 0.0);
  EXPECT_EQ(fan.J_star, 0.0);
  EXPECT_EQ(fan.rho_star_right - fan.rho_star_left, 0.0);
}

TEST(SolveRiemann, DecoupledTransportWithoutZeroWave) {
  const DiagState l{0.1, -0.4};
  const DiagState r{0.7, 0.25};
  const RiemannFan fan = solve_riemann(l, r, 0.0, 1.0, DampingFunction::linear());
  EXPECT_DOUBLE_EQ(fan.sigma_plus1, r.f_plus - l.f_plus);
  EXPECT_DOUBLE_EQ(fan.sigma_minus1, -(r.f_minus - l.f_minus));
}

TEST(SolveRiemann, FanIdentities) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const auto g = cubic(0.3);
  for (int i = 0; i < 1000; ++i) {
    const DiagState l{uni(rng), uni(rng)};
    const DiagState r{uni(rng), uni(rng)};
    const double delta = 0.05;
    const double alpha = 0.7;
    const RiemannFan fan = solve_riemann(l, r, delta, alpha, g);
    EXPECT_NEAR(fan.rho_star_right - fan.rho_star_left, -2.0 * g(fan.J_star) * delta * alpha, 1e-14);
    EXPECT_NEAR(fan.sigma_minus1 + fan.sigma_plus1, r.J() - l.J(), 1e-15);
    // f+ continuous across the (-1)-wave, f- across the (+1)-wave
    EXPECT_NEAR(fan.star_left().f_plus, l.f_plus, 1e-15);
    EXPECT_NEAR(fan.star_right().f_minus, r.f_minus, 1e-15);
  }
}

TEST(SolveRiemann, InvariantSquareAndSizeBound) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const auto g = DampingFunction::linear();
  const double delta_eff = 0.2;
  const double C0 = std::max(g(2.0), -g(-2.0));
  for (int i = 0; i < 10000; ++i) {
    const DiagState l{uni(rng), uni(rng)};
    const DiagState r{uni(rng), uni(rng)};
    const RiemannFan fan = solve_riemann(l, r, delta_eff, 1.0, g);
    const double lo = std::min({l.f_minus, l.f_plus, r.f_minus, r.f_plus});
    const double hi = std::max({l.f_minus, l.f_plus, r.f_minus, r.f_plus});
    for (const DiagState& s : {fan.star_left(), fan.star_right()}) {
      EXPECT_GE(s.f_minus, lo - 1e-12);
      EXPECT_LE(s.f_minus, hi + 1e-12);
      EXPECT_GE(s.f_plus, lo - 1e-12);
      EXPECT_LE(s.f_plus, hi + 1e-12);
    }
    EXPECT_LE(std::abs(std::abs(fan.sigma_plus1) - std::abs(r.f_plus - l.f_plus)), C0 * delta_eff + 1e-12);
    EXPECT_LE(std::abs(std::abs(fan.sigma_minus1) - std::abs(r.f_minus - l.f_minus)), C0 * delta_eff + 1e-12);
  }
}

TEST(SolveRiemann, RejectsSmallnessViolation) {
  const DiagState s{0.0, 0.5};
  EXPECT_THROW(solve_riemann(s, s, 1.5, 1.0, DampingFunction::linear()), ConfigurationError);
  EXPECT_THROW(solve_riemann(s, s, 0.1, 1.5, DampingFunction::linear()), ConfigurationError);
}

TEST(BoundaryReflect, Examples) {
  EXPECT_EQ(boundary_reflect(Side::left, DiagState{0.3, 0.3}), 0.0);
  EXPECT_DOUBLE_EQ(boundary_reflect(Side::left, DiagState{0.2, 0.5}), 0.3);
  EXPECT_DOUBLE_EQ(boundary_reflect(Side::right, DiagState{0.2, 0.5}), -0.3);
}

TEST(BoundaryReflect, RightWallMatchesMirrorRiemannProblem) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const DiagState adj{uni(rng), uni(rng)};
    const DiagState mirror = DiagState::from_rho_J(adj.rho(), -adj.J());
    const RiemannFan fan = solve_riemann(adj, mirror, 0.0, 1.0, DampingFunction::linear());
    EXPECT_NEAR(fan.J_star, 0.0, 1e-15);
    EXPECT_NEAR(boundary_reflect(Side::right, adj), fan.sigma_minus1, 1e-15);
    // left wall: mirror on the other side
    const RiemannFan left = solve_riemann(mirror, adj, 0.0, 1.0, DampingFunction::linear());
    EXPECT_NEAR(boundary_reflect(Side::left, adj), left.sigma_plus1, 1e-15);
  }
}

TEST(MultipleInteraction, PureCrossingWithoutZeroWave) {
  const auto r = multiple_interaction({0.2, -0.1}, 0.3, 0.0, 1.0, 1.0, DampingFunction::linear());
  EXPECT_DOUBLE_EQ(r.sigma_out[0], -0.1);
  EXPECT_DOUBLE_EQ(r.sigma_out[1], 0.2);
  EXPECT_DOUBLE_EQ(r.J_star_plus, 0.3 - 0.2 - 0.1);
}

TEST(MultipleInteraction, ZeroIsInvariant) {
  const auto r = multiple_interaction({0.0, 0.0}, 0.0, 0.1, 0.2, 0.9, cubic(1.0));
  EXPECT_EQ(r.sigma_out[0], 0.0);
  EXPECT_EQ(r.sigma_out[1], 0.0);
}

TEST(MultipleInteraction, AgreesWithResolvedRiemannProblem) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-0.5, 0.5);
  std::uniform_real_distribution<double> a01(0.0, 1.0);
  for (const auto& g : {DampingFunction::linear(), cubic(0.8)}) {
    for (int i = 0; i < 500; ++i) {
      const double s_r = uni(rng);
      const double s_l = uni(rng);
      const double Jm = uni(rng);
      const double delta = 0.05;
      const double am = a01(rng);
      const double ap = a01(rng);
      // outer states of the incoming configuration, rho*_left chosen freely
      const double rho_star_left = uni(rng);
      const double rho_star_right = rho_star_left - 2.0 * g(Jm) * delta * am;
      const DiagState Ul = DiagState::from_rho_J(rho_star_left - s_r, Jm - s_r);
      const DiagState Ur = DiagState::from_rho_J(rho_star_right - s_l, Jm + s_l);
      const RiemannFan fan = solve_riemann(Ul, Ur, delta, ap, g);
      const auto r = multiple_interaction({s_r, s_l}, Jm, delta, am, ap, g);
      EXPECT_NEAR(r.sigma_out[0], fan.sigma_minus1, 1e-12);
      EXPECT_NEAR(r.sigma_out[1], fan.sigma_plus1, 1e-12);
      EXPECT_NEAR(r.J_star_plus, fan.J_star, 1e-12);
    }
  }
}

TEST(MultipleInteraction, ConservationIncreaseBoundAndPathEquivalence) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> a01(0.0, 1.0);
  const auto g = DampingFunction::linear();
  for (int i = 0; i < 10000; ++i) {
    const std::array<double, 2> in{uni(rng), uni(rng)};
    const double Jm = uni(rng);
    const double delta = 0.4 * a01(rng);
    const double am = a01(rng);
    const double ap = a01(rng);
    const auto mat = multiple_interaction(in, Jm, delta, am, ap, g, InteractionPath::matrix);
    const auto root = multiple_interaction(in, Jm, delta, am, ap, g, InteractionPath::root_solve);
    EXPECT_NEAR(mat.sigma_out[0] + mat.sigma_out[1], in[0] + in[1], 1e-13);
    const double C0 = std::abs(g(Jm));
    EXPECT_LE(std::abs(mat.sigma_out[0]) + std::abs(mat.sigma_out[1]),
              std::abs(in[0]) + std::abs(in[1]) + 2.0 * C0 * delta * std::abs(ap - am) + 1e-12);
    EXPECT_NEAR(mat.sigma_out[0], root.sigma_out[0], 1e-12);
    EXPECT_NEAR(mat.sigma_out[1], root.sigma_out[1], 1e-12);
    EXPECT_NEAR(mat.J_star_plus, root.J_star_plus, 1e-12);
  }
}

TEST(MultipleInteraction, MatrixPathNeedsLinearG) {
  EXPECT_THROW(multiple_interaction({0.1, 0.1}, 0.0, 0.1, 1.0, 1.0, cubic(1.0), InteractionPath::matrix),
               ConfigurationError);
  EXPECT_THROW(multiple_interaction({0.1, 0.1}, 0.0, 0.1, 1.0, 1.2, DampingFunction::linear()),
               ConfigurationError);
}
