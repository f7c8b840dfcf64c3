#pragma once

// Local solvers for the diagonal system
//
//   f-_t - f-_x =  k alpha g(f+ - f-)
//   f+_t + f+_x = -k alpha g(f+ - f-)
//
// with the source concentrated in stationary 0-waves of strength delta = a_r - a_l.
// Wave sizes follow sigma = [J] for both families, so [f+] = sigma across a
// (+1)-wave and [f-] = -sigma across a (-1)-wave.

#include <array>

#include "dampwave/damping.hpp"

namespace dampwave {

/// Diagonal variables at a point; rho = f+ + f-, J = f+ - f-.
struct DiagState {
  double f_minus = 0.0;
  double f_plus = 0.0;

  double rho() const noexcept { return f_plus + f_minus; }
  double J() const noexcept { return f_plus - f_minus; }

  static DiagState from_rho_J(double rho, double J) noexcept {
    return DiagState{0.5 * (rho - J), 0.5 * (rho + J)};
  }
};

/// Four-state fan: U_l | (-1) | U_* | 0-wave | U_** | (+1) | U_r.
struct RiemannFan {
  double J_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  double sigma_minus1 = 0.0;
  double sigma_plus1 = 0.0;

  DiagState star_left() const noexcept { return DiagState::from_rho_J(rho_star_left, J_star); }
  DiagState star_right() const noexcept { return DiagState::from_rho_J(rho_star_right, J_star); }
};

/// Outgoing sizes in space order: {left-going, right-going}.
struct InteractionResult {
  std::array<double, 2> sigma_out{};
  double J_star_plus = 0.0;
};

enum class Side { left, right };

enum class InteractionPath {
  automatic,   ///< matrix form for linear g, root solve otherwise
  matrix,      ///< closed 2x2 form; requires linear g
  root_solve,  ///< re-solve the middle state regardless of g
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 200;

/// Root of J + g(J) delta_eff = f_plus_left - f_minus_right.
double solve_middle_J(double f_plus_left, double f_minus_right, double delta_eff,
                      const DampingFunction& g);

/// Riemann problem at a 0-wave of strength delta * alpha.
RiemannFan solve_riemann(const DiagState& left, const DiagState& right, double delta, double alpha,
                         const DampingFunction& g);

/// Size of the wave reflected so that J = 0 at the wall.
double boundary_reflect(Side side, const DiagState& adjacent) noexcept;

/// A (+1)-wave and a (-1)-wave meeting on a 0-wave while alpha jumps from
/// alpha_minus to alpha_plus. `sigma_in` is in space order, i.e. {right-going
/// wave arriving from the left, left-going wave arriving from the right}.
InteractionResult multiple_interaction(std::array<double, 2> sigma_in, double J_star_minus,
                                       double delta, double alpha_minus, double alpha_plus,
                                       const DampingFunction& g,
                                       InteractionPath path = InteractionPath::automatic);

namespace detail {

/// Safeguarded Newton/bisection for J + g(J) delta_eff = rhs; no precondition checks.
double monotone_root(double rhs, double delta_eff, const DampingFunction& g);

/// Root-solve interaction without precondition checks (used by the stepper).
InteractionResult interaction_by_root(std::array<double, 2> sigma_in, double J_star_minus,
                                      double delta, double alpha_minus, double alpha_plus,
                                      const DampingFunction& g);

}  // namespace detail
}  // namespace dampwave
