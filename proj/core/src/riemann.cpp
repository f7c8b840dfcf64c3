#include "dampwave/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dampwave/errors.hpp"

namespace dampwave {
namespace {

double residual(double J, double rhs, double delta_eff, const DampingFunction& g) {
  return J + g(J) * delta_eff - rhs;
}

// (sup g') * delta_eff < 1 on a unit neighbourhood of the given J values.
void require_small(double delta_eff, const DampingFunction& g, std::initializer_list<double> Js,
                   const char* where) {
  if (delta_eff < 0.0 || !std::isfinite(delta_eff)) {
    throw ConfigurationError(std::string(where) + ": 0-wave strength must be finite and >= 0");
  }
  const auto [lo, hi] = std::minmax(Js);
  const double sup_slope = g.certify(lo - 1.0, hi + 1.0);
  if (!(sup_slope * delta_eff < 1.0)) {
    std::ostringstream msg;
    msg << where << ": smallness violated, sup g' * delta * alpha = " << sup_slope * delta_eff
        << " >= 1";
    throw ConfigurationError(msg.str());
  }
}

}  // namespace

namespace detail {

double monotone_root(double rhs, double delta_eff, const DampingFunction& g) {
  if (rhs == 0.0 || delta_eff == 0.0) {
    return rhs;
  }
  const double tol = kRootTolerance * (1.0 + std::abs(rhs));

  // g(0) = 0 and g nondecreasing put the root between 0 and rhs.
  double lo = std::min(0.0, rhs);
  double hi = std::max(0.0, rhs);
  double width = hi - lo + 1.0;
  for (int k = 0; k < 64 && residual(lo, rhs, delta_eff, g) > 0.0; ++k, width *= 2.0) {
    lo -= width;
  }
  width = hi - lo + 1.0;
  for (int k = 0; k < 64 && residual(hi, rhs, delta_eff, g) < 0.0; ++k, width *= 2.0) {
    hi += width;
  }

  double J = std::clamp(rhs / (1.0 + delta_eff * g.derivative(0.0)), lo, hi);
  for (int it = 0; it < kRootMaxIterations; ++it) {
    const double r = residual(J, rhs, delta_eff, g);
    if (std::abs(r) <= tol) {
      // one extra Newton correction is free and tightens the root to rounding level
      const double polished = J - r / (1.0 + delta_eff * g.derivative(J));
      return (polished >= lo && polished <= hi) ? polished : J;
    }
    if (r < 0.0) {
      lo = J;
    } else {
      hi = J;
    }
    double next = J - r / (1.0 + delta_eff * g.derivative(J));
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == J) {
      return J;
    }
    J = next;
  }
  throw SolverFailure("middle-state root not converged", lo, hi);
}

InteractionResult interaction_by_root(std::array<double, 2> sigma_in, double J_star_minus,
                                      double delta, double alpha_minus, double alpha_plus,
                                      const DampingFunction& g) {
  const double from_left = sigma_in[0];   // (+1) wave, right-going
  const double from_right = sigma_in[1];  // (-1) wave, left-going
  const double J_left = J_star_minus - from_left;
  const double J_right = J_star_minus + from_right;
  // f+_l - f-_r reconstructed from the incoming configuration
  const double rhs = J_star_minus + g(J_star_minus) * delta * alpha_minus - from_left + from_right;
  const double J_plus = monotone_root(rhs, delta * alpha_plus, g);
  return InteractionResult{{J_plus - J_left, J_right - J_plus}, J_plus};
}

}  // namespace detail

double solve_middle_J(double f_plus_left, double f_minus_right, double delta_eff,
                      const DampingFunction& g) {
  if (delta_eff < 0.0 || !std::isfinite(delta_eff)) {
    throw ConfigurationError("solve_middle_J: delta_eff must be finite and >= 0");
  }
  const double rhs = f_plus_left - f_minus_right;
  if (delta_eff == 0.0) {
    return rhs;
  }
  if (g.is_linear()) {
    return rhs / (1.0 + delta_eff);
  }
  return detail::monotone_root(rhs, delta_eff, g);
}

RiemannFan solve_riemann(const DiagState& left, const DiagState& right, double delta, double alpha,
                         const DampingFunction& g) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigurationError("solve_riemann: alpha must lie in [0, 1]");
  }
  const double delta_eff = delta * alpha;
  require_small(delta_eff, g, {left.J(), right.J(), left.f_plus - right.f_minus}, "solve_riemann");

  RiemannFan fan;
  fan.J_star = solve_middle_J(left.f_plus, right.f_minus, delta_eff, g);
  // f+ is continuous across the (-1)-wave, f- across the (+1)-wave
  fan.rho_star_left = 2.0 * left.f_plus - fan.J_star;
  fan.rho_star_right = 2.0 * right.f_minus + fan.J_star;
  fan.sigma_minus1 = fan.J_star - left.J();
  fan.sigma_plus1 = right.J() - fan.J_star;
  return fan;
}

double boundary_reflect(Side side, const DiagState& adjacent) noexcept {
  return side == Side::left ? adjacent.J() : -adjacent.J();
}

InteractionResult multiple_interaction(std::array<double, 2> sigma_in, double J_star_minus,
                                       double delta, double alpha_minus, double alpha_plus,
                                       const DampingFunction& g, InteractionPath path) {
  for (double a : {alpha_minus, alpha_plus}) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw ConfigurationError("multiple_interaction: alpha must lie in [0, 1]");
    }
  }
  const double J_left = J_star_minus - sigma_in[0];
  const double J_right = J_star_minus + sigma_in[1];
  for (double a : {alpha_minus, alpha_plus}) {
    require_small(delta * a, g, {J_left, J_right, J_star_minus}, "multiple_interaction");
  }

  if (path == InteractionPath::automatic) {
    path = g.is_linear() ? InteractionPath::matrix : InteractionPath::root_solve;
  }
  if (path == InteractionPath::root_solve) {
    return detail::interaction_by_root(sigma_in, J_star_minus, delta, alpha_minus, alpha_plus, g);
  }
  if (!g.is_linear()) {
    throw ConfigurationError("multiple_interaction: matrix form requires linear g");
  }

  const double gamma = delta * alpha_plus;
  const double source = (alpha_plus - alpha_minus) * delta * g(J_star_minus) / (1.0 + gamma);
  const double from_left = sigma_in[0];
  const double from_right = sigma_in[1];
  InteractionResult out;
  out.sigma_out[0] = (from_right + gamma * from_left) / (1.0 + gamma) - source;
  out.sigma_out[1] = (from_left + gamma * from_right) / (1.0 + gamma) + source;
  out.J_star_plus = J_left + out.sigma_out[0];
  return out;
}

}  // namespace dampwave
