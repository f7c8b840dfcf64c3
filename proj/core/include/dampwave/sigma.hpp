#pragma once

#include <vector>

#include "dampwave/grid.hpp"
#include "dampwave/problem.hpp"

namespace dampwave {

enum class Phase { post_integer, post_half };

enum class StepMethod {
  automatic,        ///< explicit_linear for linear g, root_solve otherwise
  explicit_linear,  ///< closed block rule; requires linear g
  root_solve,       ///< multiple interaction re-solved at every node
};

/// Wave sizes sigma[0..2N-1] in space order after t^n+ (post_integer) or t^{n+1/2}+ (post_half).
struct SigmaState {
  int N = 0;
  std::vector<double> sigma;
  long n = 0;
  Phase phase = Phase::post_integer;
  double alpha_prev = 0.0;
  double alpha_curr = 0.0;
  double mass0 = 0.0;
  /// rho(0+, t), updated by the wall reflections.
  double rho_left = 0.0;

  double time() const noexcept {
    return (static_cast<double>(n) + (phase == Phase::post_half ? 0.5 : 0.0)) / N;
  }
};

/// Waves generated at t = 0+ by the boundaries and the Riemann problems at x_1..x_{N-1}.
SigmaState init_sigma(const SampledData& data, const Grid& grid, const DampingFunction& g, double alpha0);

/// Crossing of the two waves inside each cell. Throws SequencingError unless post_integer.
void half_step(SigmaState& state);

/// Interactions at the nodes at t^{n+1}, with alpha sampled at t^{n+1}+.
/// Throws SequencingError unless post_half.
void full_step(SigmaState& state, const Grid& grid, const ProblemSpec& spec,
               StepMethod method = StepMethod::automatic);

}  // namespace dampwave
