#include "dampwave/sigma.hpp"

#include <utility>

#include "dampwave/errors.hpp"
#include "dampwave/riemann.hpp"

namespace dampwave {

SigmaState init_sigma(const SampledData& data, const Grid& grid, const DampingFunction& g, double alpha0) {
  const auto N = static_cast<std::size_t>(grid.N);
  if (data.f_minus.size() != N || data.f_plus.size() != N) {
    throw DimensionError("init_sigma: sampled data does not match the grid");
  }
  SigmaState state;
  state.N = grid.N;
  state.sigma.assign(2 * N, 0.0);
  state.alpha_prev = alpha0;
  state.alpha_curr = alpha0;
  state.mass0 = data.mass0;
  state.rho_left = 2.0 * data.f_minus[0];

  auto cell = [&](std::size_t j) { return DiagState{data.f_minus[j], data.f_plus[j]}; };
  state.sigma[0] = boundary_reflect(Side::left, cell(0));
  for (std::size_t j = 1; j < N; ++j) {
    const RiemannFan fan = solve_riemann(cell(j - 1), cell(j), grid.delta[j - 1], alpha0, g);
    state.sigma[2 * j - 1] = fan.sigma_minus1;
    state.sigma[2 * j] = fan.sigma_plus1;
  }
  state.sigma[2 * N - 1] = boundary_reflect(Side::right, cell(N - 1));
  return state;
}

void half_step(SigmaState& state) {
  if (state.phase != Phase::post_integer) {
    throw SequencingError("half_step requires the post-integer phase");
  }
  for (std::size_t i = 0; i + 1 < state.sigma.size(); i += 2) {
    std::swap(state.sigma[i], state.sigma[i + 1]);
  }
  state.phase = Phase::post_half;
}

void full_step(SigmaState& state, const Grid& grid, const ProblemSpec& spec, StepMethod method) {
  if (state.phase != Phase::post_half) {
    throw SequencingError("full_step requires the post-half phase");
  }
  if (state.N != grid.N) {
    throw DimensionError("full_step: state and grid sizes differ");
  }
  if (method == StepMethod::automatic) {
    method = spec.g.is_linear() ? StepMethod::explicit_linear : StepMethod::root_solve;
  }
  if (method == StepMethod::explicit_linear && !spec.g.is_linear()) {
    throw ConfigurationError("explicit_linear stepping requires linear g");
  }

  auto& w = state.sigma;
  const auto N = static_cast<std::size_t>(grid.N);
  state.alpha_prev = state.alpha_curr;
  state.alpha_curr = spec.alpha.value_at(static_cast<double>(state.n + 1) / grid.N);
  const double a_prev = state.alpha_prev;
  const double a_curr = state.alpha_curr;

  // the (-1)-wave hitting x = 0 is reflected with the same size
  state.rho_left -= 2.0 * w[0];

  double prefix = w[0];
  for (std::size_t j = 1; j < N; ++j) {
    const std::size_t a = 2 * j - 1;
    const std::size_t b = 2 * j;
    const double J_node = prefix + w[a];
    const double delta = grid.delta[j - 1];
    const double from_left = w[a];
    const double from_right = w[b];
    if (method == StepMethod::explicit_linear) {
      const double gamma = delta * a_curr;
      const double p = J_node * delta / (1.0 + gamma);
      const double source = (a_curr - a_prev) * p;
      w[a] = (gamma * from_left + from_right) / (1.0 + gamma) - source;
      w[b] = (from_left + gamma * from_right) / (1.0 + gamma) + source;
    } else {
      const InteractionResult r =
          detail::interaction_by_root({from_left, from_right}, J_node, delta, a_prev, a_curr, spec.g);
      w[a] = r.sigma_out[0];
      w[b] = r.sigma_out[1];
    }
    prefix += from_left + from_right;
  }

  ++state.n;
  state.phase = Phase::post_integer;
}

}  // namespace dampwave
