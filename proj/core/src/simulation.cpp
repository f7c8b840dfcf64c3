#include "dampwave/simulation.hpp"

#include <cmath>

#include "dampwave/errors.hpp"

namespace dampwave {

Simulation::Simulation(const ProblemSpec& spec, int N, StepMethod method)
    : spec_(homogenize_boundary(spec)),
      method_(method),
      grid_(build_grid(spec_, N)),
      data_(sample_initial(spec_, grid_)),
      state_(init_sigma(data_, grid_, spec_.g, spec_.alpha.value_at(0.0))) {}

void Simulation::half_step() { dampwave::half_step(state_); }

void Simulation::full_step() { dampwave::full_step(state_, grid_, spec_, method_); }

void Simulation::step() {
  half_step();
  full_step();
}

void Simulation::advance_steps(long count) {
  for (long i = 0; i < count; ++i) {
    step();
  }
}

FieldSnapshot Simulation::snapshot() const { return reconstruct_fields(state_, grid_, spec_); }

DiagnosticsRecord Simulation::diagnostics() const {
  return dampwave::diagnostics(state_, snapshot(), grid_, spec_);
}

long steps_for(double t_end, int N) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ConfigurationError("t_end must be finite and >= 0");
  }
  // tolerate representation error in t_end * N before rounding up
  const double raw = t_end * N;
  const double nearest = std::round(raw);
  return static_cast<long>(std::abs(raw - nearest) <= 1e-9 * (1.0 + raw) ? nearest : std::ceil(raw));
}

RunResult run(const ProblemSpec& spec, int N, double t_end, int emit_every, StepMethod method) {
  if (emit_every < 1) {
    throw ConfigurationError("emit_every must be >= 1");
  }
  Simulation sim(spec, N, method);
  const long steps = steps_for(t_end, N);
  RunResult out;
  out.snapshots.push_back(sim.snapshot());
  out.diagnostics.push_back(sim.diagnostics());
  for (long n = 1; n <= steps; ++n) {
    sim.half_step();
    out.diagnostics.push_back(sim.diagnostics());
    sim.full_step();
    const FieldSnapshot snap = sim.snapshot();
    out.diagnostics.push_back(dampwave::diagnostics(sim.state(), snap, sim.grid(), sim.spec()));
    if (n % emit_every == 0) {
      out.snapshots.push_back(snap);
    }
  }
  return out;
}

}  // namespace dampwave
