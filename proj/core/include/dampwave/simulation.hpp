#pragma once

#include <vector>

#include "dampwave/fields.hpp"
#include "dampwave/grid.hpp"
#include "dampwave/problem.hpp"
#include "dampwave/sigma.hpp"

namespace dampwave {

/// Owns the grid, sampled data and sigma state of one run.
/// A problem with beta != 0 is homogenized on construction.
class Simulation {
 public:
  Simulation(const ProblemSpec& spec, int N, StepMethod method = StepMethod::automatic);

  const ProblemSpec& spec() const noexcept { return spec_; }
  const Grid& grid() const noexcept { return grid_; }
  const SampledData& data() const noexcept { return data_; }
  const SigmaState& state() const noexcept { return state_; }
  StepMethod method() const noexcept { return method_; }

  void half_step();
  void full_step();
  /// Half step followed by full step.
  void step();
  void advance_steps(long count);

  FieldSnapshot snapshot() const;
  DiagnosticsRecord diagnostics() const;

 private:
  ProblemSpec spec_;
  StepMethod method_;
  Grid grid_;
  SampledData data_;
  SigmaState state_;
};

struct RunResult {
  std::vector<FieldSnapshot> snapshots;
  /// Initial record, then one after every half and every full step.
  std::vector<DiagnosticsRecord> diagnostics;
};

/// ceil(t_end N) steps; a snapshot at n = 0 and at every multiple of emit_every.
RunResult run(const ProblemSpec& spec, int N, double t_end, int emit_every,
              StepMethod method = StepMethod::automatic);

long steps_for(double t_end, int N);

}  // namespace dampwave
