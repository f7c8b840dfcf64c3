#pragma once

#include <vector>

#include "dampwave/grid.hpp"
#include "dampwave/problem.hpp"
#include "dampwave/sigma.hpp"

namespace dampwave {

/// Piecewise-constant fields recovered from a sigma state.
/// Cell j is [x_j, x_{j+1}]; `*_left` is the trace at x_j+, `*_right` the trace at x_{j+1}-.
struct FieldSnapshot {
  double t = 0.0;
  long n = 0;
  Phase phase = Phase::post_integer;
  int N = 0;

  std::vector<double> rho;  ///< cell averages
  std::vector<double> J;    ///< cell averages
  std::vector<double> rho_left;
  std::vector<double> rho_right;
  std::vector<double> J_node;  ///< J(x_j), j = 0..N
  /// State strictly inside the cell between the waves just emitted at t^n+; post_integer only.
  std::vector<double> rho_bulk;
  std::vector<double> J_bulk;
  std::vector<double> u;  ///< int_0^{x_j} rho, j = 0..N

  /// rho(0+) fixed by mass matching, and the value tracked through the wall reflections.
  double rho0_matched = 0.0;
  double rho0_tracked = 0.0;

  double f_minus(std::size_t j) const { return 0.5 * (rho[j] - J[j]); }
  double f_plus(std::size_t j) const { return 0.5 * (rho[j] + J[j]); }
  double f_minus_left(std::size_t j) const { return 0.5 * (rho_left[j] - J_node[j]); }
  double f_plus_left(std::size_t j) const { return 0.5 * (rho_left[j] + J_node[j]); }
  double f_minus_right(std::size_t j) const { return 0.5 * (rho_right[j] - J_node[j + 1]); }
  double f_plus_right(std::size_t j) const { return 0.5 * (rho_right[j] + J_node[j + 1]); }
};

FieldSnapshot reconstruct_fields(const SigmaState& state, const Grid& grid, const ProblemSpec& spec);

/// Range of f+ and f- over a snapshot.
struct DiagRange {
  double sup_fp = 0.0;
  double inf_fp = 0.0;
  double sup_fm = 0.0;
  double inf_fm = 0.0;

  double sup() const noexcept { return sup_fp > sup_fm ? sup_fp : sup_fm; }
  double inf() const noexcept { return inf_fp < inf_fm ? inf_fp : inf_fm; }
  double width() const noexcept { return sup() - inf(); }
};

/// Range over the node traces f(x_j+), f(x_{j+1}-) and, after integer steps, the cell bulk.
DiagRange diag_range(const FieldSnapshot& snap);

struct DiagnosticsRecord {
  long n = 0;
  double t = 0.0;
  Phase phase = Phase::post_integer;
  /// Discrete mass with rho(0+) taken from the wall-reflection tracking.
  double mass = 0.0;
  double mass_drift = 0.0;
  DiagRange range;
  double tv_J = 0.0;
  double tv_rho = 0.0;
  double sigma_dot_e = 0.0;
  double sigma_dot_vminus = 0.0;
  double linf_J = 0.0;
  double linf_rho = 0.0;
};

DiagnosticsRecord diagnostics(const SigmaState& state, const FieldSnapshot& snap, const Grid& grid,
                              const ProblemSpec& spec);

/// Adds back rho_beta (at cell midpoints) and beta when the problem was homogenized.
FieldSnapshot unshift(const FieldSnapshot& snap, const ProblemSpec& spec);

/// ||sigma||_1 summed in sorted order, hence invariant under permutations of sigma.
double l1_norm_sorted(const std::vector<double>& w);

}  // namespace dampwave
