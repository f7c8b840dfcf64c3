#pragma once

#include <vector>

#include "dampwave/problem.hpp"

namespace dampwave {

/// Uniform grid x_j = j / N with node masses delta_j = int_{x_{j-1}}^{x_j} k.
struct Grid {
  int N = 0;
  double dx = 0.0;
  /// delta[j - 1] holds delta_j for the interior nodes j = 1..N-1.
  std::vector<double> delta;
  /// sup g' over the working interval.
  double sup_slope = 0.0;
  double alpha_sup = 0.0;

  double node(int j) const noexcept { return static_cast<double>(j) * dx; }
  double delta_at(int j) const { return delta[static_cast<std::size_t>(j - 1)]; }
};

/// Cell values f0-(x_j+), f0+(x_j+) with the data bounds m, M.
struct SampledData {
  std::vector<double> f_minus;
  std::vector<double> f_plus;
  double mass0 = 0.0;
  double m = 0.0;
  double M = 0.0;

  double J(std::size_t j) const { return f_plus[j] - f_minus[j]; }
  double rho(std::size_t j) const { return f_plus[j] + f_minus[j]; }
};

/// Throws ConfigurationError for odd or too small N, for beta != 0 (homogenize first)
/// and when (sup g') ||alpha|| delta_j >= 1 for some j.
Grid build_grid(const ProblemSpec& spec, int N);

/// Samples the initial data at the cell left endpoints, applying a boundary shift if recorded.
SampledData sample_initial(const ProblemSpec& spec, int N);
inline SampledData sample_initial(const ProblemSpec& spec, const Grid& grid) { return sample_initial(spec, grid.N); }

/// Interval of J values on which g' is certified: covers [m - 1, M + 1] and [m - M, M - m].
std::pair<double, double> working_interval(double m, double M);

}  // namespace dampwave
