#include "dampwave/grid.hpp"

#include <algorithm>
#include <sstream>

#include "dampwave/errors.hpp"

namespace dampwave {

std::pair<double, double> working_interval(double m, double M) {
  return {std::min(m - 1.0, m - M), std::max(M + 1.0, M - m)};
}

SampledData sample_initial(const ProblemSpec& spec, int N) {
  if (N < 2 || N % 2 != 0) {
    throw ConfigurationError("N must be even and >= 2");
  }
  if (spec.beta != 0.0) {
    throw ConfigurationError("nonzero boundary flux beta: call homogenize_boundary first");
  }
  const auto n = static_cast<std::size_t>(N);
  const double dx = 1.0 / N;
  SampledData out;
  out.f_minus.resize(n);
  out.f_plus.resize(n);

  const bool direct = spec.initial.kind() == InitialKind::cells;
  if (direct && spec.initial.f_minus().size() != n) {
    std::ostringstream msg;
    msg << "cell initial data has " << spec.initial.f_minus().size() << " cells, grid has " << N;
    throw DimensionError(msg.str());
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double x = static_cast<double>(j) * dx;
    auto [fm, fp] = direct ? std::pair{spec.initial.f_minus()[j], spec.initial.f_plus()[j]}
                           : spec.initial.diag_at(x);
    if (spec.shift) {
      const double rho = fp + fm - spec.shift->rho_beta(spec.k, x);
      const double J = fp - fm - spec.shift->beta;
      fm = 0.5 * (rho - J);
      fp = 0.5 * (rho + J);
    }
    out.f_minus[j] = fm;
    out.f_plus[j] = fp;
  }

  double mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    mass += out.f_minus[j] + out.f_plus[j];
  }
  out.mass0 = mass * dx;
  const auto [mn1, mx1] = std::minmax_element(out.f_minus.begin(), out.f_minus.end());
  const auto [mn2, mx2] = std::minmax_element(out.f_plus.begin(), out.f_plus.end());
  out.m = std::min(*mn1, *mn2);
  out.M = std::max(*mx1, *mx2);
  return out;
}

Grid build_grid(const ProblemSpec& spec, int N) {
  const SampledData data = sample_initial(spec, N);

  Grid grid;
  grid.N = N;
  grid.dx = 1.0 / N;
  grid.delta.resize(static_cast<std::size_t>(N - 1));
  for (int j = 1; j < N; ++j) {
    grid.delta[static_cast<std::size_t>(j - 1)] =
        spec.k.is_constant() ? spec.k.value(0.0) * grid.dx : spec.k.integral(grid.node(j - 1), grid.node(j));
  }

  const auto [lo, hi] = working_interval(data.m, data.M);
  grid.sup_slope = spec.g.certify(lo, hi);
  grid.alpha_sup = spec.alpha.sup();
  for (int j = 1; j < N; ++j) {
    const double product = grid.sup_slope * grid.alpha_sup * grid.delta_at(j);
    if (!(product < 1.0)) {
      std::ostringstream msg;
      msg << "refine N: smallness (sup g') |alpha| delta_j < 1 violated at node j = " << j
          << " (value " << product << ")";
      throw ConfigurationError(msg.str());
    }
  }
  return grid;
}

}  // namespace dampwave
