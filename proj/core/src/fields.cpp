#include "dampwave/fields.hpp"

#include <algorithm>
#include <cmath>

#include "dampwave/errors.hpp"

namespace dampwave {

double l1_norm_sorted(const std::vector<double>& w) {
  std::vector<double> a(w.size());
  std::transform(w.begin(), w.end(), a.begin(), [](double v) { return std::abs(v); });
  std::sort(a.begin(), a.end());
  double s = 0.0;
  for (double v : a) {
    s += v;
  }
  return s;
}

FieldSnapshot reconstruct_fields(const SigmaState& state, const Grid& grid, const ProblemSpec& spec) {
  const auto N = static_cast<std::size_t>(grid.N);
  const auto& w = state.sigma;
  if (w.size() != 2 * N) {
    throw DimensionError("reconstruct_fields: sigma has the wrong length");
  }
  const bool integer = state.phase == Phase::post_integer;
  // rho jumps by +sigma across (+1)-waves and by -sigma across (-1)-waves;
  // even slots hold (+1)-waves after integer steps and (-1)-waves after half steps
  const double s = integer ? 1.0 : -1.0;

  std::vector<double> S(2 * N + 1, 0.0);
  std::vector<double> St(2 * N + 1, 0.0);
  for (std::size_t i = 0; i < 2 * N; ++i) {
    S[i + 1] = S[i] + w[i];
    St[i + 1] = St[i] + ((i % 2 == 0) ? s * w[i] : -s * w[i]);
  }

  FieldSnapshot snap;
  snap.t = state.time();
  snap.n = state.n;
  snap.phase = state.phase;
  snap.N = grid.N;
  snap.J_node.resize(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    snap.J_node[j] = S[2 * j];
  }

  // cumulative 0-wave jumps 2 alpha sum_{l <= j} g(J(x_l)) delta_l
  std::vector<double> src(N, 0.0);
  for (std::size_t j = 1; j < N; ++j) {
    src[j] = src[j - 1] + 2.0 * state.alpha_curr * spec.g(snap.J_node[j]) * grid.delta[j - 1];
  }

  snap.rho.resize(N);
  snap.J.resize(N);
  snap.rho_left.resize(N);
  snap.rho_right.resize(N);
  if (integer) {
    snap.rho_bulk.resize(N);
    snap.J_bulk.resize(N);
  }
  double mass_without_constant = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    snap.rho_left[j] = St[2 * j] - src[j];
    snap.rho_right[j] = St[2 * j + 2] - src[j];
    if (integer) {
      snap.rho_bulk[j] = St[2 * j + 1] - src[j];
      snap.J_bulk[j] = S[2 * j + 1];
      snap.rho[j] = snap.rho_bulk[j];
      snap.J[j] = snap.J_bulk[j];
    } else {
      snap.rho[j] = 0.5 * (snap.rho_left[j] + snap.rho_right[j]);
      snap.J[j] = 0.5 * (S[2 * j] + S[2 * j + 2]);
    }
    mass_without_constant += snap.rho[j];
  }
  mass_without_constant *= grid.dx;

  const double c = state.mass0 - mass_without_constant;
  snap.rho0_matched = c;
  snap.rho0_tracked = state.rho_left;
  for (std::size_t j = 0; j < N; ++j) {
    snap.rho[j] += c;
    snap.rho_left[j] += c;
    snap.rho_right[j] += c;
    if (integer) {
      snap.rho_bulk[j] += c;
    }
  }

  snap.u.assign(N + 1, 0.0);
  for (std::size_t j = 0; j < N; ++j) {
    snap.u[j + 1] = snap.u[j] + grid.dx * snap.rho[j];
  }
  return snap;
}

DiagRange diag_range(const FieldSnapshot& snap) {
  const auto N = static_cast<std::size_t>(snap.N);
  DiagRange r;
  r.sup_fp = r.sup_fm = -INFINITY;
  r.inf_fp = r.inf_fm = INFINITY;
  auto take = [&](double rho, double J) {
    const double fp = 0.5 * (rho + J);
    const double fm = 0.5 * (rho - J);
    r.sup_fp = std::max(r.sup_fp, fp);
    r.inf_fp = std::min(r.inf_fp, fp);
    r.sup_fm = std::max(r.sup_fm, fm);
    r.inf_fm = std::min(r.inf_fm, fm);
  };
  for (std::size_t j = 0; j < N; ++j) {
    take(snap.rho_left[j], snap.J_node[j]);
    take(snap.rho_right[j], snap.J_node[j + 1]);
    if (!snap.rho_bulk.empty()) {
      take(snap.rho_bulk[j], snap.J_bulk[j]);
    }
  }
  return r;
}

DiagnosticsRecord diagnostics(const SigmaState& state, const FieldSnapshot& snap, const Grid& grid,
                              const ProblemSpec& spec) {
  const auto N = static_cast<std::size_t>(grid.N);
  const auto& w = state.sigma;
  DiagnosticsRecord rec;
  rec.n = state.n;
  rec.t = snap.t;
  rec.phase = state.phase;

  // same profile as the snapshot, but anchored at the tracked rho(0+)
  double mass = 0.0;
  for (double v : snap.rho) {
    mass += v;
  }
  rec.mass = grid.dx * mass + (snap.rho0_tracked - snap.rho0_matched);
  rec.mass_drift = std::abs(rec.mass - state.mass0);
  rec.range = diag_range(snap);
  rec.tv_J = l1_norm_sorted(w);

  double sources = 0.0;
  for (std::size_t j = 1; j < N; ++j) {
    sources += std::abs(2.0 * state.alpha_curr * spec.g(snap.J_node[j]) * grid.delta[j - 1]);
  }
  rec.tv_rho = rec.tv_J + sources;

  for (std::size_t i = 0; i < w.size(); ++i) {
    rec.sigma_dot_e += w[i];
    rec.sigma_dot_vminus += (i % 4 == 0 || i % 4 == 3) ? w[i] : -w[i];
  }

  double linf_J = 0.0;
  double linf_rho = 0.0;
  for (double v : snap.J_node) {
    linf_J = std::max(linf_J, std::abs(v));
  }
  for (double v : snap.J_bulk) {
    linf_J = std::max(linf_J, std::abs(v));
  }
  for (std::size_t j = 0; j < N; ++j) {
    linf_rho = std::max({linf_rho, std::abs(snap.rho_left[j]), std::abs(snap.rho_right[j])});
  }
  for (double v : snap.rho_bulk) {
    linf_rho = std::max(linf_rho, std::abs(v));
  }
  rec.linf_J = linf_J;
  rec.linf_rho = linf_rho;
  return rec;
}

FieldSnapshot unshift(const FieldSnapshot& snap, const ProblemSpec& spec) {
  if (!spec.shift) {
    return snap;
  }
  const auto& sh = *spec.shift;
  FieldSnapshot out = snap;
  const auto N = static_cast<std::size_t>(snap.N);
  const double dx = 1.0 / snap.N;
  for (std::size_t j = 0; j < N; ++j) {
    const double xl = static_cast<double>(j) * dx;
    out.rho[j] += sh.rho_beta(spec.k, xl + 0.5 * dx);
    out.J[j] += sh.beta;
    out.rho_left[j] += sh.rho_beta(spec.k, xl);
    out.rho_right[j] += sh.rho_beta(spec.k, xl + dx);
    if (!out.rho_bulk.empty()) {
      out.rho_bulk[j] += sh.rho_beta(spec.k, xl + 0.5 * dx);
      out.J_bulk[j] += sh.beta;
    }
  }
  for (auto& v : out.J_node) {
    v += sh.beta;
  }
  for (std::size_t j = 0; j < N; ++j) {
    out.u[j + 1] = out.u[j] + dx * out.rho[j];
  }
  return out;
}

}  // namespace dampwave
