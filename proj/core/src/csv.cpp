#include "dampwave/csv.hpp"

#include <cmath>
#include <cstdio>

#include "dampwave/special.hpp"
#include "dampwave/transition.hpp"

namespace dampwave {

std::string format_double(double v) {
  if (v == 0.0) {
    return "0";  // also folds -0
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_snapshot_header(std::ostream& out) {
  out << "t,x_left,x_right,rho,J,f_minus,f_plus,u_left_node\n";
}

void write_snapshot_rows(std::ostream& out, const FieldSnapshot& snap) {
  const auto N = static_cast<std::size_t>(snap.N);
  for (std::size_t j = 0; j < N; ++j) {
    out << format_double(snap.t) << ',' << format_double(static_cast<double>(j) / snap.N) << ','
        << format_double(static_cast<double>(j + 1) / snap.N) << ',' << format_double(snap.rho[j]) << ','
        << format_double(snap.J[j]) << ',' << format_double(snap.f_minus(j)) << ','
        << format_double(snap.f_plus(j)) << ',' << format_double(snap.u[j]) << '\n';
  }
}

void write_snapshots_csv(std::ostream& out, const std::vector<FieldSnapshot>& snaps) {
  write_snapshot_header(out);
  for (const auto& s : snaps) {
    write_snapshot_rows(out, s);
  }
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
  out << "n,t,phase,mass,sup_fp,inf_fp,sup_fm,inf_fm,tv_J,sigma_dot_e,sigma_dot_vminus,linf_J,linf_rho\n";
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.t) << ',' << (r.phase == Phase::post_integer ? "integer" : "half")
        << ',' << format_double(r.mass) << ',' << format_double(r.range.sup_fp) << ','
        << format_double(r.range.inf_fp) << ',' << format_double(r.range.sup_fm) << ','
        << format_double(r.range.inf_fm) << ',' << format_double(r.tv_J) << ','
        << format_double(r.sigma_dot_e) << ',' << format_double(r.sigma_dot_vminus) << ','
        << format_double(r.linf_J) << ',' << format_double(r.linf_rho) << '\n';
  }
}

SpectrumRow spectrum_row(int N, double d) {
  const ContractionConstants c = contraction_constants(N, d);
  const CoefficientSums sums = coefficient_sums(N, d);
  SpectrumRow row;
  row.N = N;
  row.d = d;
  row.C_N = c.C_N;
  row.C_limit = c.C_limit;
  row.calC_N = c.calC_N;
  row.calC = c.calC;
  row.zeta_sum = sums.zeta;
  row.eta_sum = sums.eta;
  row.bound_rhs = std::expm1(d) - d + K_of_d(d) / N;
  row.expansion_residual = expansion_residual(N, d);
  return row;
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows) {
  out << "N,d,C_N,C_limit,calC_N,calC,zeta_sum,eta_sum,bound_rhs,expansion_residual\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_double(r.d) << ',' << format_double(r.C_N) << ',' << format_double(r.C_limit)
        << ',' << format_double(r.calC_N) << ',' << format_double(r.calC) << ',' << format_double(r.zeta_sum)
        << ',' << format_double(r.eta_sum) << ',' << format_double(r.bound_rhs) << ','
        << format_double(r.expansion_residual) << '\n';
  }
}

void write_decay_csv(std::ostream& out, const DecayReport& report) {
  out << "t,linf_J,envelope_J,linf_rho,envelope_rho,margin_raw,pass\n";
  for (const auto& r : report.rows) {
    out << format_double(r.t) << ',' << format_double(r.linf_J) << ',' << format_double(r.envelope_J) << ','
        << format_double(r.linf_rho) << ',' << format_double(r.envelope_rho) << ','
        << format_double(r.margin_raw) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

}  // namespace dampwave
