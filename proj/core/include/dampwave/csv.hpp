#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dampwave/decay.hpp"
#include "dampwave/fields.hpp"

namespace dampwave {

/// 17 significant digits, '.' decimal separator.
std::string format_double(double v);

/// t, x_left, x_right, rho, J, f_minus, f_plus, u_left_node; one row per cell.
void write_snapshot_header(std::ostream& out);
void write_snapshot_rows(std::ostream& out, const FieldSnapshot& snap);
void write_snapshots_csv(std::ostream& out, const std::vector<FieldSnapshot>& snaps);

/// n, t, phase, mass, sup_fp, inf_fp, sup_fm, inf_fm, tv_J, sigma_dot_e, sigma_dot_vminus, linf_J, linf_rho.
void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records);

struct SpectrumRow {
  int N = 0;
  double d = 0.0;
  double C_N = 0.0;
  double C_limit = 0.0;
  double calC_N = 0.0;
  double calC = 0.0;
  double zeta_sum = 0.0;
  double eta_sum = 0.0;
  double bound_rhs = 0.0;
  double expansion_residual = 0.0;
};

SpectrumRow spectrum_row(int N, double d);
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows);

/// t, linf_J, envelope_J, linf_rho, envelope_rho, margin_raw, pass.
void write_decay_csv(std::ostream& out, const DecayReport& report);

}  // namespace dampwave
