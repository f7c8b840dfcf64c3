#pragma once

#include <vector>

#include "dampwave/fields.hpp"
#include "dampwave/grid.hpp"
#include "dampwave/problem.hpp"
#include "dampwave/simulation.hpp"

namespace dampwave {

enum class EnvelopeMode { constant_alpha, on_off };

/// ||J(t)|| <= C1 exp(-C3 t), ||rho(t)|| <= C2 exp(-C3 t).
struct EnvelopeConstants {
  double C1 = 0.0;
  double C2 = 0.0;
  double C3 = 0.0;
  EnvelopeMode mode = EnvelopeMode::constant_alpha;
  double T1 = 0.0;
  double T2 = 0.0;
};

/// Throws OutOfTheoryError unless 0 < d < d*, ConfigurationError unless m <= 0 <= M,
/// and (on-off) ConfigurationError unless 1 <= T1 <= T2.
EnvelopeConstants envelope_constants(double d, double M, double m,
                                     EnvelopeMode mode = EnvelopeMode::constant_alpha, double T1 = 0.0,
                                     double T2 = 0.0);

/// TV of the sampled J0 extended by 0 at both walls.
double tv_J0bar(const SampledData& data);

/// d [TV J0bar + 3 (M - m)].
double C_hat(double d, double tv_J0bar, double width);

struct T1Report {
  double sup = 0.0;
  double inf = 0.0;
  double width = 0.0;
  double calC_N = 0.0;
  double C_hat = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
};

/// sup f - inf f at t = 1 against calC_N(d) (M - m) + C_hat / N.
T1Report contraction_check_t1(const FieldSnapshot& at_t1, int N, double d, double M, double m,
                              double tv_J0bar);
/// Same for a simulation of the linear telegrapher problem advanced exactly N steps.
T1Report contraction_check_t1(const Simulation& sim);

struct ContractionRow {
  int h = 0;
  double t = 0.0;
  double M_h = 0.0;
  double m_h = 0.0;
  double width = 0.0;
  double bound_limit = 0.0;      ///< calC^e (M - m)
  double bound_corrected = 0.0;  ///< calC_N^e (M - m) + e C_hat / N
  bool within = false;
};

struct ContractionTrace {
  std::vector<ContractionRow> rows;
  bool monotone = true;
  bool pass = true;
};

/// Advances a fresh simulation (n = 0) through h_max periods (1 or T2 time units) and records
/// the range of f at the period ends. The exponent e is h or h [T1].
ContractionTrace contraction_sequence(Simulation& sim, int h_max);

struct RateFit {
  double rate = 0.0;
  double prefactor = 0.0;
  int samples = 0;
};

/// Least squares of ln y against t over samples with y > 1e-14; rate = -slope.
/// Throws InsufficientSignal with fewer than 4 usable samples.
RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& y);

struct DecayRow {
  double t = 0.0;
  double linf_J = 0.0;
  double envelope_J = 0.0;
  double linf_rho = 0.0;
  double envelope_rho = 0.0;
  double margin_raw = 0.0;  ///< min of the envelope margins without the discretization slack
  bool pass = false;
};

struct DecayReport {
  EnvelopeConstants constants;
  double d = 0.0;
  int N = 0;
  double M = 0.0;
  double m = 0.0;
  double tv_J0bar = 0.0;
  double C_hat = 0.0;
  double eps_N = 0.0;
  std::vector<DecayRow> rows;
  bool fit_available = false;
  RateFit fit;
  bool pass = true;
};

/// Envelope check at integer times (alpha = 1) or at t = h T2 (on-off) for the linear telegrapher problem.
DecayReport decay_report(const ProblemSpec& spec, int N, double t_end);

}  // namespace dampwave
