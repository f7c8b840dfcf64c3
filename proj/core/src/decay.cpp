#include "dampwave/decay.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dampwave/errors.hpp"
#include "dampwave/special.hpp"

namespace dampwave {
namespace {

constexpr double kSlack = 1e-12;
constexpr double kFitFloor = 1e-14;

struct Telegrapher {
  double d = 0.0;
  EnvelopeMode mode = EnvelopeMode::constant_alpha;
  double T1 = 0.0;
  double T2 = 0.0;
};

Telegrapher require_telegrapher(const ProblemSpec& spec, const char* where) {
  if (!spec.g.is_linear() || !spec.k.is_constant()) {
    throw ConfigurationError(std::string(where) + ": requires linear g and constant k");
  }
  Telegrapher tel;
  tel.d = spec.k.value(0.0);
  if (spec.alpha.kind() == AlphaKind::on_off) {
    tel.mode = EnvelopeMode::on_off;
    tel.T1 = spec.alpha.T1();
    tel.T2 = spec.alpha.T2();
  } else if (!spec.alpha.is_constant() || spec.alpha.value_at(0.0) != 1.0) {
    throw ConfigurationError(std::string(where) + ": requires alpha = 1 or an on-off schedule");
  }
  return tel;
}

long period_steps(const Telegrapher& tel, int N) {
  if (tel.mode == EnvelopeMode::constant_alpha) {
    return N;
  }
  const double raw = tel.T2 * N;
  if (std::abs(raw - std::round(raw)) > 1e-9 * raw) {
    throw ConfigurationError("on-off period T2 must be a multiple of 1/N");
  }
  return static_cast<long>(std::round(raw));
}

int exponent_per_period(const Telegrapher& tel) {
  return tel.mode == EnvelopeMode::constant_alpha ? 1 : static_cast<int>(std::floor(tel.T1));
}

}  // namespace

EnvelopeConstants envelope_constants(double d, double M, double m, EnvelopeMode mode, double T1, double T2) {
  const double ds = d_star();
  if (!(d > 0.0 && d < ds)) {
    std::ostringstream msg;
    msg << "envelope constants need 0 < d < d* = " << ds << ", got d = " << d;
    throw OutOfTheoryError(msg.str());
  }
  if (!(m <= 0.0 && 0.0 <= M)) {
    throw ConfigurationError("envelope constants need m <= 0 <= M");
  }
  EnvelopeConstants c;
  c.mode = mode;
  const double calC = calC_of_d(d);
  const double log_rate = std::abs(std::log(calC));
  if (mode == EnvelopeMode::constant_alpha) {
    c.C3 = log_rate;
    c.C1 = (M - m) / calC;
  } else {
    if (!(T1 >= 1.0 && T2 >= T1)) {
      throw ConfigurationError("on-off envelope needs 1 <= T1 <= T2");
    }
    const double whole = std::floor(T1);
    c.T1 = T1;
    c.T2 = T2;
    c.C3 = whole / T2 * log_rate;
    c.C1 = (M - m) / std::pow(calC, whole);
  }
  c.C2 = 2.0 * c.C1;
  return c;
}

double tv_J0bar(const SampledData& data) {
  const std::size_t N = data.f_minus.size();
  if (N == 0) {
    return 0.0;
  }
  double tv = std::abs(data.J(0)) + std::abs(data.J(N - 1));
  for (std::size_t j = 1; j < N; ++j) {
    tv += std::abs(data.J(j) - data.J(j - 1));
  }
  return tv;
}

double C_hat(double d, double tv_J0bar, double width) { return d * (tv_J0bar + 3.0 * width); }

T1Report contraction_check_t1(const FieldSnapshot& at_t1, int N, double d, double M, double m, double tv) {
  T1Report r;
  const DiagRange range = diag_range(at_t1);
  r.sup = range.sup();
  r.inf = range.inf();
  r.width = r.sup - r.inf;
  r.calC_N = calC_N_of_d(N, d);
  r.C_hat = C_hat(d, tv, M - m);
  r.bound = r.calC_N * (M - m) + r.C_hat / N;
  r.margin = r.bound - r.width;
  r.pass = r.margin >= -kSlack;
  return r;
}

T1Report contraction_check_t1(const Simulation& sim) {
  const Telegrapher tel = require_telegrapher(sim.spec(), "contraction_check_t1");
  if (tel.mode != EnvelopeMode::constant_alpha) {
    throw ConfigurationError("contraction_check_t1: requires alpha = 1");
  }
  const int N = sim.grid().N;
  if (sim.state().n != N || sim.state().phase != Phase::post_integer) {
    throw SequencingError("contraction_check_t1: simulation must be advanced exactly N steps");
  }
  return contraction_check_t1(sim.snapshot(), N, tel.d, sim.data().M, sim.data().m, tv_J0bar(sim.data()));
}

ContractionTrace contraction_sequence(Simulation& sim, int h_max) {
  const Telegrapher tel = require_telegrapher(sim.spec(), "contraction_sequence");
  if (!(tel.d > 0.0 && tel.d < d_star())) {
    throw OutOfTheoryError("contraction_sequence: needs 0 < d < d*");
  }
  if (tel.mode == EnvelopeMode::on_off && tel.T1 < 1.0) {
    throw ConfigurationError("contraction_sequence: on-off schedule needs T1 >= 1");
  }
  if (sim.state().n != 0) {
    throw SequencingError("contraction_sequence: simulation must start at n = 0");
  }
  const int N = sim.grid().N;
  const long steps = period_steps(tel, N);
  const int per = exponent_per_period(tel);
  const double M = sim.data().M;
  const double m = sim.data().m;
  const double width0 = M - m;
  const double calC = calC_of_d(tel.d);
  const double calC_N = calC_N_of_d(N, tel.d);
  const double chat = C_hat(tel.d, tv_J0bar(sim.data()), width0);

  ContractionTrace trace;
  trace.rows.push_back({0, 0.0, M, m, width0, width0, width0, true});
  for (int h = 1; h <= h_max; ++h) {
    sim.advance_steps(steps);
    const DiagRange range = diag_range(sim.snapshot());
    ContractionRow row;
    row.h = h;
    row.t = sim.state().time();
    row.M_h = range.sup();
    row.m_h = range.inf();
    row.width = row.M_h - row.m_h;
    const int e = h * per;
    row.bound_limit = std::pow(calC, e) * width0;
    row.bound_corrected = std::pow(calC_N, e) * width0 + e * chat / N;
    row.within = row.width <= row.bound_corrected + kSlack;
    const ContractionRow& prev = trace.rows.back();
    if (row.m_h < prev.m_h - kSlack || row.M_h > prev.M_h + kSlack || row.width > prev.width + kSlack) {
      trace.monotone = false;
    }
    trace.pass = trace.pass && row.within;
    trace.rows.push_back(row);
  }
  trace.pass = trace.pass && trace.monotone;
  return trace;
}

RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size()) {
    throw DimensionError("fit_rate: t and y differ in length");
  }
  std::vector<double> xs;
  std::vector<double> ls;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (y[i] > kFitFloor) {
      xs.push_back(t[i]);
      ls.push_back(std::log(y[i]));
    }
  }
  if (xs.size() < 4) {
    throw InsufficientSignal("fit_rate: fewer than 4 samples above 1e-14");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ls[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ls[i] - my);
  }
  if (sxx == 0.0) {
    throw InsufficientSignal("fit_rate: all samples at the same time");
  }
  const double slope = sxy / sxx;
  RateFit fit;
  fit.rate = slope == 0.0 ? 0.0 : -slope;
  fit.prefactor = std::exp(my - slope * mx);
  fit.samples = static_cast<int>(xs.size());
  return fit;
}

DecayReport decay_report(const ProblemSpec& spec, int N, double t_end) {
  const Telegrapher tel = require_telegrapher(spec, "decay_report");
  Simulation sim(spec, N);
  DecayReport rep;
  rep.d = tel.d;
  rep.N = N;
  rep.M = sim.data().M;
  rep.m = sim.data().m;
  rep.constants = envelope_constants(tel.d, rep.M, rep.m, tel.mode, tel.T1, tel.T2);
  rep.tv_J0bar = tv_J0bar(sim.data());
  const double width = rep.M - rep.m;
  rep.C_hat = C_hat(tel.d, rep.tv_J0bar, width);
  rep.eps_N = width > 0.0 ? 5.0 * rep.C_hat / (width * N) : 0.0;

  const long steps = period_steps(tel, N);
  const long total = steps_for(t_end, N);
  std::vector<double> fit_t;
  std::vector<double> fit_y;
  for (long done = 0;; done += steps) {
    const DiagnosticsRecord rec = sim.diagnostics();
    DecayRow row;
    row.t = rec.t;
    row.linf_J = rec.linf_J;
    row.linf_rho = rec.linf_rho;
    const double env = std::exp(-rep.constants.C3 * row.t);
    row.envelope_J = rep.constants.C1 * env;
    row.envelope_rho = rep.constants.C2 * env;
    row.margin_raw = std::min(row.envelope_J - row.linf_J, row.envelope_rho - row.linf_rho);
    row.pass = row.linf_J <= row.envelope_J * (1.0 + rep.eps_N) &&
               row.linf_rho <= row.envelope_rho * (1.0 + rep.eps_N);
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
    if (row.t >= 1.0) {
      fit_t.push_back(row.t);
      fit_y.push_back(row.linf_J);
    }
    if (done + steps > total) {
      break;
    }
    sim.advance_steps(steps);
  }
  try {
    rep.fit = fit_rate(fit_t, fit_y);
    rep.fit_available = true;
  } catch (const InsufficientSignal&) {
    rep.fit_available = false;
  }
  return rep;
}

}  // namespace dampwave
