#include "dampwave/problem.hpp"

#include <algorithm>
#include <cmath>

#include "dampwave/errors.hpp"

namespace dampwave {
namespace {

constexpr int kMidpointPoints = 64;
constexpr int kMomentPoints = 4096;

void require_increasing_in_unit(const std::vector<double>& breaks, const char* what) {
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!(breaks[i] > 0.0 && breaks[i] < 1.0) || (i > 0 && !(breaks[i] > breaks[i - 1]))) {
      throw ConfigurationError(std::string(what) + ": breakpoints must increase strictly inside (0, 1)");
    }
  }
}

double overlap(double a, double b, double l, double r) { return std::max(0.0, std::min(b, r) - std::max(a, l)); }

}  // namespace

KProfile::KProfile(KKind kind, std::vector<double> breaks, std::vector<double> values)
    : kind_(kind), breaks_(std::move(breaks)), values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ConfigurationError("k must be finite and >= 0");
    }
  }
}

KProfile KProfile::constant(double d) { return KProfile(KKind::constant, {}, {d}); }

KProfile KProfile::piecewise(std::vector<double> breaks, std::vector<double> values) {
  require_increasing_in_unit(breaks, "piecewise k");
  if (values.size() != breaks.size() + 1) {
    throw ConfigurationError("piecewise k: need one more value than breakpoints");
  }
  return KProfile(KKind::piecewise, std::move(breaks), std::move(values));
}

KProfile KProfile::tabulated(std::vector<double> samples) {
  if (samples.size() < 2) {
    throw ConfigurationError("tabulated k: need at least two samples");
  }
  return KProfile(KKind::tabulated, {}, std::move(samples));
}

double KProfile::value(double x) const {
  switch (kind_) {
    case KKind::constant:
      return values_[0];
    case KKind::piecewise: {
      const auto idx = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
      return values_[static_cast<std::size_t>(idx)];
    }
    case KKind::tabulated: {
      const double s = std::clamp(x, 0.0, 1.0) * static_cast<double>(values_.size() - 1);
      const auto i = std::min(static_cast<std::size_t>(s), values_.size() - 2);
      const double w = s - static_cast<double>(i);
      return (1.0 - w) * values_[i] + w * values_[i + 1];
    }
  }
  return 0.0;
}

double KProfile::integral(double a, double b) const {
  if (b <= a) {
    return 0.0;
  }
  switch (kind_) {
    case KKind::constant:
      return values_[0] * (b - a);
    case KKind::piecewise: {
      double total = 0.0;
      double left = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        const double right = i < breaks_.size() ? breaks_[i] : 1.0;
        total += values_[i] * overlap(a, b, left, right);
        left = right;
      }
      return total;
    }
    case KKind::tabulated: {
      const double h = (b - a) / kMidpointPoints;
      double total = 0.0;
      for (int i = 0; i < kMidpointPoints; ++i) {
        total += value(a + (i + 0.5) * h);
      }
      return total * h;
    }
  }
  return 0.0;
}

double KProfile::complement_moment() const {
  switch (kind_) {
    case KKind::constant:
      return 0.5 * values_[0];
    case KKind::piecewise: {
      double total = 0.0;
      double l = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        const double r = i < breaks_.size() ? breaks_[i] : 1.0;
        total += values_[i] * ((r - l) - 0.5 * (r * r - l * l));
        l = r;
      }
      return total;
    }
    case KKind::tabulated: {
      const double h = 1.0 / kMomentPoints;
      double total = 0.0;
      for (int i = 0; i < kMomentPoints; ++i) {
        const double x = (i + 0.5) * h;
        total += (1.0 - x) * value(x);
      }
      return total * h;
    }
  }
  return 0.0;
}

double KProfile::sup() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

AlphaSchedule AlphaSchedule::constant(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ConfigurationError("alpha must lie in [0, 1]");
  }
  AlphaSchedule a;
  a.kind_ = AlphaKind::constant;
  a.values_ = {c};
  return a;
}

AlphaSchedule AlphaSchedule::on_off(double T1, double T2) {
  if (!(T1 > 0.0 && T2 >= T1 && std::isfinite(T2))) {
    throw ConfigurationError("on_off alpha: need 0 < T1 <= T2");
  }
  AlphaSchedule a;
  a.kind_ = AlphaKind::on_off;
  a.T1_ = T1;
  a.T2_ = T2;
  return a;
}

AlphaSchedule AlphaSchedule::steps(std::vector<double> times, std::vector<double> values) {
  if (values.size() != times.size() + 1) {
    throw ConfigurationError("step alpha: need one more value than switching times");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw ConfigurationError("step alpha: switching times must increase strictly and be > 0");
    }
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ConfigurationError("alpha must lie in [0, 1]");
    }
  }
  AlphaSchedule a;
  a.kind_ = AlphaKind::steps;
  a.times_ = std::move(times);
  a.values_ = std::move(values);
  return a;
}

double AlphaSchedule::value_at(double t) const {
  switch (kind_) {
    case AlphaKind::constant:
      return values_[0];
    case AlphaKind::on_off: {
      const double phase = t - T2_ * std::floor(t / T2_);
      return phase < T1_ ? 1.0 : 0.0;
    }
    case AlphaKind::steps: {
      const auto idx = std::upper_bound(times_.begin(), times_.end(), t) - times_.begin();
      return values_[static_cast<std::size_t>(idx)];
    }
  }
  return 0.0;
}

double AlphaSchedule::sup() const noexcept {
  if (kind_ == AlphaKind::on_off) {
    return 1.0;
  }
  return *std::max_element(values_.begin(), values_.end());
}

double AlphaSchedule::total_variation(double t) const {
  switch (kind_) {
    case AlphaKind::constant:
      return 0.0;
    case AlphaKind::on_off: {
      if (T1_ >= T2_ || t < T1_) {
        return 0.0;
      }
      const double down = std::floor((t - T1_) / T2_) + 1.0;
      const double up = std::floor(t / T2_);
      return down + up;
    }
    case AlphaKind::steps: {
      double tv = 0.0;
      for (std::size_t i = 0; i < times_.size() && times_[i] <= t; ++i) {
        tv += std::abs(values_[i + 1] - values_[i]);
      }
      return tv;
    }
  }
  return 0.0;
}

InitialData InitialData::analytic(Sampler rho0, Sampler J0) {
  InitialData d;
  d.kind_ = InitialKind::analytic;
  d.rho0_ = std::move(rho0);
  d.J0_ = std::move(J0);
  return d;
}

InitialData InitialData::piecewise(std::vector<double> breaks, std::vector<double> f_minus,
                                   std::vector<double> f_plus) {
  require_increasing_in_unit(breaks, "piecewise initial data");
  if (f_minus.size() != breaks.size() + 1 || f_plus.size() != f_minus.size()) {
    throw ConfigurationError("piecewise initial data: need one more value than breakpoints");
  }
  InitialData d;
  d.kind_ = InitialKind::piecewise;
  d.breaks_ = std::move(breaks);
  d.f_minus_ = std::move(f_minus);
  d.f_plus_ = std::move(f_plus);
  return d;
}

InitialData InitialData::cells(std::vector<double> f_minus, std::vector<double> f_plus) {
  if (f_minus.empty() || f_minus.size() != f_plus.size()) {
    throw DimensionError("cell initial data: f- and f+ must be nonempty and of equal length");
  }
  InitialData d;
  d.kind_ = InitialKind::cells;
  d.f_minus_ = std::move(f_minus);
  d.f_plus_ = std::move(f_plus);
  return d;
}

std::pair<double, double> InitialData::diag_at(double x) const {
  switch (kind_) {
    case InitialKind::analytic: {
      const double rho = rho0_(x);
      const double J = J0_(x);
      return {0.5 * (rho - J), 0.5 * (rho + J)};
    }
    case InitialKind::piecewise: {
      const auto i = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), x) -
                                              breaks_.begin());
      return {f_minus_[i], f_plus_[i]};
    }
    case InitialKind::cells: {
      const auto P = f_minus_.size();
      const auto i = std::min(P - 1, static_cast<std::size_t>(std::max(0.0, x) * static_cast<double>(P)));
      return {f_minus_[i], f_plus_[i]};
    }
  }
  return {0.0, 0.0};
}

double InitialData::rho_integral() const {
  switch (kind_) {
    case InitialKind::analytic: {
      const double h = 1.0 / kMomentPoints;
      double total = 0.0;
      for (int i = 0; i < kMomentPoints; ++i) {
        total += rho0_((i + 0.5) * h);
      }
      return total * h;
    }
    case InitialKind::piecewise: {
      double total = 0.0;
      double l = 0.0;
      for (std::size_t i = 0; i < f_minus_.size(); ++i) {
        const double r = i < breaks_.size() ? breaks_[i] : 1.0;
        total += (f_minus_[i] + f_plus_[i]) * (r - l);
        l = r;
      }
      return total;
    }
    case InitialKind::cells: {
      double total = 0.0;
      for (std::size_t i = 0; i < f_minus_.size(); ++i) {
        total += f_minus_[i] + f_plus_[i];
      }
      return total / static_cast<double>(f_minus_.size());
    }
  }
  return 0.0;
}

ProblemSpec homogenize_boundary(const ProblemSpec& spec) {
  if (spec.beta == 0.0) {
    return spec;
  }
  if (spec.shift) {
    throw ConfigurationError("homogenize_boundary: problem is already homogenized");
  }
  if (!spec.alpha.is_constant() || spec.alpha.value_at(0.0) != 1.0) {
    throw ConfigurationError("homogenize_boundary: beta != 0 is supported only for alpha = 1");
  }
  ProblemSpec out = spec;
  BoundaryShift shift;
  shift.beta = spec.beta;
  shift.g_beta = spec.g(spec.beta);
  // mass matching: int rho_beta = int rho0
  shift.constant = spec.initial.rho_integral() + 2.0 * shift.g_beta * spec.k.complement_moment();
  out.g = spec.g.shifted(spec.beta);
  out.beta = 0.0;
  out.shift = shift;
  return out;
}

}  // namespace dampwave
