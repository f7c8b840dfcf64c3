#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dampwave/damping.hpp"

namespace dampwave {

enum class KKind { constant, piecewise, tabulated };

/// Damping coefficient profile k(x) >= 0 on [0, 1].
class KProfile {
 public:
  static KProfile constant(double d);
  /// `breaks` are the interior breakpoints 0 < b_1 < ... < b_P < 1; `values` has P + 1 entries.
  static KProfile piecewise(std::vector<double> breaks, std::vector<double> values);
  /// Samples at x_i = i / (n - 1), linearly interpolated; n >= 2.
  static KProfile tabulated(std::vector<double> samples);

  KKind kind() const noexcept { return kind_; }
  double value(double x) const;
  /// Integral over [a, b]; exact for constant and piecewise profiles,
  /// composite midpoint with 64 points for tabulated ones.
  double integral(double a, double b) const;
  /// Integral of (1 - x) k(x) over [0, 1].
  double complement_moment() const;
  double sup() const noexcept;
  bool is_constant() const noexcept { return kind_ == KKind::constant; }

  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  KProfile(KKind kind, std::vector<double> breaks, std::vector<double> values);

  KKind kind_;
  std::vector<double> breaks_;
  std::vector<double> values_;
};

enum class AlphaKind { constant, on_off, steps };

/// Time coefficient alpha(t) in [0, 1], evaluated right-continuously.
class AlphaSchedule {
 public:
  static AlphaSchedule constant(double c = 1.0);
  /// 1 on [k T2, k T2 + T1), 0 on [k T2 + T1, (k + 1) T2).
  static AlphaSchedule on_off(double T1, double T2);
  /// values[0] on [0, times[0]), values[i] on [times[i-1], times[i]), last value afterwards.
  static AlphaSchedule steps(std::vector<double> times, std::vector<double> values);

  AlphaKind kind() const noexcept { return kind_; }
  double value_at(double t) const;
  double sup() const noexcept;
  /// Total variation on [0, t].
  double total_variation(double t) const;
  bool is_constant() const noexcept { return kind_ == AlphaKind::constant; }

  double T1() const noexcept { return T1_; }
  double T2() const noexcept { return T2_; }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  AlphaSchedule() = default;

  AlphaKind kind_ = AlphaKind::constant;
  double T1_ = 0.0;
  double T2_ = 0.0;
  std::vector<double> times_;
  std::vector<double> values_;
};

enum class InitialKind { analytic, piecewise, cells };

/// Initial data (rho0, J0). Samplers are read as right limits: f(x) means f(x+).
class InitialData {
 public:
  using Sampler = std::function<double(double)>;

  static InitialData analytic(Sampler rho0, Sampler J0);
  /// Piecewise constant diagonal data on [0, b_1), [b_1, b_2), ..., [b_P, 1].
  static InitialData piecewise(std::vector<double> breaks, std::vector<double> f_minus,
                               std::vector<double> f_plus);
  /// One (f-, f+) pair per cell; the grid must have exactly this many cells.
  static InitialData cells(std::vector<double> f_minus, std::vector<double> f_plus);

  InitialKind kind() const noexcept { return kind_; }
  /// (f-, f+) at x+.
  std::pair<double, double> diag_at(double x) const;
  /// Integral of rho0 over [0, 1] (exact unless analytic, then 4096-point midpoint).
  double rho_integral() const;

  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<double>& f_minus() const noexcept { return f_minus_; }
  const std::vector<double>& f_plus() const noexcept { return f_plus_; }

 private:
  InitialData() = default;

  InitialKind kind_ = InitialKind::analytic;
  Sampler rho0_;
  Sampler J0_;
  std::vector<double> breaks_;
  std::vector<double> f_minus_;
  std::vector<double> f_plus_;
};

/// Record of the boundary homogenization v = rho - rho_beta, w = J - beta.
struct BoundaryShift {
  double beta = 0.0;
  double g_beta = 0.0;
  double constant = 0.0;

  /// rho_beta(x) = constant - 2 g(beta) int_0^x k.
  double rho_beta(const KProfile& k, double x) const { return constant - 2.0 * g_beta * k.integral(0.0, x); }
};

struct ProblemSpec {
  KProfile k = KProfile::constant(0.0);
  DampingFunction g = DampingFunction::linear();
  AlphaSchedule alpha = AlphaSchedule::constant(1.0);
  InitialData initial = InitialData::analytic([](double) { return 0.0; }, [](double) { return 0.0; });
  double beta = 0.0;
  std::optional<BoundaryShift> shift;
};

/// Transforms a problem with boundary flux beta into one with zero flux.
/// Throws ConfigurationError when beta != 0 and alpha is not constant 1.
ProblemSpec homogenize_boundary(const ProblemSpec& spec);

}  // namespace dampwave
