#include "dampwave/special.hpp"

#include <cmath>

#include "dampwave/errors.hpp"

namespace dampwave {

double bessel_I(int order, double x) {
  if (order != 0 && order != 1) {
    throw ConfigurationError("bessel_I: order must be 0 or 1");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw ConfigurationError("bessel_I: x must be finite and >= 0");
  }
  // I_a(x) = sum_m (x/2)^{2m+a} / (m! (m+a)!)
  const double h = 0.5 * x;
  double term = order == 0 ? 1.0 : h;
  double sum = term;
  for (int m = 1; m < 1000; ++m) {
    term *= h * h / (static_cast<double>(m) * (m + order));
    sum += term;
    if (term < 1e-17 * sum) {
      break;
    }
  }
  return sum;
}

double f0_of_d(double d) {
  // d (I0(d) - 1) without the cancellation of the leading 1
  const double h = 0.5 * d;
  double term = 1.0;
  double sum = 0.0;
  for (int m = 1; m < 1000; ++m) {
    term *= h * h / (static_cast<double>(m) * m);
    sum += term;
    if (term < 1e-17 * sum) {
      break;
    }
  }
  return d * sum;
}

double f1_of_d(double d) { return d * bessel_I(1, d); }

double K_of_d(double d) {
  if (!(d >= 0.0)) {
    throw ConfigurationError("K_of_d: d must be >= 0");
  }
  return f0_of_d(d) + f1_of_d(d);
}

double calC_of_d(double d) {
  // e^d - d - 1 via expm1 to keep accuracy near d = 0
  const double tail = std::expm1(d) - d;
  return std::exp(-d) * (1.0 + (1.0 + d) * (1.0 + d) * tail);
}

double calC_N_of_d(int N, double d) {
  const double damp = std::exp(-N * std::log1p(d / N));
  const double tail = std::expm1(d) - d + K_of_d(d) / N;
  return damp * (1.0 + (1.0 + d) * (1.0 + d) * tail);
}

ContractionConstants contraction_constants(int N, double d) {
  if (!(d >= 0.0)) {
    throw ConfigurationError("contraction_constants: d must be >= 0");
  }
  if (N < 2 || N % 2 != 0) {
    throw ConfigurationError("contraction_constants: N must be even and >= 2");
  }
  ContractionConstants c;
  const double damp = std::exp(-N * std::log1p(d / N));
  c.C_N = damp * (std::exp(d) - d + K_of_d(d) / N);
  c.C_limit = 1.0 - d * std::exp(-d);
  c.calC_N = calC_N_of_d(N, d);
  c.calC = calC_of_d(d);
  return c;
}

double d_star() {
  // calC < 1 just right of 0 and calC(2) > 1; locate the first sign change on a grid, then bisect
  constexpr int kGrid = 1024;
  double lo = 0.0;
  double hi = 2.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double x = 2.0 * i / kGrid;
    if (calC_of_d(x) >= 1.0) {
      lo = 2.0 * (i - 1) / kGrid;
      hi = x;
      break;
    }
    if (i == kGrid) {
      throw SolverFailure("d_star: no sign change of calC - 1 on (0, 2]", 0.0, 2.0);
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (calC_of_d(mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dampwave
