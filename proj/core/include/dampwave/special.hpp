#pragma once

namespace dampwave {

/// Modified Bessel function I_order(x), order 0 or 1, x >= 0, by its power series.
double bessel_I(int order, double x);

/// f0(d) = d (I0(d) - 1), f1(d) = d I1(d), K(d) = f0 + f1.
double f0_of_d(double d);
double f1_of_d(double d);
double K_of_d(double d);

struct ContractionConstants {
  double C_N = 0.0;      ///< (1 + d/N)^{-N} (e^d - d + K(d)/N)
  double C_limit = 0.0;  ///< 1 - d e^{-d}
  double calC_N = 0.0;   ///< (1 + d/N)^{-N} (1 + (1 + d)^2 (e^d - d - 1 + K(d)/N))
  double calC = 0.0;     ///< e^{-d} (1 + (1 + d)^2 (e^d - d - 1))
};

ContractionConstants contraction_constants(int N, double d);
double calC_of_d(double d);
double calC_N_of_d(int N, double d);

/// The root d* of calC(d) = 1 in (0, 2].
double d_star();

}  // namespace dampwave
