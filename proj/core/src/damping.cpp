#include "dampwave/damping.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dampwave/errors.hpp"

namespace dampwave {

DampingFunction::DampingFunction(DampingKind kind, Fn g, Fn dg, std::string name)
    : kind_(kind), g_(std::move(g)), dg_(std::move(dg)), name_(std::move(name)) {}

DampingFunction DampingFunction::linear() {
  return DampingFunction(
      DampingKind::linear, [](double J) { return J; }, [](double) { return 1.0; }, "linear");
}

DampingFunction DampingFunction::custom(Fn g, Fn derivative, std::string name) {
  if (!g || !derivative) {
    throw ConfigurationError("damping function: both g and g' must be provided");
  }
  return DampingFunction(DampingKind::custom, std::move(g), std::move(derivative), std::move(name));
}

double DampingFunction::certify(double lo, double hi, int samples) const {
  if (is_linear()) {
    return 1.0;
  }
  if (std::abs((*this)(0.0)) > 1e-14) {
    throw ConfigurationError("damping function '" + name_ + "': g(0) must vanish");
  }
  if (hi < lo) {
    std::swap(lo, hi);
  }
  samples = std::max(samples, 2);
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double J = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    const double slope = derivative(J);
    if (!(slope >= 0.0)) {
      throw ConfigurationError("damping function '" + name_ + "': g' < 0 at J = " +
                               std::to_string(J));
    }
    sup = std::max(sup, slope);
  }
  return sup;
}

DampingFunction DampingFunction::shifted(double beta) const {
  if (is_linear() || beta == 0.0) {
    return *this;
  }
  Fn g = g_;
  Fn dg = dg_;
  const double g_beta = g(beta);
  return custom([g, beta, g_beta](double w) { return g(beta + w) - g_beta; },
                [dg, beta](double w) { return dg(beta + w); }, name_ + "(shifted)");
}

}  // namespace dampwave
