#include "dampwave/bvdata.hpp"

#include <algorithm>
#include <random>

#include "dampwave/errors.hpp"

namespace dampwave {

InitialData generate_bv_data(std::uint64_t seed, int pieces, double m, double M) {
  if (pieces < 1) {
    throw ConfigurationError("generate_bv_data: pieces must be >= 1");
  }
  if (!(m < M) || !(m <= 0.0 && 0.0 <= M)) {
    throw ConfigurationError("generate_bv_data: need m <= 0 <= M and m < M");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> value(m, M);

  std::vector<double> breaks;
  while (static_cast<int>(breaks.size()) < pieces - 1) {
    const double b = unit(rng);
    if (b > 0.0 && std::find(breaks.begin(), breaks.end(), b) == breaks.end()) {
      breaks.push_back(b);
    }
  }
  std::sort(breaks.begin(), breaks.end());

  const auto P = static_cast<std::size_t>(pieces);
  std::vector<double> fm(P);
  std::vector<double> fp(P);
  for (std::size_t i = 0; i < P; ++i) {
    fm[i] = value(rng);
    fp[i] = value(rng);
  }

  double mean = 0.0;
  double left = 0.0;
  for (std::size_t i = 0; i < P; ++i) {
    const double right = i < breaks.size() ? breaks[i] : 1.0;
    mean += (fm[i] + fp[i]) * (right - left);
    left = right;
  }
  const double shift = -0.5 * mean;
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < P; ++i) {
    fm[i] += shift;
    fp[i] += shift;
    lo = std::min({lo, fm[i], fp[i]});
    hi = std::max({hi, fm[i], fp[i]});
  }
  // scaling about 0 keeps the zero mean
  double scale = 1.0;
  if (hi > M) {
    scale = std::min(scale, M / hi);
  }
  if (lo < m) {
    scale = std::min(scale, m / lo);
  }
  if (scale < 1.0) {
    for (std::size_t i = 0; i < P; ++i) {
      fm[i] = std::clamp(fm[i] * scale, m, M);
      fp[i] = std::clamp(fp[i] * scale, m, M);
    }
  }
  return InitialData::piecewise(std::move(breaks), std::move(fm), std::move(fp));
}

}  // namespace dampwave
