#include "dampwave/transition.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "dampwave/errors.hpp"

namespace dampwave {
namespace {

int half_length(const Vec& w, const char* where) {
  if (w.empty() || w.size() % 2 != 0) {
    std::ostringstream msg;
    msg << where << ": vector length " << w.size() << " is not 2N with N >= 1";
    throw DimensionError(msg.str());
  }
  return static_cast<int>(w.size() / 2);
}

void check_gamma(const Vec& gamma, const Vec& w, const char* where) {
  const int N = half_length(w, where);
  if (gamma.size() != static_cast<std::size_t>(N - 1)) {
    std::ostringstream msg;
    msg << where << ": gamma has " << gamma.size() << " entries, expected " << N - 1;
    throw DimensionError(msg.str());
  }
  for (double g : gamma) {
    if (!(g >= 0.0)) {
      throw ConfigurationError(std::string(where) + ": gamma entries must be >= 0");
    }
  }
}

}  // namespace

Vec ones_vector(int N) { return Vec(static_cast<std::size_t>(2 * N), 1.0); }

Vec v_minus_vector(int N) {
  Vec v(static_cast<std::size_t>(2 * N));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (i % 4 == 0 || i % 4 == 3) ? 1.0 : -1.0;
  }
  return v;
}

Vec v_ell_vector(int N, int ell) {
  Vec v(static_cast<std::size_t>(2 * N), 0.0);
  for (int i = 0; i < ell && i < 2 * N; ++i) {
    v[static_cast<std::size_t>(i)] = 1.0;
  }
  return v;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dot: length mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

double l1_norm(const Vec& w) {
  double s = 0.0;
  for (double v : w) {
    s += std::abs(v);
  }
  return s;
}

Vec uniform_gamma(int N, double value) { return Vec(static_cast<std::size_t>(N - 1), value); }

void apply_B1_inplace(Vec& w) {
  half_length(w, "apply_B1");
  for (std::size_t i = 0; i < w.size(); i += 2) {
    std::swap(w[i], w[i + 1]);
  }
}

Vec apply_B1(const Vec& w) {
  Vec out = w;
  apply_B1_inplace(out);
  return out;
}

void apply_B2_inplace(const Vec& gamma, Vec& w) {
  check_gamma(gamma, w, "apply_B2");
  for (std::size_t j = 1; j <= gamma.size(); ++j) {
    const double g = gamma[j - 1];
    const double a = w[2 * j - 1];
    const double b = w[2 * j];
    w[2 * j - 1] = (g * a + b) / (1.0 + g);
    w[2 * j] = (a + g * b) / (1.0 + g);
  }
}

Vec apply_B2(const Vec& gamma, const Vec& w) {
  Vec out = w;
  apply_B2_inplace(gamma, out);
  return out;
}

Vec apply_B2(const Vec& gamma, const Vec& w, const Vec& p, double alpha_jump) {
  Vec out = apply_B2(gamma, w);
  if (p.size() != gamma.size()) {
    throw DimensionError("apply_B2: source has the wrong length");
  }
  for (std::size_t j = 1; j <= p.size(); ++j) {
    out[2 * j - 1] -= alpha_jump * p[j - 1];
    out[2 * j] += alpha_jump * p[j - 1];
  }
  return out;
}

Vec apply_B(const Vec& gamma, const Vec& w) {
  Vec out = apply_B1(w);
  apply_B2_inplace(gamma, out);
  return out;
}

Vec apply_B_transpose(const Vec& gamma, const Vec& w) {
  Vec out = apply_B2(gamma, w);
  apply_B1_inplace(out);
  return out;
}

PermutationPower::PermutationPower(int N) : N_(N) {
  if (N < 1) {
    throw DimensionError("PermutationPower: N must be >= 1");
  }
  const int n = 2 * N;
  // (B(0) w)_i = w_{pi(i)}, pi = (B1 index swap) after (interior-node swap)
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int t = i;
    if (i != 0 && i != n - 1) {
      t = (i % 2 == 1) ? i + 1 : i - 1;
    }
    pi[static_cast<std::size_t>(i)] = t ^ 1;
  }
  cycle_of_.assign(static_cast<std::size_t>(n), -1);
  position_in_cycle_.assign(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (cycle_of_[static_cast<std::size_t>(start)] >= 0) {
      continue;
    }
    std::vector<int> cycle;
    for (int i = start; cycle_of_[static_cast<std::size_t>(i)] < 0; i = pi[static_cast<std::size_t>(i)]) {
      cycle_of_[static_cast<std::size_t>(i)] = static_cast<int>(cycles_.size());
      position_in_cycle_[static_cast<std::size_t>(i)] = static_cast<int>(cycle.size());
      cycle.push_back(i);
    }
    cycles_.push_back(std::move(cycle));
  }
}

std::vector<int> PermutationPower::index_map(std::int64_t p) const {
  std::vector<int> map(static_cast<std::size_t>(2 * N_));
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto& cycle = cycles_[static_cast<std::size_t>(cycle_of_[i])];
    const auto L = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = ((p % L) + L) % L;
    map[i] = cycle[static_cast<std::size_t>((position_in_cycle_[i] + shift) % L)];
  }
  return map;
}

Vec PermutationPower::apply(std::int64_t p, const Vec& w) const {
  if (w.size() != static_cast<std::size_t>(2 * N_)) {
    throw DimensionError("PermutationPower::apply: length mismatch");
  }
  const auto map = index_map(p);
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[static_cast<std::size_t>(map[i])];
  }
  return out;
}

std::vector<int> PermutationPower::cycle_lengths() const {
  std::vector<int> lengths;
  for (const auto& c : cycles_) {
    lengths.push_back(static_cast<int>(c.size()));
  }
  return lengths;
}

Vec hat_P_apply(const Vec& w) {
  const int N = half_length(w, "hat_P_apply");
  const Vec vm = v_minus_vector(N);
  double we = 0.0;
  for (double v : w) {
    we += v;
  }
  const double wv = dot(w, vm);
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = (we + wv * vm[i]) / (2.0 * N);
  }
  return out;
}

Vec phi(const Vec& w) {
  const int N = half_length(w, "phi");
  const auto n = static_cast<std::size_t>(N);
  Vec out(w.size());
  double prefix = 0.0;  // w . v_{2l}
  double total = 0.0;
  for (double v : w) {
    total += v;
  }
  out[0] = total;
  prefix = w[0] + w[1];
  for (std::size_t l = 1; l < n; ++l) {
    out[2 * l - 1] = -prefix;
    out[2 * l] = prefix;
    prefix += w[2 * l] + w[2 * l + 1];
  }
  out[2 * n - 1] = -total;
  return out;
}

double zeta_coeff(int j, int N, double d) {
  if (j < 0 || j > N - 1) {
    throw DimensionError("zeta_coeff: need 0 <= j <= N - 1");
  }
  const double gamma = d / N;
  const double m = N - j - 1;
  const int L = std::min(j, N - j - 1);
  if (L < 1 || gamma == 0.0) {
    return 0.0;
  }
  double term = gamma * gamma * gamma * j * m;
  double sum = term;
  for (int l = 1; l < L; ++l) {
    term *= gamma * gamma * (j - l) * (m - l) / ((l + 1.0) * (l + 1.0));
    sum += term;
  }
  return sum;
}

double eta_coeff(int j, int N, double d) {
  if (j < 1 || j > N - 1) {
    throw DimensionError("eta_coeff: need 1 <= j <= N - 1");
  }
  const double gamma = d / N;
  const double m = N - j - 1;
  const int L = std::min(j, N - j);
  if (L < 1 || gamma == 0.0) {
    return 0.0;
  }
  double term = gamma * gamma * j;
  double sum = term;
  for (int i = 1; i < L; ++i) {
    term *= gamma * gamma * (j - i) / (i + 1.0) * (m - i + 1) / i;
    sum += term;
  }
  return sum;
}

CoefficientSums coefficient_sums(int N, double d) {
  CoefficientSums s;
  for (int j = 0; j < N; ++j) {
    s.zeta += zeta_coeff(j, N, d);
  }
  for (int j = 1; j < N; ++j) {
    s.eta += eta_coeff(j, N, d);
  }
  return s;
}

Vec remainder_R_apply(const PermutationPower& powers, double d, const Vec& w) {
  const int N = powers.N();
  if (w.size() != static_cast<std::size_t>(2 * N)) {
    throw DimensionError("remainder_R_apply: length mismatch");
  }
  Vec out(w.size(), 0.0);
  for (int j = 0; j < N; ++j) {
    const double z = zeta_coeff(j, N, d);
    if (z == 0.0) {
      continue;
    }
    Vec u = powers.apply(N - 2 * j - 1, w);
    apply_B1_inplace(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += z * u[i];
    }
  }
  for (int j = 1; j < N; ++j) {
    const double e = eta_coeff(j, N, d);
    if (e == 0.0) {
      continue;
    }
    const Vec u = powers.apply(2 * j - N, w);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += e * u[i];
    }
  }
  return out;
}

Vec remainder_R_apply(int N, double d, const Vec& w) { return remainder_R_apply(PermutationPower(N), d, w); }

Vec expansion_lhs_apply(int N, double d, const Vec& w) {
  if (w.size() != static_cast<std::size_t>(2 * N)) {
    throw DimensionError("expansion_lhs_apply: length mismatch");
  }
  const double gamma = d / N;
  const Vec zero = uniform_gamma(N, 0.0);
  Vec u = w;
  for (int k = 0; k < N; ++k) {
    Vec b0 = apply_B(zero, u);
    apply_B1_inplace(u);
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = b0[i] + gamma * u[i];
    }
  }
  return u;
}

Vec expansion_rhs_apply(const PermutationPower& powers, double d, const Vec& w) {
  const int N = powers.N();
  Vec out = powers.apply(N, w);
  const Vec p = hat_P_apply(w);
  const Vec r = remainder_R_apply(powers, d, w);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += d * p[i] + r[i];
  }
  return out;
}

double expansion_residual(int N, double d, int probes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const PermutationPower powers(N);
  double worst = 0.0;
  for (int k = 0; k < probes; ++k) {
    Vec w(static_cast<std::size_t>(2 * N));
    for (auto& v : w) {
      v = uni(rng);
    }
    const Vec lhs = expansion_lhs_apply(N, d, w);
    const Vec rhs = expansion_rhs_apply(powers, d, w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
  }
  return worst;
}

StructuredOperator StructuredOperator::B1(int N) { return StructuredOperator(OperatorKind::B1, N); }

StructuredOperator StructuredOperator::B2(Vec gamma) {
  StructuredOperator op(OperatorKind::B2, static_cast<int>(gamma.size()) + 1);
  op.gamma_ = std::move(gamma);
  return op;
}

StructuredOperator StructuredOperator::B(Vec gamma) {
  StructuredOperator op(OperatorKind::B, static_cast<int>(gamma.size()) + 1);
  op.gamma_ = std::move(gamma);
  return op;
}

StructuredOperator StructuredOperator::B0_power(int N, std::int64_t p) {
  StructuredOperator op(OperatorKind::B0_power, N);
  op.power_ = p;
  return op;
}

StructuredOperator StructuredOperator::hat_P(int N) { return StructuredOperator(OperatorKind::hat_P, N); }

StructuredOperator StructuredOperator::Phi(int N) { return StructuredOperator(OperatorKind::Phi, N); }

StructuredOperator StructuredOperator::remainder(int N, double d) {
  StructuredOperator op(OperatorKind::remainder, N);
  op.d_ = d;
  return op;
}

Vec StructuredOperator::apply(const Vec& w) const {
  if (w.size() != static_cast<std::size_t>(2 * N_)) {
    throw DimensionError("StructuredOperator::apply: length mismatch");
  }
  switch (kind_) {
    case OperatorKind::B1:
      return apply_B1(w);
    case OperatorKind::B2:
      return apply_B2(gamma_, w);
    case OperatorKind::B:
      return apply_B(gamma_, w);
    case OperatorKind::B0_power:
      return PermutationPower(N_).apply(power_, w);
    case OperatorKind::hat_P:
      return hat_P_apply(w);
    case OperatorKind::Phi:
      return phi(w);
    case OperatorKind::remainder:
      return remainder_R_apply(N_, d_, w);
  }
  return w;
}

Eigen::MatrixXd dense(const StructuredOperator& op) {
  const int N = op.N();
  if (N > kDenseMaxN) {
    std::ostringstream msg;
    msg << "dense: N = " << N << " exceeds the guard " << kDenseMaxN;
    throw DimensionError(msg.str());
  }
  const int n = 2 * N;
  Eigen::MatrixXd A(n, n);
  Vec basis(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    basis[static_cast<std::size_t>(k)] = 1.0;
    const Vec col = op.apply(basis);
    for (int i = 0; i < n; ++i) {
      A(i, k) = col[static_cast<std::size_t>(i)];
    }
    basis[static_cast<std::size_t>(k)] = 0.0;
  }
  return A;
}

}  // namespace dampwave
