#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace dampwave {

using Vec = std::vector<double>;

/// e = (1, ..., 1) of length 2N.
Vec ones_vector(int N);
/// v- = (1, -1, -1, 1, ..., 1, -1, -1, 1) of length 2N.
Vec v_minus_vector(int N);
/// v_ell: ones in the first ell slots, zeros after.
Vec v_ell_vector(int N, int ell);
double dot(const Vec& a, const Vec& b);
double l1_norm(const Vec& w);

/// Uniform gamma_j = value for the N - 1 interior nodes.
Vec uniform_gamma(int N, double value);

/// Swap of the pairs (w_{2i}, w_{2i+1}) (0-based).
void apply_B1_inplace(Vec& w);
Vec apply_B1(const Vec& w);

/// Averaging blocks at the interior nodes; slots 0 and 2N-1 are fixed.
/// `gamma` has N - 1 nonnegative entries.
void apply_B2_inplace(const Vec& gamma, Vec& w);
Vec apply_B2(const Vec& gamma, const Vec& w);
/// Adds alpha_jump * G with G = (0, -p_1, p_1, ..., -p_{N-1}, p_{N-1}, 0).
Vec apply_B2(const Vec& gamma, const Vec& w, const Vec& p, double alpha_jump);

/// B = B2 B1 and its transpose B1 B2.
Vec apply_B(const Vec& gamma, const Vec& w);
Vec apply_B_transpose(const Vec& gamma, const Vec& w);

/// Index maps of the permutation powers B(0)^p, p in Z: (B(0)^p w)_i = w_{map(p)_i}.
class PermutationPower {
 public:
  explicit PermutationPower(int N);

  int N() const noexcept { return N_; }
  std::vector<int> index_map(std::int64_t p) const;
  Vec apply(std::int64_t p, const Vec& w) const;
  /// Lengths of the cycles of B(0).
  std::vector<int> cycle_lengths() const;

 private:
  int N_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> cycle_of_;
  std::vector<int> position_in_cycle_;
};

/// P^ w = ((w.e) e + (w.v-) v-) / (2N).
Vec hat_P_apply(const Vec& w);

/// Phi(w) = (w.v_2N, -w.v_2, w.v_2, ..., -w.v_{2N-2}, w.v_{2N-2}, -w.v_2N).
Vec phi(const Vec& w);

/// Coefficients of the remainder, with gamma = d / N.
double zeta_coeff(int j, int N, double d);
double eta_coeff(int j, int N, double d);

struct CoefficientSums {
  double zeta = 0.0;
  double eta = 0.0;
};
CoefficientSums coefficient_sums(int N, double d);

/// R_N(d) w = sum_j zeta_j B1 B(0)^{N-2j-1} w + sum_j eta_j B(0)^{2j-N} w.
Vec remainder_R_apply(int N, double d, const Vec& w);
Vec remainder_R_apply(const PermutationPower& powers, double d, const Vec& w);

/// [B(0) + (d/N) B1]^N w, by N explicit applications.
Vec expansion_lhs_apply(int N, double d, const Vec& w);
/// B(0)^N w + d P^ w + R_N(d) w.
Vec expansion_rhs_apply(const PermutationPower& powers, double d, const Vec& w);

/// Max-abs difference of both sides of the expansion on `probes` seeded random vectors.
double expansion_residual(int N, double d, int probes = 3, std::uint64_t seed = 1);

enum class OperatorKind { B1, B2, B, B0_power, hat_P, Phi, remainder };

/// Matrix-free linear operator on R^{2N}.
class StructuredOperator {
 public:
  static StructuredOperator B1(int N);
  static StructuredOperator B2(Vec gamma);
  static StructuredOperator B(Vec gamma);
  static StructuredOperator B0_power(int N, std::int64_t p);
  static StructuredOperator hat_P(int N);
  static StructuredOperator Phi(int N);
  static StructuredOperator remainder(int N, double d);

  OperatorKind kind() const noexcept { return kind_; }
  int N() const noexcept { return N_; }
  Vec apply(const Vec& w) const;

 private:
  StructuredOperator(OperatorKind kind, int N) : kind_(kind), N_(N) {}

  OperatorKind kind_;
  int N_;
  Vec gamma_;
  std::int64_t power_ = 0;
  double d_ = 0.0;
};

inline constexpr int kDenseMaxN = 512;

/// Dense 2N x 2N realization built column by column. Throws DimensionError for N > 512.
Eigen::MatrixXd dense(const StructuredOperator& op);

}  // namespace dampwave
