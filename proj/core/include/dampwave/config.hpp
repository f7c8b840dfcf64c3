#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dampwave/errors.hpp"
#include "dampwave/problem.hpp"

namespace dampwave {

struct KConfig {
  KKind kind = KKind::constant;
  std::vector<double> breaks;
  std::vector<double> values{0.0};
  bool operator==(const KConfig&) const = default;
};

enum class GKind { linear, cubic, tanh };

/// linear: g = J; cubic c: g = J + c J^3 (c >= 0); tanh: g = tanh J.
struct GConfig {
  GKind kind = GKind::linear;
  double c = 0.0;
  bool operator==(const GConfig&) const = default;
};

struct AlphaConfig {
  AlphaKind kind = AlphaKind::constant;
  double value = 1.0;
  double T1 = 0.0;
  double T2 = 0.0;
  std::vector<double> times;
  std::vector<double> values;
  bool operator==(const AlphaConfig&) const = default;
};

enum class FieldKind { zero, constant, sign, cos, sin };

/// zero | constant A | sign (sign(x - 1/2)) | cos A n (A cos(n pi x)) | sin A n (A sin(n pi x)).
struct FieldConfig {
  FieldKind kind = FieldKind::zero;
  double A = 0.0;
  int n = 0;
  bool operator==(const FieldConfig&) const = default;
};

enum class InitialMode { analytic, bv };

struct RunConfig {
  // [problem]
  KConfig k;
  GConfig g;
  AlphaConfig alpha;
  FieldConfig rho0;
  FieldConfig J0;
  InitialMode initial = InitialMode::analytic;
  int bv_pieces = 16;
  double bv_m = -1.0;
  double bv_M = 1.0;
  double beta = 0.0;
  // [run]
  int N = 256;
  double t_end = 10.0;
  std::optional<int> emit_every;  ///< defaults to N
  std::uint64_t seed = 0;
  std::string output_dir = "out";

  int effective_emit_every() const { return emit_every.value_or(N); }
  bool operator==(const RunConfig&) const = default;
};

struct ConfigIssue {
  int line = 0;
  std::string message;
};

/// All problems found while parsing, each with its line number (0 for whole-file checks).
class ConfigParseError : public ConfigurationError {
 public:
  explicit ConfigParseError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

/// Flat key = value text with [problem] and [run] sections and '#' comments.
RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& config);

DampingFunction make_damping(const GConfig& g);
/// Builds the problem; bv data is generated from `seed`.
ProblemSpec to_problem_spec(const RunConfig& config, std::uint64_t seed);
inline ProblemSpec to_problem_spec(const RunConfig& config) { return to_problem_spec(config, config.seed); }

}  // namespace dampwave
