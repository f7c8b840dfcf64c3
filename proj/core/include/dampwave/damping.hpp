#pragma once

#include <functional>
#include <string>

namespace dampwave {

enum class DampingKind { linear, custom };

/// Damping nonlinearity g with its derivative. Required: g(0) = 0, g' >= 0.
class DampingFunction {
 public:
  using Fn = std::function<double(double)>;

  /// g(J) = J.
  static DampingFunction linear();
  static DampingFunction custom(Fn g, Fn derivative, std::string name = "custom");

  double operator()(double J) const { return kind_ == DampingKind::linear ? J : g_(J); }
  double derivative(double J) const { return kind_ == DampingKind::linear ? 1.0 : dg_(J); }

  DampingKind kind() const noexcept { return kind_; }
  bool is_linear() const noexcept { return kind_ == DampingKind::linear; }
  const std::string& name() const noexcept { return name_; }

  /// Largest sampled g' on [lo, hi] (`samples` equispaced points).
  /// Throws ConfigurationError when g(0) != 0 or a sampled g' is negative.
  double certify(double lo, double hi, int samples = 1024) const;

  /// w -> g(beta + w) - g(beta); stays linear when g is linear.
  DampingFunction shifted(double beta) const;

 private:
  DampingFunction(DampingKind kind, Fn g, Fn dg, std::string name);

  DampingKind kind_;
  Fn g_;
  Fn dg_;
  std::string name_;
};

}  // namespace dampwave
