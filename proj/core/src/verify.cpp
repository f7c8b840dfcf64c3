#include "dampwave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "dampwave/bvdata.hpp"
#include "dampwave/decay.hpp"
#include "dampwave/riemann.hpp"
#include "dampwave/simulation.hpp"
#include "dampwave/special.hpp"
#include "dampwave/transition.hpp"

namespace dampwave {
namespace {

using Check = std::function<std::string(bool&)>;

ProblemSpec telegrapher(double d, std::uint64_t seed, int pieces = 16) {
  ProblemSpec spec;
  spec.k = KProfile::constant(d);
  spec.initial = generate_bv_data(seed, pieces, -1.0, 1.0);
  return spec;
}

Vec random_vector(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Vec w(static_cast<std::size_t>(2 * N));
  for (auto& v : w) {
    v = uni(rng);
  }
  return w;
}

// removes the components along e and v- (orthogonal, both of squared norm 2N)
Vec project_E_minus(Vec w) {
  const int N = static_cast<int>(w.size() / 2);
  const Vec e = ones_vector(N);
  const Vec vm = v_minus_vector(N);
  const double a = dot(w, e) / (2.0 * N);
  const double b = dot(w, vm) / (2.0 * N);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] -= a * e[i] + b * vm[i];
  }
  return w;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

std::string expansion_identity(bool& ok) {
  double worst = 0.0;
  for (int N : {2, 4, 8}) {
    for (double d : {0.1, 0.7, 1.5}) {
      const Eigen::MatrixXd B0 = dense(StructuredOperator::B(uniform_gamma(N, 0.0)));
      const Eigen::MatrixXd B1 = dense(StructuredOperator::B1(N));
      Eigen::MatrixXd base = B0 + (d / N) * B1;
      Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(2 * N, 2 * N);
      for (int k = 0; k < N; ++k) {
        lhs = lhs * base;
      }
      const Eigen::MatrixXd rhs = dense(StructuredOperator::B0_power(N, N)) +
                                  d * dense(StructuredOperator::hat_P(N)) +
                                  dense(StructuredOperator::remainder(N, d));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  ok = worst <= 1e-11;
  return "max |lhs - rhs| = " + fmt(worst);
}

std::string permutation_periodicity(bool& ok) {
  ok = true;
  for (int N : {2, 8, 64}) {
    const PermutationPower P(N);
    const auto full = P.index_map(2 * N);
    const auto half = P.index_map(N);
    for (int i = 0; i < 2 * N; ++i) {
      ok = ok && full[static_cast<std::size_t>(i)] == i && half[static_cast<std::size_t>(i)] == 2 * N - 1 - i;
    }
  }
  return "B(0)^{2N} = I and B(0)^N = antidiagonal for N in {2, 8, 64}";
}

std::string doubly_stochastic(bool& ok) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 2.0);
  double worst = 0.0;
  double most_negative = 0.0;
  for (int N : {4, 8, 32}) {
    Vec gamma(static_cast<std::size_t>(N - 1));
    for (auto& g : gamma) {
      g = uni(rng);
    }
    const Eigen::MatrixXd B = dense(StructuredOperator::B(gamma));
    worst = std::max({worst, (B.rowwise().sum().array() - 1.0).abs().maxCoeff(),
                      (B.colwise().sum().array() - 1.0).abs().maxCoeff()});
    most_negative = std::min(most_negative, B.minCoeff());
  }
  ok = worst <= 1e-13 && most_negative >= -1e-15;
  return "max |row/col sum - 1| = " + fmt(worst);
}

std::string eigenvectors(bool& ok) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int N : {2, 4, 16, 64}) {
    Vec gamma(static_cast<std::size_t>(N - 1));
    for (auto& g : gamma) {
      g = uni(rng);
    }
    const Vec e = ones_vector(N);
    const Vec vm = v_minus_vector(N);
    const Vec Be = apply_B(gamma, e);
    const Vec Btv = apply_B_transpose(gamma, vm);
    for (std::size_t i = 0; i < e.size(); ++i) {
      worst = std::max({worst, std::abs(Be[i] - e[i]), std::abs(Btv[i] + vm[i])});
    }
  }
  ok = worst <= 1e-15;
  return "B e = e, B^t v- = -v-, max deviation " + fmt(worst);
}

std::string coefficient_bounds(bool& ok) {
  ok = true;
  double min_margin = INFINITY;
  for (int N : {8, 64, 512}) {
    for (double d : {0.25, 0.5, 1.0}) {
      const CoefficientSums s = coefficient_sums(N, d);
      const double total = std::expm1(d) - d + K_of_d(d) / N;
      const double zb = std::sinh(d) - d + f0_of_d(d) / N;
      const double eb = std::cosh(d) - 1.0 + f1_of_d(d) / N;
      min_margin = std::min({min_margin, total - s.zeta - s.eta, zb - s.zeta, eb - s.eta});
    }
  }
  ok = min_margin >= -1e-12;
  return "smallest bound margin " + fmt(min_margin);
}

std::string closed_form_constants(bool& ok) {
  const double ds = d_star();
  bool cn_ok = true;
  for (int N : {64, 128, 256, 512}) {
    for (double d : {0.25, 0.5, 1.0}) {
      const auto c = contraction_constants(N, d);
      cn_ok = cn_ok && std::abs(c.C_N - c.C_limit) <= (K_of_d(d) + d * d * std::exp(d)) / N;
    }
  }
  ok = calC_of_d(0.0) == 1.0 && std::abs(calC_of_d(0.5) - 0.80950) <= 5e-5 && ds > 0.74 && ds < 0.75 &&
       std::abs(calC_of_d(ds) - 1.0) <= 1e-10 && calC_of_d(1.0) > 1.0 && cn_ok;
  return "calC(0.5) = " + fmt(calC_of_d(0.5)) + ", d* = " + fmt(ds);
}

std::string phi_identities(bool& ok) {
  std::mt19937_64 rng(13);
  double worst = 0.0;
  for (int N : {2, 4, 8, 32}) {
    const PermutationPower P(N);
    for (int trial = 0; trial < 20; ++trial) {
      Vec w = random_vector(rng, N);
      const double mean = dot(w, ones_vector(N)) / (2.0 * N);
      for (auto& v : w) {
        v -= mean;
      }
      const Vec f = phi(w);
      const Vec ff = phi(f);
      const Vec lhs = phi(P.apply(N, w));
      const Vec rhs = P.apply(N, f);
      for (std::size_t i = 0; i < w.size(); ++i) {
        worst = std::max({worst, std::abs(ff[i] + f[i]), std::abs(lhs[i] - rhs[i])});
      }
    }
  }
  ok = worst <= 1e-13;
  return "Phi(Phi w) = -Phi w and Phi B(0)^N = B(0)^N Phi, max deviation " + fmt(worst);
}

std::string cycle_average(bool& ok) {
  double worst = 0.0;
  for (int N : {2, 4, 8}) {
    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int j = 0; j < N; ++j) {
      avg += dense(StructuredOperator::B0_power(N, 2 * j));
    }
    avg /= N;
    worst = std::max(worst, (avg - dense(StructuredOperator::hat_P(N))).cwiseAbs().maxCoeff());
  }
  ok = worst <= 1e-14;
  return "(1/N) sum B(0)^{2j} = P^, max deviation " + fmt(worst);
}

std::string l1_contraction(bool& ok) {
  std::mt19937_64 rng(14);
  const double d = 0.5;
  double worst_ratio = 0.0;
  ok = true;
  for (int N : {32, 128}) {
    const double CN = contraction_constants(N, d).C_N;
    const Vec gamma = uniform_gamma(N, d / N);
    for (int trial = 0; trial < 100; ++trial) {
      Vec w = project_E_minus(random_vector(rng, N));
      const double before = l1_norm(w);
      for (int k = 0; k < N; ++k) {
        w = apply_B(gamma, w);
      }
      const double ratio = l1_norm(w) / before;
      worst_ratio = std::max(worst_ratio, ratio / CN);
      ok = ok && ratio <= CN;
    }
  }
  return "max ||B^N w|| / (C_N ||w||) = " + fmt(worst_ratio);
}

std::string riemann_invariant_square(bool& ok) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> dd(0.0, 0.9);
  const auto g = DampingFunction::linear();
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const DiagState l{uni(rng), uni(rng)};
    const DiagState r{uni(rng), uni(rng)};
    const double lo = std::min({l.f_minus, l.f_plus, r.f_minus, r.f_plus});
    const double hi = std::max({l.f_minus, l.f_plus, r.f_minus, r.f_plus});
    const RiemannFan fan = solve_riemann(l, r, dd(rng), 1.0, g);
    for (const DiagState& s : {fan.star_left(), fan.star_right()}) {
      worst = std::max({worst, lo - s.f_minus, lo - s.f_plus, s.f_minus - hi, s.f_plus - hi});
    }
  }
  ok = worst <= 1e-12;
  return "largest excursion outside [m, M]^2: " + fmt(std::max(worst, 0.0));
}

std::string interaction_identities(bool& ok) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> a01(0.0, 1.0);
  const auto g = DampingFunction::linear();
  double conservation = 0.0;
  double excess = 0.0;
  double path_gap = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::array<double, 2> in{uni(rng), uni(rng)};
    const double Jm = uni(rng);
    const double delta = 0.5 * a01(rng);
    const double am = a01(rng);
    const double ap = a01(rng);
    const auto mat = multiple_interaction(in, Jm, delta, am, ap, g, InteractionPath::matrix);
    const auto root = multiple_interaction(in, Jm, delta, am, ap, g, InteractionPath::root_solve);
    conservation = std::max(conservation, std::abs(mat.sigma_out[0] + mat.sigma_out[1] - in[0] - in[1]));
    // |g(J*-)| <= C0 for every state in the invariant square
    const double allowed = std::abs(in[0]) + std::abs(in[1]) + 2.0 * std::abs(g(Jm)) * delta * std::abs(ap - am);
    excess = std::max(excess, std::abs(mat.sigma_out[0]) + std::abs(mat.sigma_out[1]) - allowed);
    path_gap = std::max({path_gap, std::abs(mat.sigma_out[0] - root.sigma_out[0]),
                         std::abs(mat.sigma_out[1] - root.sigma_out[1])});
  }
  ok = conservation <= 1e-13 && excess <= 1e-12 && path_gap <= 1e-12;
  return "sum defect " + fmt(conservation) + ", path gap " + fmt(path_gap);
}

struct SchemeStats {
  double mass_drift = 0.0;
  double domain_excess = 0.0;
  double sigma_e = 0.0;
  double vminus_defect = 0.0;
  bool tv_monotone = true;
};

SchemeStats scheme_stats(int seeds, int N, double t_end) {
  SchemeStats st;
  for (int seed = 0; seed < seeds; ++seed) {
    Simulation sim(telegrapher(0.5, static_cast<std::uint64_t>(seed)), N);
    const double m = sim.data().m;
    const double M = sim.data().M;
    auto rec = sim.diagnostics();
    const double v0 = std::abs(rec.sigma_dot_vminus);
    double tv = rec.tv_J;
    const long steps = steps_for(t_end, N);
    for (long n = 0; n < steps; ++n) {
      for (int half = 0; half < 2; ++half) {
        half == 0 ? sim.half_step() : sim.full_step();
        rec = sim.diagnostics();
        st.mass_drift = std::max(st.mass_drift, rec.mass_drift);
        st.domain_excess = std::max({st.domain_excess, m - rec.range.inf(), rec.range.sup() - M});
        st.sigma_e = std::max(st.sigma_e, std::abs(rec.sigma_dot_e));
        st.vminus_defect = std::max(st.vminus_defect, std::abs(std::abs(rec.sigma_dot_vminus) - v0));
        st.tv_monotone = st.tv_monotone && rec.tv_J <= tv + 1e-12;
        tv = rec.tv_J;
      }
    }
  }
  return st;
}

std::string scheme_invariants(bool& ok) {
  const SchemeStats st = scheme_stats(3, 128, 3.0);
  ok = st.mass_drift <= 1e-10 && st.domain_excess <= 1e-10 && st.sigma_e <= 1e-11 && st.tv_monotone &&
       st.vminus_defect <= 1e-11;
  return "mass drift " + fmt(st.mass_drift) + ", domain excess " + fmt(std::max(st.domain_excess, 0.0)) +
         ", |sigma.e| " + fmt(st.sigma_e);
}

double l1_distance(const FieldSnapshot& a, const FieldSnapshot& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.rho.size(); ++j) {
    s += std::abs(a.f_minus(j) - b.f_minus(j)) + std::abs(a.f_plus(j) - b.f_plus(j));
  }
  return s / static_cast<double>(a.rho.size());
}

std::string l1_stability(bool& ok) {
  ok = true;
  double worst = 0.0;
  const int N = 128;
  for (int pair = 0; pair < 3; ++pair) {
    Simulation a(telegrapher(0.5, 100 + 2 * pair), N);
    Simulation b(telegrapher(0.5, 101 + 2 * pair), N);
    double prev = l1_distance(a.snapshot(), b.snapshot());
    for (int n = 0; n < 3 * N; ++n) {
      a.step();
      b.step();
      const double cur = l1_distance(a.snapshot(), b.snapshot());
      worst = std::max(worst, cur - prev);
      prev = cur;
    }
  }
  ok = worst <= 1e-10;
  return "largest increase of the L1 distance " + fmt(std::max(worst, 0.0));
}

std::string dual_path(bool& ok) {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Simulation lin(telegrapher(0.5, seed), 64, StepMethod::explicit_linear);
    Simulation root(telegrapher(0.5, seed), 64, StepMethod::root_solve);
    lin.advance_steps(200);
    root.advance_steps(200);
    for (std::size_t i = 0; i < lin.state().sigma.size(); ++i) {
      worst = std::max(worst, std::abs(lin.state().sigma[i] - root.state().sigma[i]));
    }
  }
  ok = worst <= 1e-12;
  return "max |sigma_linear - sigma_root| = " + fmt(worst);
}

std::string free_transport(bool& ok) {
  ok = true;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Simulation sim(telegrapher(0.0, seed), 128);
    const FieldSnapshot s0 = sim.snapshot();
    sim.advance_steps(2 * 128);
    const FieldSnapshot s2 = sim.snapshot();
    for (std::size_t j = 0; j < s0.J.size(); ++j) {
      ok = ok && s0.J[j] == s2.J[j] && std::abs(s0.rho[j] - s2.rho[j]) <= 1e-12;
    }
  }
  return "k = 0: fields at t = 2 equal fields at t = 0";
}

std::string contraction_t1(bool& ok) {
  ok = true;
  double min_margin = INFINITY;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Simulation sim(telegrapher(0.5, seed), 256);
    sim.advance_steps(256);
    const T1Report r = contraction_check_t1(sim);
    ok = ok && r.pass;
    min_margin = std::min(min_margin, r.margin);
  }
  return "smallest margin " + fmt(min_margin);
}

}  // namespace

std::vector<CheckResult> run_verify_suite() {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"expansion_identity", expansion_identity},
      {"permutation_periodicity", permutation_periodicity},
      {"doubly_stochastic", doubly_stochastic},
      {"eigenvector_actions", eigenvectors},
      {"coefficient_bounds", coefficient_bounds},
      {"closed_form_constants", closed_form_constants},
      {"phi_identities", phi_identities},
      {"cycle_average_projector", cycle_average},
      {"l1_contraction_E_minus", l1_contraction},
      {"riemann_invariant_square", riemann_invariant_square},
      {"interaction_identities", interaction_identities},
      {"scheme_invariants", scheme_invariants},
      {"l1_stability", l1_stability},
      {"dual_path_equivalence", dual_path},
      {"free_transport_periodicity", free_transport},
      {"contraction_at_t1", contraction_t1},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      bool ok = false;
      r.detail = fn(ok);
      r.pass = ok;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  }
  return out;
}

}  // namespace dampwave
