#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dampwave/bvdata.hpp"
#include "dampwave/config.hpp"
#include "dampwave/csv.hpp"
#include "dampwave/decay.hpp"
#include "dampwave/simulation.hpp"
#include "dampwave/verify.hpp"

namespace fs = std::filesystem;
using namespace dampwave;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

template <typename Writer>
void write_to(const std::string& target, Writer&& write) {
  if (target == "-") {
    write(std::cout);
    return;
  }
  auto out = open_output(target);
  write(out);
  if (!out) {
    throw IoError("error while writing " + target);
  }
}

int cmd_simulate(const std::string& config_path, const std::vector<std::uint64_t>& seeds,
                 const std::string& out_override) {
  const RunConfig cfg = parse_config(read_file(config_path));
  const fs::path dir = out_override.empty() ? fs::path(cfg.output_dir) : fs::path(out_override);
  const bool per_seed = !seeds.empty();
  const std::vector<std::uint64_t> run_seeds = per_seed ? seeds : std::vector<std::uint64_t>{cfg.seed};
  for (std::uint64_t seed : run_seeds) {
    const ProblemSpec spec = to_problem_spec(cfg, seed);
    const RunResult result = run(spec, cfg.N, cfg.t_end, cfg.effective_emit_every());
    const std::string suffix = per_seed ? "_seed" + std::to_string(seed) : "";
    const fs::path snap_path = dir / ("snapshots" + suffix + ".csv");
    const fs::path diag_path = dir / ("diagnostics" + suffix + ".csv");
    write_to(snap_path.string(), [&](std::ostream& os) {
      write_snapshot_header(os);
      for (const auto& s : result.snapshots) {
        write_snapshot_rows(os, unshift(s, spec));
      }
    });
    write_to(diag_path.string(), [&](std::ostream& os) { write_diagnostics_csv(os, result.diagnostics); });
    std::cout << "wrote " << snap_path.string() << " and " << diag_path.string() << " ("
              << result.snapshots.size() << " snapshots, " << result.diagnostics.size() << " diagnostics rows)\n";
  }
  return kExitOk;
}

int cmd_verify() {
  const auto results = run_verify_suite();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-28s %7.3fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
    failed += r.pass ? 0 : 1;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_spectrum(const std::vector<double>& ds, const std::vector<int>& Ns, const std::string& out) {
  std::vector<SpectrumRow> rows;
  for (double d : ds) {
    for (int N : Ns) {
      rows.push_back(spectrum_row(N, d));
    }
  }
  write_to(out, [&](std::ostream& os) { write_spectrum_csv(os, rows); });
  return kExitOk;
}

struct DecayFlags {
  double d = 0.5;
  int N = 512;
  double t_end = 10.0;
  std::string mode = "constant";
  double T1 = 1.0;
  double T2 = 2.0;
  std::uint64_t seed = 0;
  int pieces = 16;
  std::string out = "decay.csv";
};

int cmd_decay(const DecayFlags& f) {
  ProblemSpec spec;
  spec.k = KProfile::constant(f.d);
  spec.alpha = f.mode == "onoff" ? AlphaSchedule::on_off(f.T1, f.T2) : AlphaSchedule::constant(1.0);
  spec.initial = generate_bv_data(f.seed, f.pieces, -1.0, 1.0);
  const DecayReport rep = decay_report(spec, f.N, f.t_end);
  write_to(f.out, [&](std::ostream& os) { write_decay_csv(os, rep); });
  std::printf("C1 = %.6g  C2 = %.6g  C3 = %.6g  eps_N = %.3g  rows = %zu\n", rep.constants.C1, rep.constants.C2,
              rep.constants.C3, rep.eps_N, rep.rows.size());
  if (rep.fit_available) {
    std::printf("fitted rate = %.6g (prefactor %.6g)\n", rep.fit.rate, rep.fit.prefactor);
  }
  std::printf("envelope %s\n", rep.pass ? "holds at all rows" : "VIOLATED");
  return rep.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dampwave: wave-front tracking for the damped wave equation on [0, 1]"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::uint64_t> seeds;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Run a configured simulation and write CSV output");
  simulate->add_option("--config", config_path, "Configuration file")->required();
  simulate->add_option("--seeds", seeds, "Seeds for bv data (one output pair per seed)")->delimiter(',');
  simulate->add_option("--out", sim_out, "Output directory (overrides output_dir)");

  auto* verify = app.add_subcommand("verify", "Run the built-in identity and property checks");

  std::vector<double> ds;
  std::vector<int> Ns;
  std::string spectrum_out;
  auto* spectrum = app.add_subcommand("spectrum", "Tabulate contraction constants and expansion residuals");
  spectrum->add_option("--d", ds, "Damping values")->required()->delimiter(',');
  spectrum->add_option("--N", Ns, "Grid sizes (even)")->required()->delimiter(',');
  spectrum->add_option("--out", spectrum_out, "CSV path, '-' for stdout")->required();

  DecayFlags df;
  auto* decay = app.add_subcommand("decay-report", "Check the exponential decay envelope on seeded data");
  decay->add_option("--d", df.d, "Damping coefficient")->capture_default_str();
  decay->add_option("--N", df.N, "Grid size (even)")->capture_default_str();
  decay->add_option("--t-end", df.t_end, "Final time")->capture_default_str();
  decay->add_option("--mode", df.mode, "constant or onoff")
      ->check(CLI::IsMember({"constant", "onoff"}))
      ->capture_default_str();
  decay->add_option("--T1", df.T1, "On-off: damping on for T1")->capture_default_str();
  decay->add_option("--T2", df.T2, "On-off: period T2")->capture_default_str();
  decay->add_option("--seed", df.seed, "Seed of the bv data")->capture_default_str();
  decay->add_option("--pieces", df.pieces, "Pieces of the bv data")->capture_default_str();
  decay->add_option("--out", df.out, "CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      return cmd_simulate(config_path, seeds, sim_out);
    }
    if (*verify) {
      return cmd_verify();
    }
    if (*spectrum) {
      return cmd_spectrum(ds, Ns, spectrum_out);
    }
    if (*decay) {
      return cmd_decay(df);
    }
  } catch (const ConfigParseError& e) {
    std::cerr << "configuration errors:\n" << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfTheoryError& e) {
    std::cerr << "out of theory: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
