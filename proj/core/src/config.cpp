#include "dampwave/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "dampwave/bvdata.hpp"

namespace dampwave {
namespace {

std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) {
      out << "\n";
    }
    if (issues[i].line > 0) {
      out << "line " << issues[i].line << ": ";
    }
    out << issues[i].message;
  }
  return out.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? " " : "") + fmt(v[i]);
  }
  return out;
}

class Reader {
 public:
  Reader(int line, std::vector<ConfigIssue>& issues) : line_(line), issues_(issues) {}

  void fail(const std::string& msg) {
    issues_.push_back({line_, msg});
    ok_ = false;
  }
  bool ok() const { return ok_; }

  double number(const std::string& tok, const std::string& key) {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end || !std::isfinite(v)) {
      fail(key + ": expected a number, got '" + tok + "'");
    }
    return v;
  }

  template <typename Int>
  Int integer(const std::string& tok, const std::string& key) {
    Int v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || p != end) {
      fail(key + ": expected an integer, got '" + tok + "'");
    }
    return v;
  }

  std::vector<double> numbers(const std::vector<std::string>& toks, std::size_t from, std::size_t to,
                              const std::string& key) {
    std::vector<double> out;
    for (std::size_t i = from; i < to; ++i) {
      out.push_back(number(toks[i], key));
    }
    return out;
  }

 private:
  int line_;
  std::vector<ConfigIssue>& issues_;
  bool ok_ = true;
};

// "a b : c d e" -> ({a, b}, {c, d, e}); returns false without a ':' separator
bool split_colon(Reader& r, const std::vector<std::string>& toks, const std::string& key,
                 std::vector<double>& before, std::vector<double>& after) {
  std::size_t colon = toks.size();
  for (std::size_t i = 1; i < toks.size(); ++i) {
    if (toks[i] == ":") {
      colon = i;
    }
  }
  if (colon == toks.size()) {
    r.fail(key + ": expected '<breakpoints> : <values>'");
    return false;
  }
  before = r.numbers(toks, 1, colon, key);
  after = r.numbers(toks, colon + 1, toks.size(), key);
  return true;
}

void parse_k(Reader& r, const std::vector<std::string>& toks, KConfig& k) {
  const std::string& kind = toks[0];
  if (kind == "constant" && toks.size() == 2) {
    k = {KKind::constant, {}, {r.number(toks[1], "k")}};
  } else if (kind == "piecewise") {
    KConfig out{KKind::piecewise, {}, {}};
    if (split_colon(r, toks, "k", out.breaks, out.values)) {
      k = out;
    }
  } else if (kind == "table" && toks.size() >= 3) {
    k = {KKind::tabulated, {}, r.numbers(toks, 1, toks.size(), "k")};
  } else {
    r.fail("k: expected 'constant <d>', 'piecewise <b..> : <v..>' or 'table <v..>'");
    return;
  }
  for (double v : k.values) {
    if (v < 0.0) {
      r.fail("k must be >= 0");
      break;
    }
  }
  if (r.ok()) {
    try {
      if (k.kind == KKind::piecewise) {
        (void)KProfile::piecewise(k.breaks, k.values);
      }
    } catch (const ConfigurationError& e) {
      r.fail(e.what());
    }
  }
}

void parse_g(Reader& r, const std::vector<std::string>& toks, GConfig& g) {
  if (toks[0] == "linear" && toks.size() == 1) {
    g = {GKind::linear, 0.0};
  } else if (toks[0] == "cubic" && toks.size() == 2) {
    g = {GKind::cubic, r.number(toks[1], "g")};
    if (g.c < 0.0) {
      r.fail("g: cubic coefficient must be >= 0");
    }
  } else if (toks[0] == "tanh" && toks.size() == 1) {
    g = {GKind::tanh, 0.0};
  } else {
    r.fail("g: expected 'linear', 'cubic <c>' or 'tanh'");
  }
}

void check_alpha_value(Reader& r, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    r.fail("alpha values must lie in [0, 1]");
  }
}

void parse_alpha(Reader& r, const std::vector<std::string>& toks, AlphaConfig& a) {
  const std::string& kind = toks[0];
  if (kind == "constant" && toks.size() <= 2) {
    AlphaConfig out;
    out.kind = AlphaKind::constant;
    out.value = toks.size() == 2 ? r.number(toks[1], "alpha") : 1.0;
    check_alpha_value(r, out.value);
    a = out;
  } else if (kind == "on_off" && toks.size() == 3) {
    AlphaConfig out;
    out.kind = AlphaKind::on_off;
    auto strip = [](const std::string& t, const char* prefix) {
      const std::string p(prefix);
      return t.rfind(p, 0) == 0 ? t.substr(p.size()) : t;
    };
    out.T1 = r.number(strip(toks[1], "T1="), "alpha");
    out.T2 = r.number(strip(toks[2], "T2="), "alpha");
    if (!(out.T1 > 0.0 && out.T2 >= out.T1)) {
      r.fail("alpha: on_off needs 0 < T1 <= T2");
    }
    a = out;
  } else if (kind == "steps") {
    AlphaConfig out;
    out.kind = AlphaKind::steps;
    if (split_colon(r, toks, "alpha", out.times, out.values)) {
      for (double v : out.values) {
        check_alpha_value(r, v);
      }
      if (r.ok()) {
        try {
          (void)AlphaSchedule::steps(out.times, out.values);
        } catch (const ConfigurationError& e) {
          r.fail(e.what());
        }
      }
      a = out;
    }
  } else {
    r.fail("alpha: expected 'constant [c]', 'on_off <T1> <T2>' or 'steps <t..> : <v..>'");
  }
}

void parse_field(Reader& r, const std::vector<std::string>& toks, const std::string& key, FieldConfig& f) {
  const std::string& kind = toks[0];
  if (kind == "zero" && toks.size() == 1) {
    f = {FieldKind::zero, 0.0, 0};
  } else if (kind == "constant" && toks.size() == 2) {
    f = {FieldKind::constant, r.number(toks[1], key), 0};
  } else if (kind == "sign" && toks.size() == 1) {
    f = {FieldKind::sign, 0.0, 0};
  } else if ((kind == "cos" || kind == "sin") && toks.size() == 3) {
    f = {kind == "cos" ? FieldKind::cos : FieldKind::sin, r.number(toks[1], key), r.integer<int>(toks[2], key)};
  } else {
    r.fail(key + ": expected 'zero', 'constant <c>', 'sign', 'cos <A> <n>' or 'sin <A> <n>'");
  }
}

std::string serialize_k(const KConfig& k) {
  switch (k.kind) {
    case KKind::constant:
      return "constant " + fmt(k.values.at(0));
    case KKind::piecewise:
      return "piecewise " + (k.breaks.empty() ? std::string() : fmt_list(k.breaks) + " ") + ": " + fmt_list(k.values);
    case KKind::tabulated:
      return "table " + fmt_list(k.values);
  }
  return "";
}

std::string serialize_alpha(const AlphaConfig& a) {
  switch (a.kind) {
    case AlphaKind::constant:
      return "constant " + fmt(a.value);
    case AlphaKind::on_off:
      return "on_off " + fmt(a.T1) + " " + fmt(a.T2);
    case AlphaKind::steps:
      return "steps " + (a.times.empty() ? std::string() : fmt_list(a.times) + " ") + ": " + fmt_list(a.values);
  }
  return "";
}

std::string serialize_field(const FieldConfig& f) {
  switch (f.kind) {
    case FieldKind::zero:
      return "zero";
    case FieldKind::constant:
      return "constant " + fmt(f.A);
    case FieldKind::sign:
      return "sign";
    case FieldKind::cos:
      return "cos " + fmt(f.A) + " " + std::to_string(f.n);
    case FieldKind::sin:
      return "sin " + fmt(f.A) + " " + std::to_string(f.n);
  }
  return "";
}

InitialData::Sampler make_sampler(const FieldConfig& f) {
  switch (f.kind) {
    case FieldKind::zero:
      return [](double) { return 0.0; };
    case FieldKind::constant:
      return [c = f.A](double) { return c; };
    case FieldKind::sign:
      return [](double x) { return x < 0.5 ? -1.0 : 1.0; };
    case FieldKind::cos:
      return [A = f.A, n = f.n](double x) { return A * std::cos(n * std::numbers::pi * x); };
    case FieldKind::sin:
      return [A = f.A, n = f.n](double x) { return A * std::sin(n * std::numbers::pi * x); };
  }
  return [](double) { return 0.0; };
}

}  // namespace

ConfigParseError::ConfigParseError(std::vector<ConfigIssue> issues)
    : ConfigurationError(join_issues(issues)), issues_(std::move(issues)) {}

RunConfig parse_config(const std::string& text) {
  static const std::set<std::string> problem_keys = {"k",       "g",         "alpha", "rho0", "J0",  "initial",
                                                     "bv_pieces", "bv_m", "bv_M", "beta"};
  static const std::set<std::string> run_keys = {"N", "t_end", "emit_every", "seed", "output_dir"};

  RunConfig cfg;
  std::vector<ConfigIssue> issues;
  std::map<std::string, int> seen;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    Reader r(line_no, issues);
    if (line.front() == '[') {
      if (line.back() != ']') {
        r.fail("malformed section header '" + line + "'");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "problem" && section != "run") {
        r.fail("unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      r.fail("expected 'key = value', got '" + line + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto toks = split_ws(value);
    if (section.empty()) {
      r.fail("key '" + key + "' outside of a [problem] or [run] section");
      continue;
    }
    if (section != "problem" && section != "run") {
      continue;
    }
    const auto& known = section == "problem" ? problem_keys : run_keys;
    if (!known.count(key)) {
      r.fail("unknown key '" + key + "' in [" + section + "]");
      continue;
    }
    if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      r.fail("duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")");
      continue;
    }
    if (toks.empty() && key != "output_dir") {
      r.fail(key + ": missing value");
      continue;
    }

    if (key == "k") {
      parse_k(r, toks, cfg.k);
    } else if (key == "g") {
      parse_g(r, toks, cfg.g);
    } else if (key == "alpha") {
      parse_alpha(r, toks, cfg.alpha);
    } else if (key == "rho0") {
      parse_field(r, toks, key, cfg.rho0);
    } else if (key == "J0") {
      parse_field(r, toks, key, cfg.J0);
    } else if (key == "initial") {
      if (value == "analytic") {
        cfg.initial = InitialMode::analytic;
      } else if (value == "bv") {
        cfg.initial = InitialMode::bv;
      } else {
        r.fail("initial: expected 'analytic' or 'bv'");
      }
    } else if (key == "bv_pieces") {
      cfg.bv_pieces = r.integer<int>(value, key);
      if (r.ok() && cfg.bv_pieces < 1) {
        r.fail("bv_pieces must be >= 1");
      }
    } else if (key == "bv_m") {
      cfg.bv_m = r.number(value, key);
    } else if (key == "bv_M") {
      cfg.bv_M = r.number(value, key);
    } else if (key == "beta") {
      cfg.beta = r.number(value, key);
    } else if (key == "N") {
      cfg.N = r.integer<int>(value, key);
      if (r.ok() && (cfg.N < 2 || cfg.N % 2 != 0)) {
        r.fail("N must be even and >= 2");
      }
    } else if (key == "t_end") {
      cfg.t_end = r.number(value, key);
      if (r.ok() && cfg.t_end < 0.0) {
        r.fail("t_end must be >= 0");
      }
    } else if (key == "emit_every") {
      cfg.emit_every = r.integer<int>(value, key);
      if (r.ok() && *cfg.emit_every < 1) {
        r.fail("emit_every must be >= 1");
      }
    } else if (key == "seed") {
      cfg.seed = r.integer<std::uint64_t>(value, key);
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    }
  }

  if (!(cfg.bv_m < cfg.bv_M) || !(cfg.bv_m <= 0.0 && 0.0 <= cfg.bv_M)) {
    const int line = seen.count("bv_m") ? seen["bv_m"] : (seen.count("bv_M") ? seen["bv_M"] : 0);
    issues.push_back({line, "bv range needs bv_m <= 0 <= bv_M and bv_m < bv_M"});
  }
  if (!issues.empty()) {
    throw ConfigParseError(std::move(issues));
  }
  return cfg;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "[problem]\n";
  out << "k = " << serialize_k(c.k) << "\n";
  switch (c.g.kind) {
    case GKind::linear:
      out << "g = linear\n";
      break;
    case GKind::cubic:
      out << "g = cubic " << fmt(c.g.c) << "\n";
      break;
    case GKind::tanh:
      out << "g = tanh\n";
      break;
  }
  out << "alpha = " << serialize_alpha(c.alpha) << "\n";
  out << "rho0 = " << serialize_field(c.rho0) << "\n";
  out << "J0 = " << serialize_field(c.J0) << "\n";
  out << "initial = " << (c.initial == InitialMode::bv ? "bv" : "analytic") << "\n";
  out << "bv_pieces = " << c.bv_pieces << "\n";
  out << "bv_m = " << fmt(c.bv_m) << "\n";
  out << "bv_M = " << fmt(c.bv_M) << "\n";
  out << "beta = " << fmt(c.beta) << "\n";
  out << "\n[run]\n";
  out << "N = " << c.N << "\n";
  out << "t_end = " << fmt(c.t_end) << "\n";
  if (c.emit_every) {
    out << "emit_every = " << *c.emit_every << "\n";
  }
  out << "seed = " << c.seed << "\n";
  out << "output_dir = " << c.output_dir << "\n";
  return out.str();
}

DampingFunction make_damping(const GConfig& g) {
  switch (g.kind) {
    case GKind::linear:
      return DampingFunction::linear();
    case GKind::cubic:
      return DampingFunction::custom([c = g.c](double J) { return J + c * J * J * J; },
                                     [c = g.c](double J) { return 1.0 + 3.0 * c * J * J; }, "cubic");
    case GKind::tanh:
      return DampingFunction::custom([](double J) { return std::tanh(J); },
                                     [](double J) {
                                       const double t = std::tanh(J);
                                       return 1.0 - t * t;
                                     },
                                     "tanh");
  }
  return DampingFunction::linear();
}

ProblemSpec to_problem_spec(const RunConfig& c, std::uint64_t seed) {
  ProblemSpec spec;
  switch (c.k.kind) {
    case KKind::constant:
      spec.k = KProfile::constant(c.k.values.at(0));
      break;
    case KKind::piecewise:
      spec.k = KProfile::piecewise(c.k.breaks, c.k.values);
      break;
    case KKind::tabulated:
      spec.k = KProfile::tabulated(c.k.values);
      break;
  }
  spec.g = make_damping(c.g);
  switch (c.alpha.kind) {
    case AlphaKind::constant:
      spec.alpha = AlphaSchedule::constant(c.alpha.value);
      break;
    case AlphaKind::on_off:
      spec.alpha = AlphaSchedule::on_off(c.alpha.T1, c.alpha.T2);
      break;
    case AlphaKind::steps:
      spec.alpha = AlphaSchedule::steps(c.alpha.times, c.alpha.values);
      break;
  }
  if (c.initial == InitialMode::bv) {
    spec.initial = generate_bv_data(seed, c.bv_pieces, c.bv_m, c.bv_M);
  } else {
    spec.initial = InitialData::analytic(make_sampler(c.rho0), make_sampler(c.J0));
  }
  spec.beta = c.beta;
  return spec;
}

}  // namespace dampwave
