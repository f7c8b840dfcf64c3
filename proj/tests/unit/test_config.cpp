#include <gtest/gtest.h>

#include "dampwave/config.hpp"
#include "dampwave/errors.hpp"

using namespace dampwave;

namespace {

const char* kMinimal = R"(# minimal
[problem]
k = constant 0.5
g = linear
alpha = constant 1
rho0 = zero
J0 = zero
)";

}  // namespace

TEST(Config, MinimalConfigFillsDefaults) {
  const RunConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.k.kind, KKind::constant);
  EXPECT_EQ(c.k.values.at(0), 0.5);
  EXPECT_EQ(c.N, 256);
  EXPECT_EQ(c.t_end, 10.0);
  EXPECT_EQ(c.effective_emit_every(), 256);
  EXPECT_EQ(c.seed, 0u);
  EXPECT_EQ(c.output_dir, "out");
}

TEST(Config, RoundTrip) {
  RunConfig c;
  c.k.kind = KKind::piecewise;
  c.k.breaks = {0.3, 0.7};
  c.k.values = {0.1, 1.0 / 3.0, 0.0};
  c.g = {GKind::cubic, 0.25};
  c.alpha.kind = AlphaKind::on_off;
  c.alpha.T1 = 1.0;
  c.alpha.T2 = 2.5;
  c.rho0 = {FieldKind::cos, 0.1, 3};
  c.J0 = {FieldKind::sin, 0.2, 1};
  c.N = 64;
  c.t_end = 0.1;
  c.emit_every = 7;
  c.seed = 42;
  c.output_dir = "runs/a";
  const std::string text = serialize_config(c);
  const RunConfig back = parse_config(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(serialize_config(back), text);
  EXPECT_EQ(parse_config(serialize_config(parse_config(kMinimal))), parse_config(kMinimal));
}

TEST(Config, OddNIsRejected) {
  try {
    parse_config(std::string(kMinimal) + "[run]\nN = 3\n");
    FAIL() << "expected ConfigParseError";
  } catch (const ConfigParseError& e) {
    ASSERT_EQ(e.issues().size(), 1u);
    EXPECT_EQ(e.issues()[0].line, 9);
    EXPECT_NE(e.issues()[0].message.find("N must be even"), std::string::npos);
  }
}

TEST(Config, OnOffKeyValueSyntax) {
  const RunConfig c = parse_config("[problem]\nalpha = on_off T1=1 T2=2\n");
  EXPECT_EQ(c.alpha.kind, AlphaKind::on_off);
  EXPECT_EQ(c.alpha.T1, 1.0);
  EXPECT_EQ(c.alpha.T2, 2.0);
  const ProblemSpec spec = to_problem_spec(c);
  EXPECT_EQ(spec.alpha.value_at(0.5), 1.0);
  EXPECT_EQ(spec.alpha.value_at(1.0), 0.0);
  EXPECT_EQ(spec.alpha.value_at(2.0), 1.0);
}

TEST(Config, AllErrorsReportedWithLines) {
  const std::string text =
      "[problem]\n"
      "k = constant -1\n"
      "alpha = constant 2\n"
      "colour = blue\n"
      "[run]\n"
      "N = abc\n";
  try {
    parse_config(text);
    FAIL() << "expected ConfigParseError";
  } catch (const ConfigParseError& e) {
    std::vector<int> lines;
    for (const auto& i : e.issues()) {
      lines.push_back(i.line);
    }
    EXPECT_EQ(lines, (std::vector<int>{2, 3, 4, 6}));
  }
}

TEST(Config, DuplicateKeysAndUnknownSections) {
  EXPECT_THROW(parse_config("[problem]\ng = linear\ng = tanh\n"), ConfigParseError);
  EXPECT_THROW(parse_config("[other]\nx = 1\n"), ConfigParseError);
  EXPECT_THROW(parse_config("[problem]\ng = cubic -1\n"), ConfigParseError);
}

TEST(Config, ProblemSpecFromConfig) {
  RunConfig c = parse_config(kMinimal);
  c.initial = InitialMode::bv;
  c.bv_pieces = 4;
  const ProblemSpec a = to_problem_spec(c, 3);
  const ProblemSpec b = to_problem_spec(c, 3);
  EXPECT_EQ(a.initial.f_minus(), b.initial.f_minus());
  EXPECT_EQ(a.initial.breaks().size(), 3u);
  EXPECT_TRUE(make_damping(c.g).is_linear());
  EXPECT_DOUBLE_EQ(make_damping({GKind::cubic, 2.0})(0.5), 0.5 + 0.25);
}
