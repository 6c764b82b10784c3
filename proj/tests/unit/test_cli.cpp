#include <doctest.h>

#include "torsion/commands.hpp"
#include "torsion/error.hpp"

using namespace torsion;

namespace {

std::vector<std::string> violations_of(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal configuration parses") {
  const auto cfg = parse_config_text(R"({"n": 2, "tau": [0,0,0], "volume": 1,
      "classes": [{"d": 2, "angles": [{"p": 1, "q": 4}], "weight": {"num": 1, "den": 1}}]})");
  CHECK(cfg.n == 2);
  CHECK(cfg.q == 4);
  CHECK(cfg.angle_unit == AngleUnit::TwoPi);
  REQUIRE(cfg.orbifold.classes.size() == 1);
  CHECK(cfg.orbifold.classes[0].d == 2);
  CHECK(cfg == pinned_config());
  // π/2 written in units of π
  const auto pi = parse_config_text(R"({"n": 2, "tau": [0,0,0], "volume": "1",
      "classes": [{"d": 2, "angles": [{"p": 1, "q": 2}]}], "conventions": {"angle_unit": "pi"}})");
  CHECK(pi.q == 4);
  CHECK(pi.orbifold.classes[0].angles[0].same_rotation(Angle(1, 4)));
}

TEST_CASE("configuration violations carry field paths") {
  CHECK(mentions(violations_of(R"({"n": 2, "tau": [0,1,0], "volume": 1})"),
                 "tau: tau not non-increasing"));
  CHECK(mentions(violations_of(R"({"n": 2, "tau": [0,0,0], "volume": 1,
      "classes": [{"d": 1, "angles": [{"p": 1, "q": 4}, {"p": 1, "q": 4}]}]})"),
                 "classes[0].angles: angles must be distinct"));
  CHECK(mentions(violations_of(R"({"n": 2, "tau": [0,0,0], "volume": 1,
      "classes": [{"d": 2, "angles": [{"p": 4, "q": 4}]}]})"),
                 "classes[0].angles[0]: angle must be nonzero mod 2pi"));
  CHECK(mentions(violations_of(R"({"n": 2, "tau": [0,0,0], "volume": 1,
      "classes": [{"d": 3, "angles": []}]})"),
                 "classes[0].d: d out of range"));
  const auto many = violations_of(R"({"n": 0, "tau": [1,2], "volume": -1, "extra": true})");
  CHECK(many.size() >= 4);
  CHECK(mentions(violations_of("{not json"), "parse error"));
  CHECK(mentions(violations_of(R"({"n": 1, "tau": [0,0], "volume": 1, "conventions": {"angle_unit": "deg"}})"),
                 "conventions.angle_unit"));
}

TEST_CASE("canonical round trip") {
  const std::string text = R"({"n": 3, "tau": [2,1,1,0], "volume": "3/7",
      "classes": [{"d": 1, "angles": [{"p": 1, "q": 3}, {"p": 2, "q": 5}, {"p": -1, "q": 4}],
                   "weight": "5/2"},
                  {"d": 3, "angles": [{"p": 1, "q": 2}]}],
      "plancherel": [[1, "1/2"], [0], [3], [{"num": -1, "den": 3}]],
      "conventions": {"angle_unit": "pi"}})";
  const auto cfg = parse_config_text(text);
  CHECK(cfg.q == 120);
  const auto again = parse_config_text(canonical_config(cfg));
  CHECK(again == cfg);
  CHECK(canonical_config(again) == canonical_config(cfg));
  const auto floaty = parse_config_text(R"({"n": 1, "tau": [0,0], "volume": 0.1})");
  CHECK_FALSE(floaty.orbifold.volume_exact);
  CHECK(parse_config_text(canonical_config(floaty)) == floaty);
  CHECK(config_schema().contains("properties"));
}

TEST_CASE("verify suites") {
  CHECK(cmd_verify(Suite::Lemma51, std::nullopt).passed());
  CHECK(cmd_verify(Suite::Telescoping, std::nullopt).passed());
  VerifyOptions opt;
  opt.K = std::vector<std::int64_t>{2, 1};
  opt.kappa = 2;
  const auto eq = cmd_verify(Suite::EqForA, std::nullopt, opt);
  CHECK(eq.passed());
  CHECK(eq.checks == 1);
  CHECK(mentions(eq.notes, "value 3"));
  auto cfg = pinned_config();
  cfg.options.q_override = 4;
  cfg.options.degree_cap = 1;
  CHECK(cmd_verify(Suite::Lemma52, cfg).passed());
  CHECK(cmd_verify(Suite::Lemma53, std::nullopt).passed());
  CHECK(parse_suite("eqforA") == Suite::EqForA);
  CHECK_THROWS_AS(parse_suite("lemma99"), InvalidArgument);
}

TEST_CASE("tables") {
  auto cfg = pinned_config();
  cfg.options.m_max = 3;
  const auto me = cmd_table(Quantity::ME, cfg).csv;
  CHECK(me.rfind("m,re,im,exact\n0,0,0,0\n1,-5.333333333333333,0,-16/3\n", 0) == 0);
  CHECK(cmd_table(Quantity::ME, cfg).csv == me);
  auto none = parse_config_text(R"({"n": 2, "tau": [0,0,0], "volume": 1})");
  none.options.m_max = 2;
  CHECK(cmd_table(Quantity::ME, none).csv == "m,re,im,exact\n0,0,0,0\n1,0,0,0\n2,0,0,0\n");
  const auto heat = cmd_table(Quantity::HeatI, cfg);
  CHECK(heat.standin);
  CHECK(heat.csv.rfind("t,re,im,exact\n0.1,", 0) == 0);
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("pseudo report") {
  auto cfg = pinned_config();
  cfg.options.m_max = 40;
  const auto out = cmd_pseudo(cfg);
  CHECK(out.report.q == 4);
  CHECK(out.report.within_cap());
  CHECK(out.report_csv.rfind("residue,degree,", 0) == 0);
  CHECK(out.plot_script.find("f3(x)") != std::string::npos);
  cfg.options.m_max = 5;
  CHECK_THROWS_AS(cmd_pseudo(cfg), InvalidArgument);
}

TEST_CASE("cone output") {
  const auto out = cmd_cone(1.0, {1e-2, 1e-3, 1e-4});
  CHECK(out.csv.rfind("eps,tail,normalized\n0.01,", 0) == 0);
  CHECK(out.fit_csv.rfind("u,loglog_slope,", 0) == 0);
  CHECK(out.loglog_slope < 0);
}

}  // TEST_SUITE
