// torsion: verification suites, tables and plot scripts for torsion asymptotics on
// rays of representations over odd-dimensional hyperbolic orbifolds.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "torsion/commands.hpp"
#include "torsion/error.hpp"

namespace fs = std::filesystem;
using namespace torsion;

namespace {

struct Common {
  std::string config_path;
  std::optional<std::int64_t> m_min;
  std::optional<std::int64_t> m_max;
  std::optional<double> tolerance;
  std::string out_dir;
  bool exact = false;
  bool floating = false;
  std::optional<std::int64_t> q;
  std::optional<int> degree_cap;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "JSON configuration file");
  app->add_option("--m-min", c.m_min, "first m of the range");
  app->add_option("--m-max", c.m_max, "last m of the range");
  app->add_option("--tolerance", c.tolerance, "relative tolerance for float mode");
  app->add_option("--out", c.out_dir, "write files into this directory instead of stdout");
  auto* ex = app->add_flag("--exact", c.exact, "exact cyclotomic arithmetic (default)");
  app->add_flag("--float", c.floating, "double precision evaluation")->excludes(ex);
  app->add_option("--q", c.q, "residue period override");
  app->add_option("--degree-cap", c.degree_cap, "degree cap override");
}

std::optional<RunConfig> load(const Common& c, bool required) {
  std::optional<RunConfig> cfg;
  if (!c.config_path.empty())
    cfg = parse_config_file(c.config_path);
  else if (required)
    cfg = pinned_config();
  if (!cfg) return cfg;
  if (c.m_min) cfg->options.m_min = *c.m_min;
  cfg->options.m_max = c.m_max;
  if (c.tolerance) cfg->options.tolerance = *c.tolerance;
  cfg->options.out_dir = c.out_dir;
  cfg->options.mode = c.floating ? EvalMode::Float : EvalMode::Exact;
  cfg->options.q_override = c.q;
  cfg->options.degree_cap = c.degree_cap;
  return cfg;
}

void emit(const std::string& out_dir, const std::string& name, const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(out_dir);
  std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
  f << content;
  if (!f) throw std::runtime_error("cannot write " + (fs::path(out_dir) / name).string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion asymptotics on rays of representations"};
  app.require_subcommand(1);

  Common verify_opts, table_opts, pseudo_opts;

  auto* verify = app.add_subcommand("verify", "run an exact or growth verification suite");
  std::string suite_name;
  verify->add_option("suite", suite_name, "lemma51|lemma52|lemma53|lemma54|eqforA|telescoping")
      ->required();
  add_common(verify, verify_opts);
  std::vector<std::int64_t> K;
  std::optional<std::int64_t> kappa;
  verify->add_option("--K", K, "eqforA: lambda set")->delimiter(',');
  verify->add_option("--kappa", kappa, "eqforA: distinguished element of K");

  auto* table = app.add_subcommand("table", "tabulate ME, MI, logT2, logT, heatE or heatI");
  std::string quantity_name;
  table->add_option("quantity", quantity_name, "ME|MI|logT2|logT|heatE|heatI")->required();
  add_common(table, table_opts);
  std::vector<double> t_values;
  std::int64_t heat_m = 0;
  table->add_option("--t", t_values, "heat trace times")->delimiter(',');
  table->add_option("--m", heat_m, "m used by heat tables");

  auto* pseudo = app.add_subcommand("pseudo", "residue-class degree report for ME(m)");
  add_common(pseudo, pseudo_opts);

  auto* cone = app.add_subcommand("cone", "regularized tails of the cone metric integral");
  double u = 1.0;
  std::vector<double> eps_grid;
  double cone_tol = 1e-9;
  std::string cone_out;
  cone->add_option("--u", u, "deformation parameter u > 0");
  cone->add_option("--eps", eps_grid, "lower integration limits")->delimiter(',');
  cone->add_option("--tolerance", cone_tol, "quadrature relative tolerance");
  cone->add_option("--out", cone_out, "output directory");

  auto* schema = app.add_subcommand("schema", "print the configuration schema");
  std::string schema_config;
  bool canonical = false;
  schema->add_option("--config", schema_config, "configuration to canonicalize");
  schema->add_flag("--canonical", canonical, "print the canonical form of --config");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const Suite suite = parse_suite(suite_name);
      auto cfg = load(verify_opts, false);
      VerifyOptions options;
      if (!K.empty()) options.K = K;
      options.kappa = kappa;
      const auto report = cmd_verify(suite, cfg, options);
      emit(verify_opts.out_dir, "verify_" + std::string(to_string(suite)) + ".txt",
           report.to_text());
      return report.exit_code();
    }
    if (*table) {
      const Quantity quantity = parse_quantity(quantity_name);
      auto cfg = load(table_opts, true);
      TableOptions options;
      options.t_values = t_values;
      options.heat_m = heat_m;
      const auto out = cmd_table(quantity, *cfg, options);
      if (out.standin)
        std::cerr << "note: identity term uses the built-in stand-in polynomial; absolute "
                     "normalization is not claimed\n";
      emit(table_opts.out_dir, "table_" + std::string(to_string(quantity)) + ".csv", out.csv);
      return kExitPass;
    }
    if (*pseudo) {
      auto cfg = load(pseudo_opts, true);
      const auto out = cmd_pseudo(*cfg);
      if (pseudo_opts.out_dir.empty()) {
        std::cout << out.report_csv;
      } else {
        emit(pseudo_opts.out_dir, "pseudo_report.csv", out.report_csv);
        emit(pseudo_opts.out_dir, "pseudo_values.csv", out.values_csv);
        emit(pseudo_opts.out_dir, "pseudo.gp", out.plot_script);
      }
      return out.report.within_cap() ? kExitPass : kExitViolation;
    }
    if (*cone) {
      const auto out = cmd_cone(u, eps_grid, cone_tol);
      if (cone_out.empty()) {
        std::cout << out.csv << out.fit_csv;
      } else {
        emit(cone_out, "cone.csv", out.csv);
        emit(cone_out, "cone_fit.csv", out.fit_csv);
        emit(cone_out, "cone.gp", out.plot_script);
      }
      return kExitPass;
    }
    if (*schema) {
      if (canonical) {
        if (schema_config.empty()) throw InvalidArgument("--canonical needs --config");
        std::cout << canonical_config(parse_config_file(schema_config));
      } else {
        std::cout << config_schema().dump(2) << '\n';
      }
      return kExitPass;
    }
  } catch (const ConfigError& e) {
    for (const auto& v : e.violations()) std::cerr << "config error: " << v << '\n';
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const LemmaViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitPass;
}
