#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torsion/config.hpp"

namespace torsion {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitConfig = 2, kExitCap = 3 };

enum class Suite { Lemma51, Lemma52, Lemma53, Lemma54, EqForA, Telescoping };
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

enum class Quantity { ME, MI, LogT2, LogT, HeatE, HeatI };
Quantity parse_quantity(std::string_view name);
std::string_view to_string(Quantity quantity);

/// Locale-independent shortest round-trip decimal form; -0 prints as 0.
std::string format_double(double x);

struct VerifyOptions {
  /// eqforA: explicit λ-set and the distinguished κ (every element when unset).
  std::optional<std::vector<std::int64_t>> K;
  std::optional<std::int64_t> kappa;
  /// Growth suites: maximum of the normalized sequence must occur before this m.
  std::int64_t growth_before_m = 50;
  double growth_factor = 1.1;
  int nu_points = 33;
};

struct VerifyReport {
  Suite suite = Suite::Lemma51;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  int exit_code() const { return passed() ? kExitPass : kExitViolation; }
  std::string to_text() const;
};

/// Runs a suite. Without a configuration the default grids are used:
/// lemma51/telescoping over n ∈ {1,2,3}, τ entries ≤ 2, m ≤ 6; the other suites on
/// pinned_config(). ResourceCapExceeded propagates.
VerifyReport cmd_verify(Suite suite, const std::optional<RunConfig>& cfg,
                        const VerifyOptions& options = {});

struct TableOptions {
  /// Times for heat tables (default 0.1, 1, 10).
  std::vector<double> t_values;
  /// m used by heat tables.
  std::int64_t heat_m = 0;
};

struct TableOutput {
  std::string csv;
  /// Set when MI used the built-in identity stand-in.
  bool standin = false;
};

/// CSV with header "m,re,im,exact" (or "t,..." for heat traces), one row per m in
/// [options.m_min, options.m_max] (default 0..10).
TableOutput cmd_table(Quantity quantity, const RunConfig& cfg, const TableOptions& options = {});

struct PseudoOutput {
  PseudoPolyReport report;
  std::string report_csv;
  std::string values_csv;
  std::string plot_script;
};

/// Samples ME on m = 0..M and extracts the residue-class structure mod q
/// (cfg.options.q_override or cfg.q). The degree cap defaults to max (d²+d+2)/2.
/// Throws InvalidArgument when M+1 < q·(cap+2).
PseudoOutput cmd_pseudo(const RunConfig& cfg, const std::string& values_file = "pseudo_values.csv");

struct ConeOutput {
  std::string csv;
  std::string fit_csv;
  std::string plot_script;
  double loglog_slope = 0.0;
  double increment_slope = 0.0;
};

/// Default grid ε ∈ {1e-3, ..., 1e-8}.
ConeOutput cmd_cone(double u, std::vector<double> eps_grid = {}, double rel_tol = 1e-9,
                    const std::string& data_file = "cone.csv");

}  // namespace torsion
