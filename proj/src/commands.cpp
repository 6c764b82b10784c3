#include "torsion/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "torsion/cone.hpp"
#include "torsion/error.hpp"

namespace torsion {

namespace {

std::string join_ints(std::span<const std::int64_t> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string where(const RayConfig& cfg, int d, std::optional<int> k = std::nullopt) {
  std::string s = "(n=" + std::to_string(cfg.n()) + ", tau=" + join_ints(cfg.tau()) +
                  ", m=" + std::to_string(cfg.m()) + ", d=" + std::to_string(d);
  if (k) s += ", k=" + std::to_string(*k);
  return s + ")";
}

/// Non-increasing vectors of length len with entries in [0, max_entry].
void dominant_taus(int len, std::int64_t max_entry, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const std::int64_t hi = cur.empty() ? max_entry : cur.back();
  for (std::int64_t x = hi; x >= 0; --x) {
    cur.push_back(x);
    dominant_taus(len, max_entry, cur, out);
    cur.pop_back();
  }
}

/// Base rays (m = 0) of the default grid: n ∈ {1,2,3}, τ entries ≤ 2.
std::vector<RayConfig> default_bases() {
  std::vector<RayConfig> bases;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<std::int64_t>> taus;
    std::vector<std::int64_t> cur;
    dominant_taus(n + 1, 2, cur, taus);
    for (auto& tau : taus) bases.emplace_back(n, std::move(tau), 0);
  }
  return bases;
}

struct Grid {
  std::vector<RayConfig> bases;
  std::int64_t m_min = 0;
  std::int64_t m_max = 6;
};

Grid exact_grid(const std::optional<RunConfig>& cfg) {
  if (!cfg) return {default_bases(), 0, 6};
  return {{cfg->ray(0)}, cfg->options.m_min, cfg->options.m_max.value_or(6)};
}

void run_lemma51(const Grid& grid, VerifyReport& report) {
  for (const auto& base : grid.bases)
    for (std::int64_t m = grid.m_min; m <= grid.m_max; ++m) {
      const RayConfig ray = base.with_m(m);
      for (int d = 1; d <= ray.n(); ++d) {
        ++report.checks;
        try {
          const PhasePolynomial sum = alternating_sum(ray, d);
          if (sum.max_nu_degree() > 0)
            report.violations.push_back(where(ray, d) + ": alternating sum depends on nu");
        } catch (const LemmaViolation& e) {
          report.violations.push_back(where(ray, d) + ": " + e.what());
        }
      }
    }
}

void run_telescoping(const Grid& grid, VerifyReport& report) {
  for (const auto& base : grid.bases)
    for (std::int64_t m = grid.m_min; m <= grid.m_max; ++m) {
      const RayConfig ray = base.with_m(m);
      for (int d = 1; d <= ray.n(); ++d) {
        ++report.checks;
        try {
          const auto sides = telescoping_sides(ray, d);
          if (!(sides.lhs == sides.rhs))
            report.violations.push_back(where(ray, d) + ": integral split does not telescope");
        } catch (const LemmaViolation& e) {
          report.violations.push_back(where(ray, d) + ": " + e.what());
        }
      }
    }
}

void run_eqfora(const std::optional<RunConfig>& cfg, const VerifyOptions& options,
                VerifyReport& report) {
  auto check = [&](std::vector<std::int64_t> K, std::int64_t kappa) {
    ++report.checks;
    const auto result = eqforA_check(K, kappa);
    const std::string label = "K=" + join_ints(K) + " kappa=" + std::to_string(kappa);
    if (!result.zeros_verified)
      report.violations.push_back(label + ": A does not vanish at the other +-i lambda_j");
    if (!result.value_matches)
      report.violations.push_back(label + ": value " + to_string(result.value) +
                                  " differs from the signed Vandermonde product " +
                                  to_string(result.vandermonde * result.sign));
    return result;
  };

  if (options.K) {
    const auto& K = *options.K;
    if (options.kappa && std::find(K.begin(), K.end(), *options.kappa) == K.end())
      throw InvalidArgument("kappa must be an element of K");
    for (auto kappa : K) {
      if (options.kappa && kappa != *options.kappa) continue;
      const auto result = check(K, kappa);
      report.notes.push_back("K=" + join_ints(K) + " kappa=" + std::to_string(kappa) +
                             ": value " + to_string(result.value));
    }
    return;
  }

  // λ-grid: every λ_k occurring on the grid.
  std::vector<std::int64_t> grid;
  const Grid g = exact_grid(cfg);
  for (const auto& base : g.bases)
    for (std::int64_t m = g.m_min; m <= g.m_max; ++m)
      for (auto lam : lambdas(base.with_m(m))) grid.push_back(lam);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  report.notes.push_back("lambda grid " + join_ints(grid));

  const std::size_t N = grid.size();
  for (std::size_t a = 0; a < N; ++a) {
    check({grid[a]}, grid[a]);
    for (std::size_t b = a + 1; b < N; ++b) {
      for (auto kappa : {grid[a], grid[b]}) check({grid[a], grid[b]}, kappa);
      for (std::size_t c = b + 1; c < N; ++c)
        for (auto kappa : {grid[a], grid[b], grid[c]}) check({grid[a], grid[b], grid[c]}, kappa);
    }
  }
}

void run_lemma52(const RunConfig& cfg, VerifyReport& report) {
  if (cfg.orbifold.classes.empty()) report.notes.push_back("no elliptic classes configured");
  const std::int64_t q = cfg.options.q_override.value_or(cfg.q);
  if (q < 1) throw InvalidArgument("q must be positive");
  for (std::size_t c = 0; c < cfg.orbifold.classes.size(); ++c) {
    const auto& cls = cfg.orbifold.classes[c];
    const int cap = cfg.options.degree_cap.value_or(cls.d * (cls.d - 1) / 2);
    const auto order = static_cast<std::uint32_t>(std::lcm(q, cls.period()));
    const CyclotomicField field(order);
    const std::int64_t samples =
        std::max<std::int64_t>(cfg.options.m_max.value_or(0) + 1, q * (cap + 3));
    std::vector<CyclotomicNumber> values;
    values.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t m = 0; m < samples; ++m) {
      const PhasePolynomial sum = alternating_sum(cfg.ray(m), cls);
      CyclotomicNumber v = field.zero();
      for (const auto& [mono, coeff] : sum.terms())
        v += field.phase(mono, cls.angles) * coeff.coeff(0);
      values.push_back(std::move(v));
    }
    const auto rep = pseudopoly_extract(values, q, cap);
    ++report.checks;
    std::ostringstream note;
    note << "class " << c << " (d=" << cls.d << ", q=" << q << ", cap=" << cap << "): degrees";
    for (int deg : rep.residue_degrees) note << ' ' << deg;
    report.notes.push_back(note.str());
    if (!rep.within_cap())
      for (std::size_t r = 0; r < rep.residue_degrees.size(); ++r)
        if (rep.residue_degrees[r] > cap)
          report.violations.push_back("class " + std::to_string(c) + " residue " +
                                      std::to_string(r) + ": degree exceeds " +
                                      std::to_string(cap));
  }
}

void run_growth(Suite suite, const RunConfig& cfg, const VerifyOptions& options,
                VerifyReport& report) {
  if (cfg.orbifold.classes.empty()) report.notes.push_back("no elliptic classes configured");
  const std::int64_t m_max = cfg.options.m_max.value_or(100);
  std::vector<std::int64_t> grid;
  for (std::int64_t m = std::max<std::int64_t>(1, cfg.options.m_min); m <= m_max; ++m)
    grid.push_back(m);
  if (grid.empty()) throw InvalidArgument("growth suites need m_max >= 1");
  const auto fractions = uniform_fractions(options.nu_points);
  for (std::size_t c = 0; c < cfg.orbifold.classes.size(); ++c) {
    const auto& cls = cfg.orbifold.classes[c];
    const GrowthTable table = suite == Suite::Lemma53
                                  ? growth_check_lemma53(cfg.ray(0), cls, grid)
                                  : growth_check_lemma54(cfg.ray(0), cls, grid, fractions);
    ++report.checks;
    std::ostringstream note;
    note << "class " << c << " (d=" << cls.d << "): exponent " << table.exponent
         << ", max normalized " << format_double(table.max_normalized()) << " at m="
         << table.argmax_m() << ", tail growth rate " << format_double(table.tail_growth_rate());
    report.notes.push_back(note.str());
    if (!table.bounded(options.growth_before_m, options.growth_factor))
      report.violations.push_back("class " + std::to_string(c) + " (d=" + std::to_string(cls.d) +
                                  "): normalized maximum at m=" +
                                  std::to_string(table.argmax_m()) + " is not attained before m=" +
                                  std::to_string(options.growth_before_m));
  }
}

void append_row(std::string& out, const std::string& key, std::complex<double> v,
                const std::string& exact) {
  out += key;
  out += ',';
  out += format_double(v.real());
  out += ',';
  out += format_double(v.imag());
  out += ',';
  out += exact;
  out += '\n';
}

std::string newton_expr(std::span<const std::complex<double>> deltas, std::int64_t r,
                        std::int64_t q) {
  // Σ_j Re Δ^j · binom((x - r)/q, j)
  const std::string s = "((x-" + std::to_string(r) + ")/" + std::to_string(q) + ".0)";
  std::string expr;
  std::string basis = "1";
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    if (j > 0) basis += "*(" + s + "-" + std::to_string(j - 1) + ")/" + std::to_string(j) + ".0";
    if (!expr.empty()) expr += " + ";
    expr += "(" + format_double(deltas[j].real()) + ")*" + basis;
  }
  return expr.empty() ? "0" : expr;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "lemma51") return Suite::Lemma51;
  if (name == "lemma52") return Suite::Lemma52;
  if (name == "lemma53") return Suite::Lemma53;
  if (name == "lemma54") return Suite::Lemma54;
  if (name == "eqforA") return Suite::EqForA;
  if (name == "telescoping") return Suite::Telescoping;
  throw InvalidArgument("unknown suite: " + std::string(name));
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Lemma51: return "lemma51";
    case Suite::Lemma52: return "lemma52";
    case Suite::Lemma53: return "lemma53";
    case Suite::Lemma54: return "lemma54";
    case Suite::EqForA: return "eqforA";
    case Suite::Telescoping: return "telescoping";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  if (name == "ME") return Quantity::ME;
  if (name == "MI") return Quantity::MI;
  if (name == "logT2") return Quantity::LogT2;
  if (name == "logT") return Quantity::LogT;
  if (name == "heatE") return Quantity::HeatE;
  if (name == "heatI") return Quantity::HeatI;
  throw InvalidArgument("unknown quantity: " + std::string(name));
}

std::string_view to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::ME: return "ME";
    case Quantity::MI: return "MI";
    case Quantity::LogT2: return "logT2";
    case Quantity::LogT: return "logT";
    case Quantity::HeatE: return "heatE";
    case Quantity::HeatI: return "heatI";
  }
  return "?";
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << to_string(suite) << ": " << checks << " checks, " << violations.size() << " violations, "
      << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& v : violations) out << "  violation " << v << '\n';
  for (const auto& n : notes) out << "  note " << n << '\n';
  return out.str();
}

VerifyReport cmd_verify(Suite suite, const std::optional<RunConfig>& cfg,
                        const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  switch (suite) {
    case Suite::Lemma51:
      run_lemma51(exact_grid(cfg), report);
      break;
    case Suite::Telescoping:
      run_telescoping(exact_grid(cfg), report);
      break;
    case Suite::EqForA:
      run_eqfora(cfg, options, report);
      break;
    case Suite::Lemma52:
      run_lemma52(cfg ? *cfg : pinned_config(), report);
      break;
    case Suite::Lemma53:
    case Suite::Lemma54:
      run_growth(suite, cfg ? *cfg : pinned_config(), options, report);
      break;
  }
  return report;
}

TableOutput cmd_table(Quantity quantity, const RunConfig& cfg, const TableOptions& options) {
  TableOutput out;
  const EvalMode mode = cfg.options.mode;
  if (quantity == Quantity::HeatE || quantity == Quantity::HeatI) {
    const std::vector<double> ts =
        options.t_values.empty() ? std::vector<double>{0.1, 1.0, 10.0} : options.t_values;
    const RayConfig ray = cfg.ray(options.heat_m);
    out.csv = "t,re,im,exact\n";
    for (double t : ts) {
      if (!(t > 0)) throw InvalidArgument("heat trace needs t > 0");
      const std::complex<double> v = quantity == Quantity::HeatE
                                         ? heat_trace_e(ray, cfg.orbifold, t)
                                         : std::complex<double>(heat_trace_i(ray, cfg.orbifold, t));
      append_row(out.csv, format_double(t), v, "");
    }
    out.standin = quantity == Quantity::HeatI && !cfg.orbifold.plancherel;
    return out;
  }
  const std::int64_t m_max = cfg.options.m_max.value_or(10);
  if (cfg.options.m_min < 0 || m_max < cfg.options.m_min)
    throw InvalidArgument("m range must satisfy 0 <= m_min <= m_max");
  out.csv = "m,re,im,exact\n";
  for (std::int64_t m = cfg.options.m_min; m <= m_max; ++m) {
    const RayConfig ray = cfg.ray(m);
    Contribution c;
    switch (quantity) {
      case Quantity::ME: c = me(ray, cfg.orbifold, mode); break;
      case Quantity::MI: c = mi(ray, cfg.orbifold, mode); break;
      case Quantity::LogT2: c = log_t2(ray, cfg.orbifold, mode); break;
      case Quantity::LogT: c = log_t_approx(ray, cfg.orbifold, mode); break;
      default: break;
    }
    out.standin = out.standin || c.standin;
    append_row(out.csv, std::to_string(m), c.value, c.exact_string());
  }
  return out;
}

PseudoOutput cmd_pseudo(const RunConfig& cfg, const std::string& values_file) {
  const std::int64_t q = cfg.options.q_override.value_or(cfg.q);
  if (q < 1) throw InvalidArgument("q must be positive");
  int cap = 0;
  for (const auto& cls : cfg.orbifold.classes) cap = std::max(cap, (cls.d * cls.d + cls.d + 2) / 2);
  cap = cfg.options.degree_cap.value_or(cap);
  const std::int64_t needed = q * (cap + 2);
  const std::int64_t m_max = cfg.options.m_max.value_or(q * (cap + 3) - 1);
  if (m_max + 1 < needed)
    throw InvalidArgument("insufficient m range: need m_max >= " + std::to_string(needed - 1) +
                          " for q=" + std::to_string(q) + " and degree cap " + std::to_string(cap));

  PseudoOutput out;
  out.values_csv = "m,re,im,exact\n";
  if (cfg.options.mode == EvalMode::Exact) {
    const CyclotomicField field(static_cast<std::uint32_t>(std::lcm(q, cfg.orbifold.period())));
    std::vector<CyclotomicNumber> values;
    for (std::int64_t m = 0; m <= m_max; ++m) {
      values.push_back(me_exact(cfg.ray(m), cfg.orbifold, field));
      append_row(out.values_csv, std::to_string(m), values.back().to_complex(),
                 values.back().to_string());
    }
    out.report = pseudopoly_extract(values, q, cap);
  } else {
    std::vector<std::complex<double>> values;
    for (std::int64_t m = 0; m <= m_max; ++m) {
      values.push_back(me(cfg.ray(m), cfg.orbifold, EvalMode::Float).value);
      append_row(out.values_csv, std::to_string(m), values.back(), "");
    }
    out.report = pseudopoly_extract(values, q, cap, cfg.options.tolerance);
  }

  const auto& rep = out.report;
  out.report_csv = "residue,degree,leading_re,leading_im,leading_exact\n";
  for (std::size_t r = 0; r < rep.residue_degrees.size(); ++r) {
    out.report_csv += std::to_string(r) + ',' + std::to_string(rep.residue_degrees[r]) + ',' +
                      format_double(rep.leading[r].real()) + ',' +
                      format_double(rep.leading[r].imag()) + ',' +
                      (r < rep.leading_exact.size() ? rep.leading_exact[r] : std::string()) + '\n';
  }
  out.report_csv += "all," + std::to_string(rep.global_degree) + ",,,\n";

  std::ostringstream plot;
  plot << "# ME(m) and its polynomial fit on each residue class m = r mod " << q << "\n"
       << "set datafile separator ','\n"
       << "set key outside\n"
       << "set xlabel 'm'\nset ylabel 'Re ME(m)'\n";
  for (std::size_t r = 0; r < rep.newton.size(); ++r)
    plot << "f" << r << "(x) = " << newton_expr(rep.newton[r], static_cast<std::int64_t>(r), q)
         << "\n";
  plot << "plot '" << values_file << "' skip 1 using 1:2 with points pt 7 title 'ME'";
  for (std::size_t r = 0; r < rep.newton.size(); ++r)
    plot << ", \\\n     f" << r << "(x) with lines title 'r = " << r << "'";
  plot << "\n";
  out.plot_script = plot.str();
  return out;
}

ConeOutput cmd_cone(double u, std::vector<double> eps_grid, double rel_tol,
                    const std::string& data_file) {
  if (eps_grid.empty()) eps_grid = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  const auto rows = cone::tail_table(u, eps_grid, rel_tol);
  ConeOutput out;
  out.csv = "eps,tail,normalized\n";
  std::vector<double> eps, tails;
  for (const auto& row : rows) {
    out.csv += format_double(row.eps) + ',' + format_double(row.tail) + ',' +
               format_double(row.normalized) + '\n';
    eps.push_back(row.eps);
    tails.push_back(row.tail);
  }
  out.loglog_slope = cone::loglog_slope(eps, tails);
  std::vector<std::size_t> order(eps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return eps[a] > eps[b]; });
  std::vector<double> eps_desc, tails_desc;
  for (auto i : order) {
    eps_desc.push_back(eps[i]);
    tails_desc.push_back(tails[i]);
  }
  out.increment_slope = eps.size() >= 3 ? cone::increment_slope(eps_desc, tails_desc) : NAN;
  const auto smallest = order.back();
  out.fit_csv = "u,loglog_slope,increment_slope,normalized_at_min_eps\n" + format_double(u) + ',' +
                format_double(out.loglog_slope) + ',' + format_double(out.increment_slope) + ',' +
                format_double(rows[smallest].normalized) + '\n';

  std::ostringstream plot;
  plot << "# regularized tail integral over [eps, 1]; the reference line has slope -1/4\n"
       << "set datafile separator ','\n"
       << "set logscale xy\n"
       << "set xlabel 'eps'\nset ylabel 'tail'\n"
       << "ref(x) = x**(-0.25) / (16.0*sqrt(" << format_double(u) << "))\n"
       << "plot '" << data_file << "' skip 1 using 1:2 with linespoints title 'tail', \\\n"
       << "     ref(x) with lines dashtype 2 title 'eps^(-1/4)/(16 sqrt(u))'\n";
  out.plot_script = plot.str();
  return out;
}

}  // namespace torsion
