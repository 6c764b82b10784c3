#include "torsion/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "torsion/error.hpp"

namespace torsion {

// --- OrbifoldData ----------------------------------------------------------

void OrbifoldData::validate() const {
  if (n < 1) throw InvalidArgument("orbifold: n must be at least 1");
  if (volume <= 0) throw InvalidArgument("orbifold: volume must be positive");
  for (const auto& cls : classes) cls.validate(n);
  if (plancherel && plancherel->size() != static_cast<std::size_t>(n) + 1)
    throw InvalidArgument("plancherel table must have n+1 = " + std::to_string(n + 1) +
                          " coefficient lists, got " + std::to_string(plancherel->size()));
}

std::int64_t OrbifoldData::period() const {
  std::int64_t q = 1;
  for (const auto& cls : classes) q = std::lcm(q, cls.period());
  return q;
}

// --- integrals -------------------------------------------------------------

namespace {

void check_lambda(const Rational& lambda) {
  if (lambda < 0) throw InvalidArgument("integration bound must be non-negative");
}

PhasePolynomial integrate_between(const PhasePolynomial& p, const Rational& a, const Rational& b) {
  PhasePolynomial out(p.arity());
  for (const auto& [mono, c] : p.terms())
    out.add_term(mono, NuPolynomial::constant(c.integrate(a, b)));
  return out;
}

Rational as_rational(std::int64_t x) { return Rational(static_cast<long>(x)); }

}  // namespace

Rational integral_zero_to_lambda(const NuPolynomial& p, const Rational& lambda) {
  check_lambda(lambda);
  return p.integrate(0, lambda);
}

PhasePolynomial integral_zero_to_lambda(const PhasePolynomial& p, const Rational& lambda) {
  check_lambda(lambda);
  return integrate_between(p, 0, lambda);
}

std::complex<double> integral_zero_to_lambda(std::span<const std::complex<double>> even_coeffs,
                                             double lambda) {
  if (lambda < 0) throw InvalidArgument("integration bound must be non-negative");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < even_coeffs.size(); ++i) {
    const double power = static_cast<double>(2 * i + 1);
    acc += even_coeffs[i] * std::pow(lambda, power) / power;
  }
  return acc;
}

PhasePolynomial elliptic_integral_sum(const RayConfig& cfg, const EllipticClass& cls) {
  cls.validate(cfg.n());
  PhasePolynomial sum(cls.angles.size());
  for (int k = 0; k <= cfg.n(); ++k) {
    const auto p = build_p_gamma(cfg, k, cls.d);
    auto term = integral_zero_to_lambda(p.value, as_rational(lambda_tau_k(cfg, k)));
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

// --- ME / MI ---------------------------------------------------------------

CyclotomicNumber me_exact(const RayConfig& cfg, const OrbifoldData& orb,
                          const CyclotomicField& field) {
  if (field.order() % orb.period() != 0)
    throw InvalidArgument("cyclotomic field order is not a multiple of the class period");
  CyclotomicNumber total = field.zero();
  for (const auto& cls : orb.classes) {
    const auto sum = elliptic_integral_sum(cfg, cls);
    for (const auto& [mono, c] : sum.terms())
      total += field.phase(mono, cls.angles) * (c.coeff(0) * cls.weight);
  }
  return total;
}

Contribution me(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode) {
  if (cfg.n() != orb.n) throw InvalidArgument("ray and orbifold disagree on n");
  Contribution out;
  if (mode == EvalMode::Exact) {
    const CyclotomicField field(static_cast<std::uint32_t>(orb.period()));
    out.exact = me_exact(cfg, orb, field);
    out.value = out.exact->to_complex();
    return out;
  }
  for (const auto& cls : orb.classes) {
    const auto sum = elliptic_integral_sum(cfg, cls);
    for (const auto& [mono, c] : sum.terms())
      out.value += phase_value(mono, cls.angles) * to_double(c.coeff(0) * cls.weight);
  }
  return out;
}

std::vector<Rational> identity_polynomial_coeffs(const RayConfig& cfg, const OrbifoldData& orb,
                                                 int k) {
  if (k < 0 || k > cfg.n()) throw InvalidArgument("k out of range");
  if (orb.plancherel) {
    if (orb.plancherel->size() != static_cast<std::size_t>(cfg.n()) + 1)
      throw InvalidArgument("plancherel table must have n+1 coefficient lists");
    return (*orb.plancherel)[static_cast<std::size_t>(k)];
  }
  const auto p = build_p_gamma(cfg, k, cfg.n() + 1);
  const NuPolynomial c = p.value.coeff(PhaseMonomial{});
  std::vector<Rational> even;
  for (std::size_t i = 0; i < c.coeffs().size(); i += 2) even.push_back(c.coeffs()[i]);
  return even;
}

namespace {

Rational mi_unscaled(const RayConfig& cfg, const OrbifoldData& orb) {
  Rational total = 0;
  for (int k = 0; k <= cfg.n(); ++k) {
    const auto even = identity_polynomial_coeffs(cfg, orb, k);
    std::vector<Rational> dense(even.empty() ? 0 : 2 * even.size() - 1);
    for (std::size_t i = 0; i < even.size(); ++i) dense[2 * i] = even[i];
    const Rational term = integral_zero_to_lambda(NuPolynomial(std::move(dense)),
                                                  as_rational(lambda_tau_k(cfg, k)));
    if (k % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

Contribution mi(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode) {
  if (cfg.n() != orb.n) throw InvalidArgument("ray and orbifold disagree on n");
  if (mode == EvalMode::Exact && !orb.volume_exact)
    throw InvalidArgument("exact mode requires a rational volume");
  Contribution out;
  out.standin = !orb.plancherel.has_value();
  const Rational value = mi_unscaled(cfg, orb) * orb.volume;
  out.value = to_double(value);
  if (mode == EvalMode::Exact) out.exact = CyclotomicField(1).from_rational(value);
  return out;
}

Contribution log_t2(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode) {
  Contribution out = mi(cfg, orb, mode);
  out.value *= 0.5;
  if (out.exact) *out.exact *= Rational(1, 2);
  return out;
}

Contribution log_t_approx(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode) {
  const Contribution identity = mi(cfg, orb, mode);
  Contribution out;
  out.standin = identity.standin;
  if (mode == EvalMode::Exact) {
    const CyclotomicField field(static_cast<std::uint32_t>(orb.period()));
    CyclotomicNumber sum = me_exact(cfg, orb, field) +
                           field.from_rational(identity.exact->rational_part());
    sum *= Rational(1, 2);
    out.value = sum.to_complex();
    out.exact = std::move(sum);
    return out;
  }
  out.value = 0.5 * (identity.value + me(cfg, orb, mode).value);
  return out;
}

// --- heat traces -----------------------------------------------------------

double gaussian_moment(int i, double t) {
  if (t <= 0) throw InvalidArgument("heat-trace time must be positive");
  if (i < 0) throw InvalidArgument("moment index must be non-negative");
  double double_factorial = 1.0;
  for (int j = 2 * i - 1; j > 1; j -= 2) double_factorial *= j;
  return double_factorial / std::pow(2.0 * t, i) * std::sqrt(std::numbers::pi / t);
}

std::complex<double> gaussian_pairing(std::span<const std::complex<double>> even_coeffs, double t) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < even_coeffs.size(); ++i) {
    const double sign = i % 2 ? -1.0 : 1.0;  // (iλ)^{2i} = (-1)^i λ^{2i}
    acc += even_coeffs[i] * (sign * gaussian_moment(static_cast<int>(i), t));
  }
  return acc;
}

std::complex<double> heat_trace_e(const RayConfig& cfg, const OrbifoldData& orb, double t) {
  if (t <= 0) throw InvalidArgument("heat-trace time must be positive");
  std::complex<double> total = 0.0;
  for (const auto& cls : orb.classes) {
    std::complex<double> per_class = 0.0;
    for (int k = 0; k <= cfg.n(); ++k) {
      const double lam = static_cast<double>(lambda_tau_k(cfg, k));
      const auto coeffs = coefficient_table(cfg, k, cls);
      const double sign = k % 2 ? 1.0 : -1.0;  // (-1)^{k+1}
      per_class += sign * std::exp(-t * lam * lam) * gaussian_pairing(coeffs, t);
    }
    total += 2.0 * to_double(cls.weight) * per_class;
  }
  return total;
}

double heat_trace_i(const RayConfig& cfg, const OrbifoldData& orb, double t) {
  if (t <= 0) throw InvalidArgument("heat-trace time must be positive");
  double total = 0.0;
  for (int k = 0; k <= cfg.n(); ++k) {
    const double lam = static_cast<double>(lambda_tau_k(cfg, k));
    const auto even = identity_polynomial_coeffs(cfg, orb, k);
    std::vector<std::complex<double>> coeffs;
    for (const auto& c : even) coeffs.emplace_back(to_double(c), 0.0);
    const double sign = k % 2 ? 1.0 : -1.0;
    total += sign * std::exp(-t * lam * lam) * gaussian_pairing(coeffs, t).real();
  }
  return 2.0 * to_double(orb.volume) * total;
}

// --- pseudopolynomial structure --------------------------------------------

namespace {

struct ExactOps {
  bool is_zero(const CyclotomicNumber& x) const { return x.is_zero(); }
  std::complex<double> to_complex(const CyclotomicNumber& x) const { return x.to_complex(); }
  std::string to_string(const CyclotomicNumber& x) const { return x.to_string(); }
  CyclotomicNumber scaled(CyclotomicNumber x, double, const Rational& inv) const {
    return x *= inv;
  }
};

struct FloatOps {
  double zero_threshold;
  bool is_zero(const std::complex<double>& x) const { return std::abs(x) <= zero_threshold; }
  std::complex<double> to_complex(const std::complex<double>& x) const { return x; }
  std::string to_string(const std::complex<double>&) const { return {}; }
  std::complex<double> scaled(std::complex<double> x, double inv, const Rational&) const {
    return x * inv;
  }
};

template <typename V, typename Ops>
PseudoPolyReport extract(std::span<const V> values, std::int64_t q, int degree_cap, const Ops& ops) {
  if (q < 1) throw InvalidArgument("residue period q must be positive");
  if (degree_cap < 0) throw InvalidArgument("degree cap must be non-negative");
  const auto needed = static_cast<std::size_t>(q) * static_cast<std::size_t>(degree_cap + 2);
  if (values.size() < needed)
    throw InvalidArgument("need at least q*(cap+2) = " + std::to_string(needed) +
                          " samples, got " + std::to_string(values.size()));
  PseudoPolyReport report;
  report.q = q;
  report.degree_cap = degree_cap;
  for (std::int64_t r = 0; r < q; ++r) {
    std::vector<V> row;
    for (auto i = static_cast<std::size_t>(r); i < values.size(); i += static_cast<std::size_t>(q))
      row.push_back(values[i]);
    std::vector<V> heads;  // Δ^j at the first sample of the class
    int degree = degree_cap + 1;
    for (int j = -1; j <= degree_cap; ++j) {
      // row currently holds Δ^{j+1}
      if (std::all_of(row.begin(), row.end(), [&](const V& x) { return ops.is_zero(x); })) {
        degree = j;
        break;
      }
      heads.push_back(row.front());
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
      row.pop_back();
    }
    report.residue_degrees.push_back(degree);
    std::vector<std::complex<double>> newton;
    for (const auto& h : heads) newton.push_back(ops.to_complex(h));
    report.newton.push_back(std::move(newton));
    if (degree >= 0 && degree <= degree_cap) {
      // Leading coefficient in m: Δ^D / (D! q^D).
      BigInt denom = 1;
      for (int i = 2; i <= degree; ++i) denom *= i;
      for (int i = 0; i < degree; ++i) denom *= static_cast<long>(q);
      const Rational inv(BigInt(1), denom);
      const V lead = ops.scaled(heads[static_cast<std::size_t>(degree)], to_double(inv), inv);
      report.leading.push_back(ops.to_complex(lead));
      report.leading_exact.push_back(ops.to_string(lead));
    } else {
      report.leading.emplace_back(0.0, 0.0);
      report.leading_exact.emplace_back(degree < 0 ? "0" : "");
    }
  }
  report.global_degree = *std::max_element(report.residue_degrees.begin(), report.residue_degrees.end());
  return report;
}

}  // namespace

PseudoPolyReport pseudopoly_extract(std::span<const CyclotomicNumber> values, std::int64_t q,
                                    int degree_cap) {
  return extract(values, q, degree_cap, ExactOps{});
}

PseudoPolyReport pseudopoly_extract(std::span<const Rational> values, std::int64_t q,
                                    int degree_cap) {
  const CyclotomicField rationals(1);
  std::vector<CyclotomicNumber> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(rationals.from_rational(v));
  return pseudopoly_extract(std::span<const CyclotomicNumber>(lifted), q, degree_cap);
}

PseudoPolyReport pseudopoly_extract(std::span<const std::complex<double>> values, std::int64_t q,
                                    int degree_cap, double tolerance) {
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  return extract(values, q, degree_cap, FloatOps{tolerance * std::max(scale, 1.0)});
}

// --- growth tables ---------------------------------------------------------

int lemma53_exponent(int d) { return 2 * (d - 1) + d * (d - 1) / 2; }
int lemma54_exponent(int d) { return d * (d - 1) / 2; }

double GrowthTable::max_normalized() const {
  double best = 0.0;
  for (const auto& r : rows) best = std::max(best, r.normalized);
  return best;
}

std::int64_t GrowthTable::argmax_m() const {
  std::int64_t arg = rows.empty() ? 0 : rows.front().m;
  double best = -1.0;
  for (const auto& r : rows)
    if (r.normalized > best) {
      best = r.normalized;
      arg = r.m;
    }
  return arg;
}

std::vector<double> GrowthTable::envelope() const {
  std::vector<double> env(rows.size());
  double running = 0.0;
  for (std::size_t i = rows.size(); i-- > 0;) {
    running = std::max(running, rows[i].normalized);
    env[i] = running;
  }
  return env;
}

bool GrowthTable::bounded(std::int64_t before_m, double factor) const {
  if (rows.empty()) return false;
  const double threshold = factor * max_normalized();
  for (const auto& r : rows)
    if (r.normalized > threshold) return false;
  return argmax_m() < before_m;
}

double GrowthTable::tail_growth_rate() const {
  std::vector<double> x, y;
  for (std::size_t i = rows.size() / 2; i < rows.size(); ++i)
    if (rows[i].normalized > 0 && rows[i].m > 0) {
      x.push_back(std::log(static_cast<double>(rows[i].m)));
      y.push_back(std::log(rows[i].normalized));
    }
  if (x.size() < 2) return 0.0;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

namespace {

void check_grid(std::span<const std::int64_t> m_grid, int exponent) {
  if (m_grid.empty()) throw InvalidArgument("growth check needs a non-empty m grid");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (m_grid[i] < 0 || (exponent > 0 && m_grid[i] == 0))
      throw InvalidArgument("growth check grid must contain m >= 1");
    if (i > 0 && m_grid[i] <= m_grid[i - 1])
      throw InvalidArgument("growth check grid must be increasing");
  }
}

}  // namespace

GrowthTable growth_check_lemma53(const RayConfig& base, const EllipticClass& cls,
                                 std::span<const std::int64_t> m_grid) {
  cls.validate(base.n());
  GrowthTable table;
  table.exponent = lemma53_exponent(cls.d);
  check_grid(m_grid, table.exponent);
  for (auto m : m_grid) {
    const RayConfig cfg = base.with_m(m);
    GrowthRow row{m, 0.0, 0.0, 0};
    for (int k = 0; k <= cfg.n(); ++k)
      for (const auto& a : coefficient_table(cfg, k, cls))
        if (std::abs(a) > row.raw) {
          row.raw = std::abs(a);
          row.k = k;
        }
    row.normalized = row.raw / std::pow(static_cast<double>(m), table.exponent);
    table.rows.push_back(row);
  }
  return table;
}

GrowthTable growth_check_lemma54(const RayConfig& base, const EllipticClass& cls,
                                 std::span<const std::int64_t> m_grid,
                                 std::span<const double> nu_fractions) {
  cls.validate(base.n());
  if (nu_fractions.empty()) throw InvalidArgument("growth check needs a non-empty nu grid");
  for (double f : nu_fractions)
    if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("nu fractions must lie in [0, 1]");
  GrowthTable table;
  table.exponent = lemma54_exponent(cls.d);
  check_grid(m_grid, table.exponent);
  for (auto m : m_grid) {
    const RayConfig cfg = base.with_m(m);
    const double lam_n = static_cast<double>(lambda_tau_k(cfg, cfg.n()));
    GrowthRow row{m, 0.0, 0.0, 0};
    for (int k = 0; k <= cfg.n(); ++k) {
      const auto p = build_p_gamma(cfg, k, cls);
      const double lam_k = static_cast<double>(lambda_tau_k(cfg, k));
      for (double f : nu_fractions) {
        const double nu = lam_n + f * (lam_k - lam_n);
        const double v = std::abs(numeric_phase_eval(p.value, cls.angles, nu));
        if (v > row.raw) {
          row.raw = v;
          row.k = k;
        }
      }
    }
    row.normalized = row.raw / std::pow(static_cast<double>(m), table.exponent);
    table.rows.push_back(row);
  }
  return table;
}

std::vector<double> uniform_fractions(int n_points) {
  if (n_points < 2) throw InvalidArgument("need at least two nu points (both endpoints)");
  std::vector<double> f(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) f[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n_points - 1);
  return f;
}

// --- telescoping split -----------------------------------------------------

TelescopingSides telescoping_sides(const RayConfig& cfg, int d) {
  const auto arity = static_cast<std::size_t>(cfg.n() + 1 - d);
  const Rational lam_n = as_rational(lambda_tau_k(cfg, cfg.n()));
  TelescopingSides sides{PhasePolynomial(arity), PhasePolynomial(arity)};
  for (int k = 0; k <= cfg.n(); ++k) {
    const auto p = build_p_gamma(cfg, k, d);
    const Rational lam_k = as_rational(lambda_tau_k(cfg, k));
    auto full = integrate_between(p.value, 0, lam_k);
    auto tail = integrate_between(p.value, lam_n, lam_k);
    if (k % 2) {
      sides.lhs -= full;
      sides.rhs -= tail;
    } else {
      sides.lhs += full;
      sides.rhs += tail;
    }
  }
  sides.rhs += alternating_sum(cfg, d) * lam_n;
  return sides;
}

}  // namespace torsion
