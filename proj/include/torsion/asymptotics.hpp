#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torsion/cyclotomic.hpp"
#include "torsion/elliptic.hpp"
#include "torsion/lie.hpp"

namespace torsion {

/// Global data of the orbifold O = Γ\H^{2n+1} entering the trace formula.
struct OrbifoldData {
  int n = 1;
  /// vol(O). volume_exact is false when it was given as a floating-point number.
  Rational volume{1};
  bool volume_exact = true;
  std::vector<EllipticClass> classes;
  /// Optional replacement for the built-in identity polynomial: plancherel[k][i] is the
  /// coefficient of ν^{2i} in P_{σ_k}, k = 0..n. The same coefficients are used for every m.
  std::optional<std::vector<std::vector<Rational>>> plancherel;

  /// Throws InvalidArgument on a non-positive volume, an invalid class or a
  /// plancherel table whose length is not n+1.
  void validate() const;

  /// lcm of all class periods (1 without classes).
  std::int64_t period() const;

  friend bool operator==(const OrbifoldData&, const OrbifoldData&) = default;
};

enum class EvalMode { Exact, Float };

/// A contribution that is real in theory but computed in C; exact holds the
/// cyclotomic value when it was computed exactly.
struct Contribution {
  std::complex<double> value;
  std::optional<CyclotomicNumber> exact;
  /// Set when the identity term uses the built-in d = n+1 stand-in polynomial.
  bool standin = false;

  /// Exact rendering, or an empty string in float mode.
  std::string exact_string() const { return exact ? exact->to_string() : std::string(); }
};

/// ∫_0^λ p(t) dt.
Rational integral_zero_to_lambda(const NuPolynomial& p, const Rational& lambda);
/// Termwise ∫_0^λ; every coefficient of the result is constant in ν.
PhasePolynomial integral_zero_to_lambda(const PhasePolynomial& p, const Rational& lambda);
/// ∫_0^λ Σ_i c_i t^{2i} dt for complex coefficients of the even powers.
std::complex<double> integral_zero_to_lambda(std::span<const std::complex<double>> even_coeffs,
                                             double lambda);

/// Σ_k (-1)^k ∫_0^{λ_k} P^γ_k(t) dt as a formal phase polynomial (no weight applied).
PhasePolynomial elliptic_integral_sum(const RayConfig& cfg, const EllipticClass& cls);

/// ME(τ(m)) = Σ_γ vol(Γ_γ\G_γ) Σ_k (-1)^k ∫_0^{λ_k} P^γ_k(t) dt.
Contribution me(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode = EvalMode::Exact);
/// Exact ME in a caller-owned field whose order is a multiple of orb.period().
CyclotomicNumber me_exact(const RayConfig& cfg, const OrbifoldData& orb,
                          const CyclotomicField& field);

/// vol(O) · Σ_k (-1)^k ∫_0^{λ_k} P_k(t) dt with P_k the d = n+1 stand-in unless
/// orb.plancherel is set. The stand-in is proportional to, not equal to, the true
/// Plancherel polynomial.
Contribution mi(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode = EvalMode::Exact);

/// log T^{(2)}(τ(m)) = MI / 2.
Contribution log_t2(const RayConfig& cfg, const OrbifoldData& orb, EvalMode mode = EvalMode::Exact);

/// (MI + ME) / 2. The O(e^{-cm}) remainder of the analytic torsion is not computed.
Contribution log_t_approx(const RayConfig& cfg, const OrbifoldData& orb,
                          EvalMode mode = EvalMode::Exact);

/// ∫_ℝ e^{-tλ²} λ^{2i} dλ = (2i-1)!! / (2t)^i · √(π/t).
double gaussian_moment(int i, double t);

/// ∫_ℝ e^{-tλ²} P(iλ) dλ for complex coefficients of ν^{2i}.
std::complex<double> gaussian_pairing(std::span<const std::complex<double>> even_coeffs, double t);

/// E(t, τ(m)) = 2 Σ_γ w_γ Σ_k (-1)^{k+1} e^{-tλ_k²} ∫_ℝ e^{-tλ²} P^γ_k(iλ) dλ.
std::complex<double> heat_trace_e(const RayConfig& cfg, const OrbifoldData& orb, double t);
/// I(t, τ(m)) = 2 vol(O) Σ_k (-1)^{k+1} e^{-tλ_k²} ∫_ℝ e^{-tλ²} P_k(iλ) dλ.
double heat_trace_i(const RayConfig& cfg, const OrbifoldData& orb, double t);

/// Coefficients of ν^{2i} of the identity polynomial P_k used by MI and I(t).
std::vector<Rational> identity_polynomial_coeffs(const RayConfig& cfg, const OrbifoldData& orb,
                                                 int k);

/// Structure of a sequence sampled at m = 0, 1, ..., M on residue classes mod q.
struct PseudoPolyReport {
  std::int64_t q = 1;
  std::int64_t degree_cap = 0;
  /// Degree per residue class r = 0..q-1; -1 for an identically zero class,
  /// degree_cap + 1 when no degree ≤ cap fits.
  std::vector<int> residue_degrees;
  int global_degree = -1;
  /// Leading coefficient of the class polynomial in m, per residue.
  std::vector<std::complex<double>> leading;
  /// Exact leading coefficients (empty strings in float mode).
  std::vector<std::string> leading_exact;
  /// Newton forward differences Δ^j along each class, j = 0..degree (float copies).
  std::vector<std::vector<std::complex<double>>> newton;

  bool within_cap() const { return global_degree <= degree_cap; }
};

/// Exact mode: degree D is the least D with all (D+1)-th differences exactly zero.
/// Requires values.size() ≥ q·(degree_cap + 2).
PseudoPolyReport pseudopoly_extract(std::span<const CyclotomicNumber> values, std::int64_t q,
                                    int degree_cap);
PseudoPolyReport pseudopoly_extract(std::span<const Rational> values, std::int64_t q,
                                    int degree_cap);
/// Float mode: differences below tolerance·max|value| count as zero.
PseudoPolyReport pseudopoly_extract(std::span<const std::complex<double>> values, std::int64_t q,
                                    int degree_cap, double tolerance);

/// Exponents of m used to normalize the growth tables.
int lemma53_exponent(int d);  // 2(d-1) + d(d-1)/2
int lemma54_exponent(int d);  // d(d-1)/2

struct GrowthRow {
  std::int64_t m = 0;
  double raw = 0.0;         // max |quantity| over k (and i or ν)
  double normalized = 0.0;  // raw / m^exponent
  int k = 0;                // where the max was attained
};

struct GrowthTable {
  int exponent = 0;
  std::vector<GrowthRow> rows;

  /// Largest normalized value and the m where it occurs.
  double max_normalized() const;
  std::int64_t argmax_m() const;
  /// Suffix maxima of the normalized values (non-increasing by construction).
  std::vector<double> envelope() const;
  /// Max attained before `before_m` and every value ≤ factor · max.
  bool bounded(std::int64_t before_m, double factor = 1.1) const;
  /// Least-squares slope of log(normalized) against log(m) over the last half of the grid.
  double tail_growth_rate() const;
};

/// max_{k,i} |a^γ_{k,i}(m)| / m^{2(d-1) + d(d-1)/2}. Requires a non-empty grid of m ≥ 1.
GrowthTable growth_check_lemma53(const RayConfig& base, const EllipticClass& cls,
                                 std::span<const std::int64_t> m_grid);

/// max_k sup_{ν ∈ [λ_n, λ_k]} |P^γ_k(ν)| / m^{d(d-1)/2}; nu_fractions in [0, 1]
/// map affinely onto each interval.
GrowthTable growth_check_lemma54(const RayConfig& base, const EllipticClass& cls,
                                 std::span<const std::int64_t> m_grid,
                                 std::span<const double> nu_fractions);

/// n_points equally spaced fractions including both endpoints.
std::vector<double> uniform_fractions(int n_points);

/// Both sides of the integral split
///   Σ_k (-1)^k ∫_0^{λ_k} P_k = λ_n · Σ_k (-1)^k P_k + Σ_k (-1)^k ∫_{λ_n}^{λ_k} P_k
/// as formal phase polynomials.
struct TelescopingSides {
  PhasePolynomial lhs;
  PhasePolynomial rhs;
};
TelescopingSides telescoping_sides(const RayConfig& cfg, int d);

}  // namespace torsion
