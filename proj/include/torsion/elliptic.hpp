#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "torsion/lie.hpp"
#include "torsion/nu_polynomial.hpp"
#include "torsion/phase_polynomial.hpp"

namespace torsion {

/// The polynomial P^γ_{σ_{τ(m),k}}(ν) as a formal Laurent polynomial in the phases.
struct EllipticPolynomial {
  PhasePolynomial value;
  int d = 1;
  int k = 0;
  std::int64_t m = 0;
};

/// A(Λ, ν) = Π_{2≤j≤d} (-ν² - v_j²) · Π_{2≤i<j≤d} (v_i² - v_j²), with Λ = Σ v_j e_j.
/// Requires 1 ≤ d ≤ w.size() + 1.
NuPolynomial a_factor(const WeightVector& w, int d);

/// B(Λ) = exp(-i Σ_{j>d} v_j φ_j), returned as the exponent vector (-v_{d+1}, ..., -v_{n+1}).
PhaseMonomial b_monomial(const WeightVector& w, int d);

/// Σ_{s ∈ W(D_n)} det(s) A(s·w, ν) B(s·w) with w = Λ(σ_{τ(m),k}) + ρ_M.
///
/// d = n+1 gives the identity-element stand-in (no phases). Only the block count
/// enters; the angles are substituted later.
EllipticPolynomial build_p_gamma(const RayConfig& cfg, int k, int d);
/// As above, validating cls against cfg.n() first.
EllipticPolynomial build_p_gamma(const RayConfig& cfg, int k, const EllipticClass& cls);

/// Σ_k (-1)^k P^γ_k. Every coefficient must be ν-free; throws LemmaViolation otherwise.
PhasePolynomial alternating_sum(const RayConfig& cfg, int d);
PhasePolynomial alternating_sum(const RayConfig& cfg, const EllipticClass& cls);

/// The alternating sum for γ = id (d = n+1): a single rational constant.
Rational identity_alternating_sum(const RayConfig& cfg);

/// For a term map symmetric under e ↦ -e, the coefficients c_e of (ζ^e + ζ^{-e}),
/// keyed by the lexicographically non-negative representative. c_0 counts ζ^0 twice.
/// Throws InvalidArgument if the map is not symmetric.
PhasePolynomial::TermMap conjugate_pair_coefficients(const PhasePolynomial& p);

/// True if p(ζ) = p(ζ^{-1}) termwise.
bool is_inversion_symmetric(const PhasePolynomial& p);
/// True if p is unchanged when the exponents of phase variable j are negated.
bool is_reflection_symmetric(const PhasePolynomial& p, std::size_t j);

/// a^γ_{k,i}(m): coefficient of ν^{2i} after substituting the class angles, i = 0..d-1.
std::vector<std::complex<double>> coefficient_table(const RayConfig& cfg, int k,
                                                    const EllipticClass& cls);

struct EqForAResult {
  /// A(Λ_κ, ±iλ_j) == 0 for every j ≠ κ.
  bool zeros_verified = false;
  /// A(Λ_κ, ±iλ_κ).
  Rational value;
  /// Π_{i<j} (λ_i² - λ_j²) over K sorted in decreasing order (always positive).
  Rational vandermonde;
  /// value == sign · vandermonde, sign = (-1)^{position of κ in the sorted K}.
  int sign = 1;
  bool value_matches = false;
  NuPolynomial polynomial;

  bool passed() const { return zeros_verified && value_matches; }
};

/// Builds Λ_κ from K \ {κ} in the d-1 block slots, d = |K|, and checks the
/// interpolation values of A(Λ_κ, ν) at ν = ±iλ_j, j ∈ K.
/// Throws InvalidArgument for duplicate or negative λ or κ ∉ K.
EqForAResult eqforA_check(std::span<const std::int64_t> lams, std::int64_t kappa);

}  // namespace torsion
