#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "torsion/angle.hpp"
#include "torsion/nu_polynomial.hpp"

namespace torsion {

/// Exponent vector (e_1, ..., e_r) standing for Π_j ζ_j^{e_j}, ζ_j = exp(iφ_j).
using PhaseMonomial = std::vector<std::int64_t>;

/// Finite Laurent polynomial in the phase variables ζ_j with NuPolynomial coefficients.
///
/// Monomials are keyed by exact integer exponent vectors; zero coefficients are
/// never stored, so structural equality is mathematical equality.
class PhasePolynomial {
 public:
  using TermMap = std::map<PhaseMonomial, NuPolynomial>;

  explicit PhasePolynomial(std::size_t arity = 0) : arity_(arity) {}

  static PhasePolynomial term(PhaseMonomial monomial, NuPolynomial coeff);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of a monomial (zero if absent).
  NuPolynomial coeff(const PhaseMonomial& monomial) const;

  /// Adds coeff·monomial in place.
  void add_term(const PhaseMonomial& monomial, const NuPolynomial& coeff);

  /// Largest ν-degree over all stored coefficients (-1 when zero).
  int max_nu_degree() const;

  PhasePolynomial& operator+=(const PhasePolynomial& rhs);
  PhasePolynomial& operator-=(const PhasePolynomial& rhs);
  PhasePolynomial& operator*=(const Rational& c);
  PhasePolynomial operator-() const;

  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
  friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);
  friend PhasePolynomial operator*(PhasePolynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;

  std::string to_string() const;

 private:
  void check_arity(const PhaseMonomial& monomial) const;

  std::size_t arity_ = 0;
  TermMap terms_;
};

/// exp(i Σ_j e_j φ_j), with the angle sum reduced exactly modulo 2π first.
std::complex<double> phase_value(const PhaseMonomial& monomial, std::span<const Angle> angles);

/// Σ_terms phase_value(monomial)·coeff(ν) as a complex double.
std::complex<double> numeric_phase_eval(const PhasePolynomial& p, std::span<const Angle> angles,
                                        double nu);

/// Coefficients of ν^0, ν^1, ... after substituting the phases numerically.
std::vector<std::complex<double>> substitute_phases(const PhasePolynomial& p,
                                                   std::span<const Angle> angles);

}  // namespace torsion
