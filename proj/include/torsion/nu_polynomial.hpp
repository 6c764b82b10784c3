#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Used for the spectral parameter ν (coefficient i multiplies ν^i). The
/// trailing coefficient is nonzero unless the polynomial is zero, so two
/// equal polynomials always have identical coefficient vectors.
class NuPolynomial {
 public:
  NuPolynomial() = default;
  explicit NuPolynomial(std::vector<Rational> coeffs);
  NuPolynomial(std::initializer_list<Rational> coeffs);

  static NuPolynomial constant(Rational c);
  static NuPolynomial monomial(Rational c, std::size_t power);

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// All odd-power coefficients vanish.
  bool is_even() const;

  /// Coefficient of ν^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  NuPolynomial& operator+=(const NuPolynomial& rhs);
  NuPolynomial& operator-=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const Rational& c);

  friend NuPolynomial operator+(NuPolynomial a, const NuPolynomial& b) { return a += b; }
  friend NuPolynomial operator-(NuPolynomial a, const NuPolynomial& b) { return a -= b; }
  friend NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b);
  friend NuPolynomial operator*(NuPolynomial a, const Rational& c) { return a *= c; }
  friend NuPolynomial operator*(const Rational& c, NuPolynomial a) { return a *= c; }
  NuPolynomial operator-() const;

  friend bool operator==(const NuPolynomial&, const NuPolynomial&) = default;

  Rational evaluate(const Rational& x) const;

  /// Value at ν = ±iλ for an even polynomial: ν² is replaced by -λ².
  /// Throws InvalidArgument if an odd coefficient is nonzero.
  Rational eval_at_imag(const Rational& lambda) const;

  NuPolynomial antiderivative() const;
  /// ∫_a^b p(ν) dν.
  Rational integrate(const Rational& a, const Rational& b) const;

  std::string to_string(std::string_view var = "nu") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<NuPolynomial, NuPolynomial> divmod(const NuPolynomial& dividend,
                                             const NuPolynomial& divisor);

/// Convenience: scale(p, c) == c·p.
inline NuPolynomial scale(NuPolynomial p, const Rational& c) { return p *= c; }

}  // namespace torsion
