#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "torsion/angle.hpp"
#include "torsion/nu_polynomial.hpp"
#include "torsion/phase_polynomial.hpp"

namespace torsion {

class CyclotomicField;

/// Element of Q(ω), ω = exp(2πi/q), stored in the power basis 1, ω, ..., ω^{φ(q)-1}.
///
/// The representation is canonical, so a value is zero iff all coordinates vanish.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;

  std::uint32_t order() const noexcept { return order_; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// True when the value lies in Q.
  bool is_rational() const;
  /// Coordinate of 1; equals the value whenever is_rational().
  Rational rational_part() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& c);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c) { return a *= c; }
  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

  std::complex<double> to_complex() const;
  /// "-16/3" for rational values, otherwise "a0 + a1*w12^1 + ..." with w12 = exp(2πi/12).
  std::string to_string() const;

 private:
  friend class CyclotomicField;
  CyclotomicNumber(std::uint32_t order, std::vector<Rational> coords)
      : order_(order), coords_(std::move(coords)) {}
  void check_compatible(const CyclotomicNumber& rhs) const;

  std::uint32_t order_ = 1;
  std::vector<Rational> coords_{Rational(0)};
};

/// The q-th cyclotomic field with a precomputed reduction table for ω^j, 0 ≤ j < q.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return minimal_polynomial_.degree(); }
  const NuPolynomial& minimal_polynomial() const noexcept { return minimal_polynomial_; }

  CyclotomicNumber zero() const;
  CyclotomicNumber from_rational(const Rational& r) const;
  /// ω^j for any integer j.
  CyclotomicNumber power(std::int64_t j) const;

  /// Exact value of the phase monomial, given angles whose turn denominators divide order().
  CyclotomicNumber phase(const PhaseMonomial& monomial, std::span<const Angle> angles) const;

 private:
  std::uint32_t order_;
  NuPolynomial minimal_polynomial_;
  std::vector<std::vector<Rational>> powers_;
};

/// The q-th cyclotomic polynomial Φ_q.
NuPolynomial cyclotomic_polynomial(std::uint32_t q);

}  // namespace torsion
