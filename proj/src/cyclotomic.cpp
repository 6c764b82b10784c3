#include "torsion/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "torsion/error.hpp"

namespace torsion {

NuPolynomial cyclotomic_polynomial(std::uint32_t q) {
  if (q == 0) throw InvalidArgument("cyclotomic order must be positive");
  static thread_local std::map<std::uint32_t, NuPolynomial> cache;
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  // x^q - 1 = Π_{d | q} Φ_d
  NuPolynomial p = NuPolynomial::monomial(Rational(1), q) - NuPolynomial::constant(Rational(1));
  for (std::uint32_t d = 1; d < q; ++d) {
    if (q % d) continue;
    auto [quot, rem] = divmod(p, cyclotomic_polynomial(d));
    if (!rem.is_zero()) throw LemmaViolation("cyclotomic factorization left a remainder");
    p = std::move(quot);
  }
  cache.emplace(q, p);
  return p;
}

// --- CyclotomicNumber ------------------------------------------------------

void CyclotomicNumber::check_compatible(const CyclotomicNumber& rhs) const {
  if (rhs.order_ != order_)
    throw InvalidArgument("cyclotomic numbers from different fields (" + std::to_string(order_) +
                          " vs " + std::to_string(rhs.order_) + ")");
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_part() const { return coords_.empty() ? Rational(0) : coords_[0]; }

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    acc += to_double(coords_[j]) * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return acc;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return rational_part().get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    if (!first) os << (coords_[j] < 0 ? " - " : " + ");
    else if (coords_[j] < 0) os << "-";
    first = false;
    os << Rational(abs(coords_[j])).get_str();
    if (j > 0) os << "*w" << order_ << "^" << j;
  }
  return os.str();
}

// --- CyclotomicField -------------------------------------------------------

CyclotomicField::CyclotomicField(std::uint32_t order)
    : order_(order), minimal_polynomial_(cyclotomic_polynomial(order)) {
  const std::size_t deg = degree();
  const auto phi = minimal_polynomial_.coeffs();  // monic
  powers_.reserve(order_);
  std::vector<Rational> current(deg);
  current[0] = 1;
  for (std::uint32_t j = 0; j < order_; ++j) {
    powers_.push_back(current);
    // Multiply by x and reduce the overflow coefficient with the monic Φ.
    Rational top = current[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) current[i] -= top * phi[i];
  }
}

CyclotomicNumber CyclotomicField::zero() const {
  return CyclotomicNumber(order_, std::vector<Rational>(degree()));
}

CyclotomicNumber CyclotomicField::from_rational(const Rational& r) const {
  std::vector<Rational> c(degree());
  c[0] = r;
  return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicField::power(std::int64_t j) const {
  const std::int64_t q = order_;
  const std::int64_t r = ((j % q) + q) % q;
  return CyclotomicNumber(order_, powers_[static_cast<std::size_t>(r)]);
}

CyclotomicNumber CyclotomicField::phase(const PhaseMonomial& monomial,
                                        std::span<const Angle> angles) const {
  if (monomial.size() != angles.size())
    throw InvalidArgument("phase monomial length does not match the angle count");
  Rational exponent = 0;
  for (std::size_t j = 0; j < monomial.size(); ++j)
    exponent += Rational(static_cast<long>(monomial[j])) * angles[j].turns();
  exponent *= Rational(static_cast<long>(order_));
  if (exponent.get_den() != 1)
    throw InvalidArgument("angle denominators do not divide the cyclotomic order " +
                          std::to_string(order_));
  const BigInt& num = exponent.get_num();
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), order_);
  return power(r.get_si());
}

}  // namespace torsion
