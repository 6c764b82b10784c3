#include "torsion/nu_polynomial.hpp"

#include <sstream>

#include "torsion/error.hpp"

namespace torsion {

NuPolynomial::NuPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

NuPolynomial::NuPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

NuPolynomial NuPolynomial::constant(Rational c) { return NuPolynomial({std::move(c)}); }

NuPolynomial NuPolynomial::monomial(Rational c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return NuPolynomial(std::move(v));
}

void NuPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool NuPolynomial::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational NuPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

NuPolynomial& NuPolynomial::operator+=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

NuPolynomial& NuPolynomial::operator-=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return NuPolynomial(std::move(out));
}

NuPolynomial& NuPolynomial::operator*=(const NuPolynomial& rhs) { return *this = *this * rhs; }

NuPolynomial& NuPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

NuPolynomial NuPolynomial::operator-() const {
  NuPolynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Rational NuPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational NuPolynomial::eval_at_imag(const Rational& lambda) const {
  if (!is_even())
    throw InvalidArgument("eval_at_imag requires an even polynomial, got " + to_string());
  const Rational neg_sq = -lambda * lambda;
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (i % 2) continue;
    acc = acc * neg_sq + coeffs_[i];
  }
  return acc;
}

NuPolynomial NuPolynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return NuPolynomial(std::move(out));
}

Rational NuPolynomial::integrate(const Rational& a, const Rational& b) const {
  const NuPolynomial prim = antiderivative();
  return prim.evaluate(b) - prim.evaluate(a);
}

std::string NuPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<NuPolynomial, NuPolynomial> divmod(const NuPolynomial& dividend,
                                             const NuPolynomial& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const auto dv = divisor.coeffs();
  const std::size_t dd = dv.size() - 1;
  if (rem.size() < dv.size()) return {NuPolynomial(), dividend};
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const Rational f = rem[i] / dv[dd];
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * dv[j];
  }
  return {NuPolynomial(std::move(quot)), NuPolynomial(std::move(rem))};
}

}  // namespace torsion
