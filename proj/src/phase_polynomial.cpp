#include "torsion/phase_polynomial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "torsion/error.hpp"

namespace torsion {

PhasePolynomial PhasePolynomial::term(PhaseMonomial monomial, NuPolynomial coeff) {
  PhasePolynomial p(monomial.size());
  p.add_term(monomial, coeff);
  return p;
}

void PhasePolynomial::check_arity(const PhaseMonomial& monomial) const {
  if (monomial.size() != arity_)
    throw InvalidArgument("phase monomial of length " + std::to_string(monomial.size()) +
                          " in a polynomial of arity " + std::to_string(arity_));
}

NuPolynomial PhasePolynomial::coeff(const PhaseMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? NuPolynomial() : it->second;
}

void PhasePolynomial::add_term(const PhaseMonomial& monomial, const NuPolynomial& coeff) {
  check_arity(monomial);
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PhasePolynomial::max_nu_degree() const {
  int deg = -1;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, c.degree());
  return deg;
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& rhs) {
  if (rhs.arity_ != arity_) throw InvalidArgument("phase polynomial arity mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& rhs) {
  if (rhs.arity_ != arity_) throw InvalidArgument("phase polynomial arity mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

PhasePolynomial PhasePolynomial::operator-() const {
  PhasePolynomial r = *this;
  return r *= Rational(-1);
}

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  if (a.arity_ != b.arity_) throw InvalidArgument("phase polynomial arity mismatch");
  PhasePolynomial out(a.arity_);
  PhaseMonomial sum(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = ma[j] + mb[j];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

std::string PhasePolynomial::to_string() const {
  if (terms_.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (std::size_t j = 0; j < mono.size(); ++j) os << (j ? "," : "") << mono[j];
    os << "): " << c.to_string();
  }
  os << "}";
  return os.str();
}

std::complex<double> phase_value(const PhaseMonomial& monomial, std::span<const Angle> angles) {
  if (monomial.size() != angles.size())
    throw InvalidArgument("phase monomial length does not match the angle count");
  Rational turns = 0;
  for (std::size_t j = 0; j < monomial.size(); ++j)
    turns += Rational(static_cast<long>(monomial[j])) * angles[j].turns();
  BigInt whole;
  mpz_fdiv_q(whole.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
  turns -= whole;
  // Exact quarter turns avoid spurious 1e-17 components from cos/sin.
  if (turns == 0) return {1.0, 0.0};
  if (turns == Rational(1, 4)) return {0.0, 1.0};
  if (turns == Rational(1, 2)) return {-1.0, 0.0};
  if (turns == Rational(3, 4)) return {0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * to_double(turns);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<std::complex<double>> substitute_phases(const PhasePolynomial& p,
                                                   std::span<const Angle> angles) {
  if (p.arity() != angles.size())
    throw InvalidArgument("angle count does not match the phase polynomial arity");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(std::max(p.max_nu_degree(), -1) + 1));
  for (const auto& [mono, c] : p.terms()) {
    const auto phase = phase_value(mono, angles);
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) out[i] += phase * to_double(c.coeffs()[i]);
  }
  return out;
}

std::complex<double> numeric_phase_eval(const PhasePolynomial& p, std::span<const Angle> angles,
                                        double nu) {
  const auto coeffs = substitute_phases(p, angles);
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * nu + coeffs[i];
  return acc;
}

}  // namespace torsion
