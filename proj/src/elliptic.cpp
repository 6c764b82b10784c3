#include "torsion/elliptic.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "torsion/error.hpp"

namespace torsion {

namespace {

void check_block_count(int d, std::size_t slots) {
  if (d < 1 || static_cast<std::size_t>(d) > slots + 1)
    throw InvalidArgument("block count d = " + std::to_string(d) + " outside [1, " +
                          std::to_string(slots + 1) + "]");
}

std::string describe(const RayConfig& cfg) {
  std::ostringstream os;
  os << "n=" << cfg.n() << " tau=(";
  for (std::size_t i = 0; i < cfg.tau().size(); ++i) os << (i ? "," : "") << cfg.tau()[i];
  os << ") m=" << cfg.m();
  return os.str();
}

}  // namespace

NuPolynomial a_factor(const WeightVector& w, int d) {
  check_block_count(d, w.size());
  NuPolynomial a = NuPolynomial::constant(Rational(1));
  const auto slots = static_cast<std::size_t>(d - 1);  // v_2 .. v_d
  for (std::size_t j = 0; j < slots; ++j) {
    const Rational v = static_cast<long>(w[j]);
    a *= NuPolynomial{-v * v, Rational(0), Rational(-1)};
  }
  Rational vandermonde = 1;
  for (std::size_t i = 0; i < slots; ++i)
    for (std::size_t j = i + 1; j < slots; ++j) {
      const Rational vi = static_cast<long>(w[i]);
      const Rational vj = static_cast<long>(w[j]);
      vandermonde *= vi * vi - vj * vj;
    }
  return a *= vandermonde;
}

PhaseMonomial b_monomial(const WeightVector& w, int d) {
  check_block_count(d, w.size());
  PhaseMonomial e;
  e.reserve(w.size() + 1 - static_cast<std::size_t>(d));
  for (std::size_t j = static_cast<std::size_t>(d - 1); j < w.size(); ++j) e.push_back(-w[j]);
  return e;
}

EllipticPolynomial build_p_gamma(const RayConfig& cfg, int k, int d) {
  const int n = cfg.n();
  check_block_count(d, static_cast<std::size_t>(n));
  const WeightVector w = sigma_weight_plus_rho(cfg, k);
  EllipticPolynomial out{PhasePolynomial(static_cast<std::size_t>(n + 1 - d)), d, k, cfg.m()};
  for (const auto& s : WeylGroupD(n)) {
    const WeightVector sw = apply_weyl(s, w);
    NuPolynomial a = a_factor(sw, d);
    if (s.det() < 0) a = -a;
    out.value.add_term(b_monomial(sw, d), a);
  }
  for (const auto& [mono, c] : out.value.terms())
    if (!c.is_even() || c.degree() > 2 * (d - 1))
      throw LemmaViolation("P^gamma coefficient of degree " + std::to_string(c.degree()) +
                           " breaks the even degree <= 2(d-1) bound at " + describe(cfg));
  return out;
}

EllipticPolynomial build_p_gamma(const RayConfig& cfg, int k, const EllipticClass& cls) {
  cls.validate(cfg.n());
  return build_p_gamma(cfg, k, cls.d);
}

PhasePolynomial alternating_sum(const RayConfig& cfg, int d) {
  PhasePolynomial sum(static_cast<std::size_t>(cfg.n() + 1 - d));
  for (int k = 0; k <= cfg.n(); ++k) {
    const auto p = build_p_gamma(cfg, k, d);
    if (k % 2) sum -= p.value;
    else sum += p.value;
  }
  for (const auto& [mono, c] : sum.terms()) {
    if (c.degree() > 0) {
      PhasePolynomial offending = PhasePolynomial::term(mono, c);
      throw LemmaViolation("alternating sum depends on nu at " + describe(cfg) +
                           " d=" + std::to_string(d) + ": " + offending.to_string());
    }
  }
  return sum;
}

PhasePolynomial alternating_sum(const RayConfig& cfg, const EllipticClass& cls) {
  cls.validate(cfg.n());
  return alternating_sum(cfg, cls.d);
}

Rational identity_alternating_sum(const RayConfig& cfg) {
  const PhasePolynomial sum = alternating_sum(cfg, cfg.n() + 1);
  return sum.coeff(PhaseMonomial{}).coeff(0);
}

namespace {

PhaseMonomial negated(PhaseMonomial e) {
  for (auto& x : e) x = -x;
  return e;
}

bool is_canonical_representative(const PhaseMonomial& e) {
  for (auto x : e)
    if (x != 0) return x > 0;
  return true;
}

}  // namespace

bool is_inversion_symmetric(const PhasePolynomial& p) {
  for (const auto& [mono, c] : p.terms())
    if (p.coeff(negated(mono)) != c) return false;
  return true;
}

bool is_reflection_symmetric(const PhasePolynomial& p, std::size_t j) {
  if (j >= p.arity()) throw InvalidArgument("phase variable index out of range");
  for (const auto& [mono, c] : p.terms()) {
    PhaseMonomial r = mono;
    r[j] = -r[j];
    if (p.coeff(r) != c) return false;
  }
  return true;
}

PhasePolynomial::TermMap conjugate_pair_coefficients(const PhasePolynomial& p) {
  if (!is_inversion_symmetric(p))
    throw InvalidArgument("term map is not symmetric under e -> -e");
  PhasePolynomial::TermMap out;
  for (const auto& [mono, c] : p.terms()) {
    if (!is_canonical_representative(mono)) continue;
    const bool self_conjugate = std::all_of(mono.begin(), mono.end(), [](auto x) { return x == 0; });
    out.emplace(mono, self_conjugate ? c * Rational(1, 2) : c);
  }
  return out;
}

std::vector<std::complex<double>> coefficient_table(const RayConfig& cfg, int k,
                                                    const EllipticClass& cls) {
  const auto p = build_p_gamma(cfg, k, cls);
  const auto all = substitute_phases(p.value, cls.angles);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(cls.d));
  for (std::size_t i = 0; i < out.size() && 2 * i < all.size(); ++i) out[i] = all[2 * i];
  return out;
}

EqForAResult eqforA_check(std::span<const std::int64_t> lams, std::int64_t kappa) {
  if (lams.empty()) throw InvalidArgument("eqforA_check: empty index set");
  std::vector<std::int64_t> sorted(lams.begin(), lams.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0) throw InvalidArgument("eqforA_check: negative lambda");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw InvalidArgument("eqforA_check: duplicate lambda " + std::to_string(sorted[i]));
  }
  const auto pos = std::find(sorted.begin(), sorted.end(), kappa);
  if (pos == sorted.end()) throw InvalidArgument("eqforA_check: kappa not in K");

  const int d = static_cast<int>(sorted.size());
  WeightVector w;
  for (auto x : sorted)
    if (x != kappa) w.coords.push_back(x);

  EqForAResult r;
  r.polynomial = a_factor(w, d);
  r.zeros_verified = true;
  for (auto x : sorted)
    if (x != kappa && r.polynomial.eval_at_imag(Rational(static_cast<long>(x))) != 0)
      r.zeros_verified = false;
  r.value = r.polynomial.eval_at_imag(Rational(static_cast<long>(kappa)));
  r.vandermonde = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const Rational a = static_cast<long>(sorted[i]);
      const Rational b = static_cast<long>(sorted[j]);
      r.vandermonde *= a * a - b * b;
    }
  r.sign = (pos - sorted.begin()) % 2 ? -1 : 1;
  r.value_matches = r.value == r.vandermonde * Rational(r.sign);
  return r;
}

}  // namespace torsion
