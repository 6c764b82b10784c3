#include <doctest.h>

#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>

#include "torsion/asymptotics.hpp"
#include "torsion/error.hpp"

using namespace torsion;

namespace {

OrbifoldData pinned_orbifold() {
  OrbifoldData orb;
  orb.n = 2;
  orb.classes.push_back(EllipticClass{2, {Angle(1, 4)}, 1});
  return orb;
}

/// 2 w Σ_k (-1)^{k+1} e^{-tλ_k²} ∫_ℝ e^{-tλ²} Re P_k(iλ) dλ by sinh-sinh quadrature.
double heat_by_quadrature(const RayConfig& cfg, double t,
                          const std::function<std::vector<std::complex<double>>(int)>& coeffs,
                          double weight) {
  boost::math::quadrature::sinh_sinh<double> integrator;
  const auto lam = lambdas(cfg);
  double total = 0;
  for (int k = 0; k <= cfg.n(); ++k) {
    const auto c = coeffs(k);
    auto f = [&](double x) {
      const double g = std::exp(-t * x * x);
      if (g == 0) return 0.0;
      std::complex<double> acc = 0, pw = 1;
      for (std::size_t i = 0; i < c.size(); ++i, pw *= std::complex<double>(0, x)) acc += c[i] * pw;
      return acc.real() * g;
    };
    const double integral = integrator.integrate(f);
    const double sign = k % 2 ? 1.0 : -1.0;
    total += sign * std::exp(-t * double(lam[k]) * double(lam[k])) * integral;
  }
  return 2 * weight * total;
}

}  // namespace

TEST_SUITE("torsion") {

TEST_CASE("integrals from zero") {
  CHECK(integral_zero_to_lambda(NuPolynomial{-2, 0, -2}, 2) == make_rational(-28, 3));
  CHECK(integral_zero_to_lambda(NuPolynomial{1}, 7) == 7);
  CHECK(integral_zero_to_lambda(NuPolynomial{}, 7) == 0);
  CHECK(integral_zero_to_lambda(NuPolynomial{3, 1}, 0) == 0);
  CHECK_THROWS_AS(integral_zero_to_lambda(NuPolynomial{1}, -1), InvalidArgument);
}

TEST_CASE("per-k integrals at the quarter-turn class") {
  const CyclotomicField field(4);
  const std::vector<Angle> angles{Angle(1, 4)};
  auto term = [&](std::int64_t m, int k) {
    RayConfig cfg(2, {0, 0, 0}, m);
    const auto p = build_p_gamma(cfg, k, 2).value;
    const auto integ = integral_zero_to_lambda(p, lambdas(cfg)[k]);
    CyclotomicNumber v = field.zero();
    for (const auto& [mono, c] : integ.terms()) v += field.phase(mono, angles) * c.coeff(0);
    REQUIRE(v.is_rational());
    return v.rational_part();
  };
  CHECK(term(0, 0) == make_rational(-28, 3));
  CHECK(term(0, 1) == make_rational(-28, 3));
  CHECK(term(0, 2) == 0);
  CHECK(term(1, 0) == -24);
  CHECK(term(1, 1) == 0);
  CHECK(term(1, 2) == make_rational(56, 3));
}

TEST_CASE("ME, MI and torsion combinations") {
  const auto orb = pinned_orbifold();
  const Rational expected[] = {0, make_rational(-16, 3), 0, make_rational(16, 3)};
  for (int m = 0; m < 4; ++m) {
    const auto c = me(RayConfig(2, {0, 0, 0}, m), orb);
    REQUIRE(c.exact);
    CHECK(c.exact->is_rational());
    CHECK(c.exact->rational_part() == expected[m]);
    CHECK(std::abs(c.value - std::complex<double>(to_double(expected[m]), 0)) < 1e-12);
    const auto f = me(RayConfig(2, {0, 0, 0}, m), orb, EvalMode::Float);
    CHECK(std::abs(f.value - c.value) < 1e-9);
    CHECK_FALSE(f.exact);
  }
  OrbifoldData empty;
  empty.n = 2;
  CHECK(me(RayConfig(2, {0, 0, 0}, 3), empty).exact->is_zero());

  const auto mi0 = mi(RayConfig(2, {0, 0, 0}, 0), orb);
  CHECK(mi0.standin);
  CHECK(mi0.exact->rational_part() == make_rational(176, 15));
  CHECK(mi(RayConfig(2, {0, 0, 0}, 1), orb).exact->rational_part() == make_rational(6656, 15));

  for (int m = 0; m < 4; ++m) {
    RayConfig cfg(2, {0, 0, 0}, m);
    const auto t2 = log_t2(cfg, orb);
    const auto t = log_t_approx(cfg, orb);
    CHECK(t2.exact->rational_part() * 2 == mi(cfg, orb).exact->rational_part());
    CHECK((t.exact->rational_part() - t2.exact->rational_part()) * 2 ==
          me(cfg, orb).exact->rational_part());
  }

  OrbifoldData zero_pl = orb;
  zero_pl.plancherel = std::vector<std::vector<Rational>>(3, std::vector<Rational>{0, 0});
  const auto mz = mi(RayConfig(2, {0, 0, 0}, 4), zero_pl);
  CHECK_FALSE(mz.standin);
  CHECK(mz.exact->is_zero());

  OrbifoldData inexact = orb;
  inexact.volume_exact = false;
  CHECK_THROWS_AS(mi(RayConfig(2, {0, 0, 0}, 0), inexact), InvalidArgument);
  CHECK_NOTHROW(mi(RayConfig(2, {0, 0, 0}, 0), inexact, EvalMode::Float));
}

TEST_CASE("Gaussian moments") {
  CHECK(gaussian_moment(0, 1) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(gaussian_moment(1, 1) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-15));
  CHECK(gaussian_moment(2, 0.5) == doctest::Approx(3 * std::sqrt(2 * M_PI)).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_moment(0, 0), InvalidArgument);
}

TEST_CASE("heat trace closed forms against quadrature") {
  const auto orb = pinned_orbifold();
  for (std::int64_t m : {0, 2}) {
    RayConfig cfg(2, {0, 0, 0}, m);
    for (double t : {0.1, 1.0, 10.0}) {
      const double closed_i = heat_trace_i(cfg, orb, t);
      const double quad_i = heat_by_quadrature(
          cfg, t,
          [&](int k) {
            std::vector<std::complex<double>> c;
            for (const auto& x : identity_polynomial_coeffs(cfg, orb, k)) {
              c.push_back(to_double(x));
              c.push_back(0);
            }
            return c;
          },
          1.0);
      CHECK(std::abs(closed_i - quad_i) <= 1e-8 * std::abs(quad_i));

      const auto closed_e = heat_trace_e(cfg, orb, t);
      const double quad_e = heat_by_quadrature(
          cfg, t,
          [&](int k) { return substitute_phases(build_p_gamma(cfg, k, orb.classes[0]).value,
                                                orb.classes[0].angles); },
          1.0);
      CHECK(std::abs(closed_e.imag()) < 1e-9 * std::max(1.0, std::abs(closed_e.real())));
      CHECK(std::abs(closed_e.real() - quad_e) <= 1e-8 * std::abs(quad_e));
    }
  }
}

TEST_CASE("heat trace for a d=1 class is the constant-coefficient formula") {
  OrbifoldData orb;
  orb.n = 2;
  EllipticClass cls{1, {Angle(1, 4), Angle(1, 3)}, make_rational(1, 2)};
  orb.classes.push_back(cls);
  RayConfig cfg(2, {1, 0, 0}, 1);
  const auto lam = lambdas(cfg);
  for (double t : {0.1, 1.0, 10.0}) {
    std::complex<double> expected = 0;
    for (int k = 0; k <= 2; ++k) {
      const auto c = substitute_phases(build_p_gamma(cfg, k, cls).value, cls.angles);
      REQUIRE(c.size() <= 1);
      const std::complex<double> ck = c.empty() ? 0.0 : c[0];
      expected += (k % 2 ? 1.0 : -1.0) * std::exp(-t * double(lam[k] * lam[k])) * ck *
                  std::sqrt(M_PI / t);
    }
    expected *= 2 * 0.5;
    const auto got = heat_trace_e(cfg, orb, t);
    CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
  }
  CHECK_THROWS_AS(heat_trace_e(cfg, orb, 0.0), InvalidArgument);
  CHECK_THROWS_AS(heat_trace_i(cfg, orb, -1.0), InvalidArgument);
}

TEST_CASE("pseudopolynomial extraction on constructed sequences") {
  std::vector<Rational> squares;
  for (int m = 0; m <= 10; ++m) squares.push_back(m * m);
  auto r = pseudopoly_extract(squares, 1, 3);
  CHECK(r.global_degree == 2);
  CHECK(r.leading_exact[0] == "1");

  std::vector<Rational> alt;
  for (int m = 0; m <= 20; ++m) alt.push_back(m % 2 ? -m : m);
  auto r2 = pseudopoly_extract(alt, 2, 2);
  CHECK(r2.residue_degrees == std::vector<int>{1, 1});
  CHECK(r2.leading_exact[0] == "1");
  CHECK(r2.leading_exact[1] == "-1");

  std::vector<std::complex<double>> fl;
  for (int m = 0; m <= 20; ++m) fl.emplace_back(m % 3 == 0 ? 0.0 : 0.5 * m * m * m, 0.0);
  auto r3 = pseudopoly_extract(fl, 3, 4, 1e-9);
  CHECK(r3.residue_degrees == std::vector<int>{-1, 3, 3});
  CHECK(r3.leading[1].real() == doctest::Approx(0.5));

  std::vector<Rational> high;
  for (int m = 0; m <= 10; ++m) high.push_back(Rational(m) * m * m * m);
  auto r4 = pseudopoly_extract(high, 1, 2);
  CHECK_FALSE(r4.within_cap());
  CHECK(r4.residue_degrees[0] == 3);

  std::vector<Rational> few(5, Rational(1));
  CHECK_THROWS_AS(pseudopoly_extract(few, 2, 2), InvalidArgument);
}

TEST_CASE("identity alternating sum degree and ratio stabilization") {
  for (int n = 1; n <= 3; ++n)
    for (auto tau : {std::vector<std::int64_t>(n + 1, 0), std::vector<std::int64_t>(n + 1, 1)}) {
      const int expected = n * (n + 1) / 2;
      std::vector<Rational> values;
      for (int m = 0; m < expected + 4; ++m)
        values.push_back(identity_alternating_sum(RayConfig(n, tau, m)));
      const auto rep = pseudopoly_extract(values, 1, expected + 1);
      CHECK(rep.global_degree == expected);
    }
  for (int n = 1; n <= 3; ++n) {
    RayConfig base(n, std::vector<std::int64_t>(n + 1, 0), 0);
    auto ratio = [&](std::int64_t m) {
      return to_double(identity_alternating_sum(base.with_m(m)) / Rational(weyl_dim(base.with_m(m))));
    };
    for (std::int64_t m = 20; m < 40; ++m) CHECK(std::abs(ratio(m + 1) - ratio(m)) < 1.0 / m);
  }
}

TEST_CASE("ME degree bound on residue classes") {
  const auto orb = pinned_orbifold();
  const CyclotomicField field(4);
  std::vector<CyclotomicNumber> values;
  for (int m = 0; m <= 40; ++m) values.push_back(me_exact(RayConfig(2, {0, 0, 0}, m), orb, field));
  const auto rep = pseudopoly_extract(values, 4, 4);
  CHECK(rep.within_cap());

  OrbifoldData mixed;
  mixed.n = 2;
  mixed.classes.push_back(EllipticClass{1, {Angle(1, 3), Angle(1, 6)}, make_rational(1, 3)});
  mixed.classes.push_back(EllipticClass{2, {Angle(1, 2)}, 2});
  CHECK(mixed.period() == 6);
  const CyclotomicField f6(6);
  std::vector<CyclotomicNumber> v6;
  for (int m = 0; m < 6 * 6; ++m) v6.push_back(me_exact(RayConfig(2, {1, 1, 0}, m), mixed, f6));
  CHECK(pseudopoly_extract(v6, 6, 4).within_cap());
}

TEST_CASE("telescoping split holds exactly") {
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t m = 0; m <= 3; ++m)
      for (int d = 1; d <= n; ++d) {
        const auto sides = telescoping_sides(RayConfig(n, std::vector<std::int64_t>(n + 1, 0), m), d);
        CHECK(sides.lhs == sides.rhs);
      }
}

TEST_CASE("growth tables") {
  std::vector<std::int64_t> grid;
  for (int m = 1; m <= 30; ++m) grid.push_back(m);
  EllipticClass d1{1, {Angle(1, 4), Angle(1, 3)}, 1};
  const auto t53 = growth_check_lemma53(RayConfig(2, {0, 0, 0}), d1, grid);
  CHECK(t53.exponent == 0);
  CHECK(t53.max_normalized() < 10);  // a signed sum of at most |W| unit phases
  EllipticClass d2{2, {Angle(1, 4)}, 1};
  const auto t = growth_check_lemma53(RayConfig(2, {0, 0, 0}), d2, grid);
  CHECK(t.exponent == 3);
  CHECK(t.rows.size() == grid.size());
  const auto env = t.envelope();
  for (std::size_t i = 1; i < env.size(); ++i) CHECK(env[i] <= env[i - 1]);
  CHECK(lemma53_exponent(3) == 7);
  CHECK(lemma54_exponent(3) == 3);
  const auto fr = uniform_fractions(5);
  CHECK(fr.front() == 0.0);
  CHECK(fr.back() == 1.0);
  const auto t54 = growth_check_lemma54(RayConfig(2, {0, 0, 0}), d2, grid, fr);
  CHECK(t54.exponent == 1);
  CHECK(t54.rows.back().m == 30);
}

}  // TEST_SUITE
