#include <doctest.h>

#include "torsion/elliptic.hpp"
#include "torsion/error.hpp"

using namespace torsion;

namespace {

PhasePolynomial pairs(std::initializer_list<std::pair<std::int64_t, NuPolynomial>> terms) {
  PhasePolynomial p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, c);
  return p;
}

/// All non-increasing τ of length n+1 with entries ≤ 2.
std::vector<std::vector<std::int64_t>> taus(int n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t hi) -> void {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = hi; x >= 0; --x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace

TEST_SUITE("elliptic-poly") {

TEST_CASE("A factor and B monomial") {
  WeightVector w{{5, 3}};
  // d = 3: (-ν²-25)(-ν²-9)(25-9)
  CHECK(a_factor(w, 3) == NuPolynomial{3600, 0, 544, 0, 16});
  CHECK(a_factor(w, 1) == NuPolynomial{1});
  CHECK(a_factor(w, 2) == NuPolynomial{-25, 0, -1});
  CHECK(b_monomial(w, 1) == PhaseMonomial{-5, -3});
  CHECK(b_monomial(w, 2) == PhaseMonomial{-3});
  CHECK(b_monomial(w, 3).empty());
  CHECK_THROWS_AS(a_factor(w, 4), InvalidArgument);
  CHECK_THROWS_AS(a_factor(w, 0), InvalidArgument);
}

TEST_CASE("P^gamma for n=2, tau=0, m=0, d=2") {
  RayConfig cfg(2, {0, 0, 0}, 0);
  const auto p2 = build_p_gamma(cfg, 2, 2).value;
  CHECK(p2 == pairs({{1, {-4, 0, -1}}, {-1, {-4, 0, -1}}, {2, {1, 0, 1}}, {-2, {1, 0, 1}}}));
  const auto p0 = build_p_gamma(cfg, 0, 2).value;
  CHECK(p0 == pairs({{0, {-2, 0, -2}}, {1, {0, 0, 1}}, {-1, {0, 0, 1}}}));
  CHECK(p0.max_nu_degree() == 2);
}

TEST_CASE("alternating sums match the brute-force expansion") {
  RayConfig cfg(2, {0, 0, 0}, 0);
  const auto s0 = alternating_sum(cfg, 2);
  CHECK(s0 == pairs({{0, {6}}, {1, {-4}}, {-1, {-4}}, {2, {1}}, {-2, {1}}}));
  // in the conjugate-pair basis 1, ζ+ζ⁻¹, ζ²+ζ⁻²
  const auto paired = conjugate_pair_coefficients(s0);
  CHECK(paired.size() == 3);
  CHECK(paired.at({0}) == NuPolynomial{3});
  CHECK(paired.at({1}) == NuPolynomial{-4});
  CHECK(paired.at({2}) == NuPolynomial{1});

  const auto s1 = alternating_sum(cfg.with_m(1), 2);
  CHECK(s1 == pairs({{1, {5}}, {-1, {5}}, {2, {-8}}, {-2, {-8}}, {3, {3}}, {-3, {3}}}));

  // n = 1, d = 1, m = 2: ζ⁻² - ζ⁻³
  const auto n1 = alternating_sum(RayConfig(1, {0, 0}, 2), 1);
  CHECK(n1 == pairs({{-2, {1}}, {-3, {-1}}}));
  CHECK_FALSE(is_inversion_symmetric(n1));
}

TEST_CASE("identity alternating sums") {
  CHECK(identity_alternating_sum(RayConfig(2, {0, 0, 0}, 0)) == 48);
  CHECK(identity_alternating_sum(RayConfig(2, {0, 0, 0}, 1)) == 480);
  CHECK(identity_alternating_sum(RayConfig(3, {0, 0, 0, 0}, 0)) == 103680);
}

TEST_CASE("alternating sum is nu-free on the grid") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& tau : taus(n))
      for (std::int64_t m = 0; m <= 3; ++m)
        for (int d = 1; d <= n + 1; ++d) {
          RayConfig cfg(n, tau, m);
          CHECK(alternating_sum(cfg, d).max_nu_degree() <= 0);
        }
}

TEST_CASE("P^gamma degree bound and evenness") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= n + 1; ++d)
      for (int k = 0; k <= n; ++k) {
        const auto p = build_p_gamma(RayConfig(n, std::vector<std::int64_t>(n + 1, 1), 2), k, d);
        CHECK(p.value.max_nu_degree() <= 2 * (d - 1));
        for (const auto& [mono, c] : p.value.terms()) CHECK(c.is_even());
      }
}

TEST_CASE("Weyl symmetry of P^gamma") {
  // n even: W(D_n) contains -1, so P is invariant under ζ -> ζ⁻¹.
  for (std::int64_t m = 0; m <= 3; ++m)
    for (int d = 1; d <= 2; ++d)
      for (int k = 0; k <= 2; ++k)
        CHECK(is_inversion_symmetric(build_p_gamma(RayConfig(2, {1, 0, 0}, m), k, d).value));
  // per-variable reflection is available whenever d >= 2 (a sign flip pairs with slot e_2).
  for (int d = 2; d <= 3; ++d)
    for (int k = 0; k <= 3; ++k) {
      const auto p = build_p_gamma(RayConfig(3, {1, 1, 0, 0}, 1), k, d).value;
      for (std::size_t j = 0; j < p.arity(); ++j) CHECK(is_reflection_symmetric(p, j));
    }
}

TEST_CASE("coefficient table at a quarter turn") {
  EllipticClass cls{2, {Angle(1, 4)}, 1};
  const auto table = coefficient_table(RayConfig(2, {0, 0, 0}, 0), 2, cls);
  REQUIRE(table.size() == 2);
  CHECK(std::abs(table[0] - std::complex<double>(-2, 0)) < 1e-12);
  CHECK(std::abs(table[1] - std::complex<double>(-2, 0)) < 1e-12);
}

TEST_CASE("interpolation identity for A") {
  std::vector<std::int64_t> K{2, 1};
  auto r = eqforA_check(K, 2);
  CHECK(r.passed());
  CHECK(r.value == 3);
  auto r1 = eqforA_check(K, 1);
  CHECK(r1.passed());
  CHECK(r1.value == -3);
  std::vector<std::int64_t> K3{5, 3, 0};
  for (auto kappa : K3) CHECK(eqforA_check(K3, kappa).passed());
  std::vector<std::int64_t> dup{2, 2};
  CHECK_THROWS_AS(eqforA_check(dup, 2), InvalidArgument);
  CHECK_THROWS_AS(eqforA_check(K, 7), InvalidArgument);
}

}  // TEST_SUITE
