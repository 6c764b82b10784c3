#pragma once

#include <random>

#include "torsion/nu_polynomial.hpp"
#include "torsion/phase_polynomial.hpp"

namespace testing_util {

inline torsion::NuPolynomial random_nu_poly(std::mt19937_64& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<torsion::Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(torsion::make_rational(num(rng), den(rng)));
  return torsion::NuPolynomial(std::move(c));
}

inline torsion::PhasePolynomial random_phase_poly(std::mt19937_64& rng, std::size_t arity,
                                                  int terms = 4) {
  std::uniform_int_distribution<int> expo(-3, 3);
  torsion::PhasePolynomial p(arity);
  for (int t = 0; t < terms; ++t) {
    torsion::PhaseMonomial mono(arity);
    for (auto& e : mono) e = expo(rng);
    p.add_term(mono, random_nu_poly(rng, 3));
  }
  return p;
}

}  // namespace testing_util
