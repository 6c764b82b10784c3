#pragma once

#include <span>
#include <vector>

#include "torsion/quadrature.hpp"

namespace torsion::cone {

/// Gradient-norm density for the cone metric family l(u, t) = u·√t + t:
/// u² / (64 t^{5/4} (√t + u)^{5/2}). Requires t > 0, u > 0.
double integrand(double u, double t);

/// ∫_ε^1 integrand(u, t) dt. The ε → 0 limit is infinite; this returns the
/// regularized tail, which grows like ε^{-1/4} / (16 √u).
QuadratureResult tail_integral(double u, double eps, double rel_tol = 1e-9);

/// tail · ε^{1/4} · 16 √u, which tends to 1 as ε → 0.
double normalized_tail(double u, double eps, double tail);

/// Least-squares slope of log(tail) against log(ε).
double loglog_slope(std::span<const double> eps, std::span<const double> tails);

/// Least-squares slope of log(tail(ε_i) - tail(ε_{i-1})) against log(ε_i) for a
/// decreasing ε grid; the additive constant in the tail cancels out.
double increment_slope(std::span<const double> eps, std::span<const double> tails);

struct ConeRow {
  double eps;
  double tail;
  double normalized;
};

std::vector<ConeRow> tail_table(double u, std::span<const double> eps_grid, double rel_tol = 1e-9);

}  // namespace torsion::cone
