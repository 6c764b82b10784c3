#pragma once

#include <cstddef>
#include <functional>

namespace torsion {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_intervals = 20000;
};

/// Globally adaptive 15-point Gauss–Kronrod quadrature on [a, b].
/// Throws ConvergenceFailure if max_intervals is reached before the tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

/// Splits [a, b] at a·r, a·r², ... (a > 0, r > 1) before adaptive integration so that
/// integrands with a power singularity just left of a get a graded mesh.
QuadratureResult integrate_graded(const std::function<double(double)>& f, double a, double b,
                                  double ratio, const QuadratureOptions& options = {});

}  // namespace torsion
