#include "torsion/cone.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "torsion/error.hpp"

namespace torsion::cone {

double integrand(double u, double t) {
  if (!(t > 0.0)) throw InvalidArgument("cone integrand needs t > 0");
  if (!(u > 0.0)) throw InvalidArgument("cone integrand needs u > 0");
  return u * u / (64.0 * std::pow(t, 1.25) * std::pow(std::sqrt(t) + u, 2.5));
}

QuadratureResult tail_integral(double u, double eps, double rel_tol) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("tail_integral needs 0 < eps < 1");
  if (!(u > 0.0)) throw InvalidArgument("tail_integral needs u > 0");
  QuadratureOptions options;
  options.rel_tol = rel_tol;
  // Doubling mesh from eps: each piece sees a bounded ratio of t^{-5/4}.
  return integrate_graded([u](double t) { return integrand(u, t); }, eps, 1.0, 2.0, options);
}

double normalized_tail(double u, double eps, double tail) {
  return tail * std::pow(eps, 0.25) * 16.0 * std::sqrt(u);
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) throw InvalidArgument("slope fit needs at least two points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw InvalidArgument("slope fit needs distinct abscissae");
  return sxy / sxx;
}

}  // namespace

double loglog_slope(std::span<const double> eps, std::span<const double> tails) {
  if (eps.size() != tails.size()) throw InvalidArgument("eps and tail grids differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    x.push_back(std::log(eps[i]));
    y.push_back(std::log(tails[i]));
  }
  return fit_slope(x, y);
}

double increment_slope(std::span<const double> eps, std::span<const double> tails) {
  if (eps.size() != tails.size()) throw InvalidArgument("eps and tail grids differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 1; i < eps.size(); ++i) {
    const double inc = tails[i] - tails[i - 1];
    if (!(eps[i] < eps[i - 1]) || !(inc > 0.0))
      throw InvalidArgument("increment slope needs a strictly decreasing eps grid");
    x.push_back(std::log(eps[i]));
    y.push_back(std::log(inc));
  }
  return fit_slope(x, y);
}

std::vector<ConeRow> tail_table(double u, std::span<const double> eps_grid, double rel_tol) {
  std::vector<ConeRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    const double tail = tail_integral(u, eps, rel_tol).value;
    rows.push_back({eps, tail, normalized_tail(u, eps, tail)});
  }
  return rows;
}

}  // namespace torsion::cone
