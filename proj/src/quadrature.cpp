#include "torsion/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "torsion/error.hpp"

namespace torsion {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule; nodes on [0, 1), symmetric.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kNodes[1], [3], [5], [7].
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrod[static_cast<std::size_t>(i)] * pair;
    if (i % 2 == 1) gauss += kGauss[static_cast<std::size_t>(i / 2)] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options) {
  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod(f, a, b));
  QuadratureResult result;
  result.evaluations = 15;
  double total = heap.top().value;
  double error = heap.top().error;
  while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
    if (heap.size() >= options.max_intervals)
      throw ConvergenceFailure("adaptive quadrature hit " + std::to_string(options.max_intervals) +
                               " intervals with error estimate " + std::to_string(error));
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  result.intervals = heap.size();
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = total;
  result.error_estimate = error;
  return result;
}

QuadratureResult integrate_graded(const std::function<double(double)>& f, double a, double b,
                                  double ratio, const QuadratureOptions& options) {
  if (!(a > 0.0) || !(b > a)) throw InvalidArgument("graded quadrature needs 0 < a < b");
  if (!(ratio > 1.0)) throw InvalidArgument("grading ratio must exceed 1");
  QuadratureResult total;
  double left = a;
  while (left < b) {
    const double right = std::min(b, left * ratio);
    const auto piece = integrate_adaptive(f, left, right, options);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.intervals += piece.intervals;
    total.evaluations += piece.evaluations;
    left = right;
  }
  return total;
}

}  // namespace torsion
