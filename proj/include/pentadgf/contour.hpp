#pragma once

// Quadrature engines for the contours used throughout the library: the
// infinite vertical line, a rectangular Hankel contour around the positive
// real axis, small circles, and rectangle boundaries for the argument
// principle. All integrals are returned already divided by 2 pi i.

#include <cmath>
#include <functional>
#include <vector>

#include "pentadgf/types.hpp"

namespace pentadgf {

using ComplexFn = std::function<Complex(Complex)>;

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Cached n-point rule; safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int n);

// z = c + iy, y in [-Y, Y].
struct VerticalLineSpec {
  double abscissa = 0.0;
  // Y; zero selects the smallest multiple of panel_width meeting the tail bound
  //   e^{-Y} max(1, 3Y^2/(2 pi^2))^tail_power e^{tail_log_scale} < tol / 10.
  double truncation = 0.0;
  int panel_order = 24;
  double panel_width = 1.0;
  double tail_power = 0.0;
  double tail_log_scale = 0.0;
  int max_order = 384;
};

// Counterclockwise rectangle around [cap_abscissa, truncation] on the real
// axis with half-height half_height.
struct HankelRectSpec {
  double half_height = kPi / 12.0;
  double cap_abscissa = 0.0;
  double truncation = 0.0;
  int panel_order = 24;
  double panel_width = kPi / 3.0;
  int max_order = 384;
};

struct CircleSpec {
  Complex center{};
  double radius = 1.0;
  int nodes = 16;  // initial node count, power of two
  int max_nodes = 1 << 16;
};

struct Rect {
  double re_lo, re_hi, im_lo, im_hi;
};

// Conditioning limit on max|integrand| / |result| for the vertical line.
inline constexpr double kIllConditionedRatio = 1e12;

// Smallest Y (multiple of panel_width) meeting the VerticalLineSpec tail
// bound; throws DomainError when none exists below 10^4.
double vertical_truncation(const VerticalLineSpec& spec, double tol);

EvalResult integrate_vertical(const ComplexFn& f, const VerticalLineSpec& spec, double tol);

EvalResult integrate_hankel(const ComplexFn& f, const HankelRectSpec& spec, double tol);

// Plain integral over the real interval [a, b] with `panels` equal GL
// panels, doubling the order until consecutive levels agree within tol.
EvalResult integrate_interval(const ComplexFn& f, double a, double b, int panels, double tol,
                              int order = 24, int max_order = 384);

// Trapezoid sum (1/N) sum f(z_j) (z_j - center) on N equispaced nodes,
// generic over the complex scalar so the residue oracle can run it in
// extended precision. Nodes sit at angles rotation + 2 pi j / N; with
// rotation = pi/N they are the midpoints used to double N.
template <class C, class R, class Fn>
C circle_trapezoid(Fn&& f, const C& center, const R& radius, int nodes, const R& two_pi,
                   const R& rotation = R(0)) {
  using std::cos;
  using std::sin;
  C acc(0);
  for (int j = 0; j < nodes; ++j) {
    const R angle = rotation + two_pi * R(j) / R(nodes);
    const C offset(radius * cos(angle), radius * sin(angle));
    acc += f(center + offset) * offset;
  }
  return acc / C(R(nodes));
}

// Doubles the node count until successive trapezoid sums agree within tol
// (floored at the rounding level of the summands).
EvalResult integrate_circle(const ComplexFn& f, const CircleSpec& spec, double tol = 1e-13);

// Winding number of g around the rectangle boundary (counterclockwise),
// by adaptive sampling until consecutive phase steps are below pi/2.
int winding_number(const ComplexFn& g, const Rect& rect, double max_step);

struct WindingTrace {
  int winding = 0;
  long evaluations = 0;
  double min_abs = 0.0;  // smallest |g| seen on the boundary
};

WindingTrace winding_trace(const ComplexFn& g, const Rect& rect, double max_step);

// Minimum |g| accepted on a winding contour.
inline constexpr double kBoundaryFloor = 1e-9;

}  // namespace pentadgf
