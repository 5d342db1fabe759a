#include "pentadgf/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace pentadgf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * kPi;

// Neumaier-compensated sum of complex terms, fixed order.
class ComplexSum {
 public:
  void add(Complex v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
    l1_ += std::abs(v);
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }
  double l1() const { return l1_; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0, l1_ = 0;
};

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    // recompute derivative at the converged node
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return rule;
}

struct Segment {
  Complex start;
  Complex end;
  int panels;
};

struct PathSum {
  Complex value;
  double l1 = 0.0;
  double max_abs = 0.0;
  long evaluations = 0;
};

// scale * sum over straight segments of the composite GL rule.
PathSum path_quadrature(const ComplexFn& f, const std::vector<Segment>& path, int order,
                        Complex scale) {
  const auto& rule = gauss_legendre(order);
  ComplexSum sum;
  PathSum out;
  for (const auto& seg : path) {
    const Complex step = (seg.end - seg.start) / double(seg.panels);
    const Complex half = step / 2.0;
    for (int p = 0; p < seg.panels; ++p) {
      const Complex mid = seg.start + (p + 0.5) * step;
      for (int k = 0; k < order; ++k) {
        const Complex z = mid + rule.nodes[k] * half;
        const Complex fz = f(z);
        if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
          throw DomainError("contour quadrature: non-finite integrand (pole on path?)");
        out.max_abs = std::max(out.max_abs, std::abs(fz));
        sum.add(rule.weights[k] * fz * half);
        ++out.evaluations;
      }
    }
  }
  out.value = sum.value() * scale;
  out.l1 = sum.l1() * std::abs(scale);
  return out;
}

double rounding_floor(double l1) { return 16.0 * kEps * l1; }

// Doubles the GL order until consecutive levels agree within tol.
EvalResult refine(const ComplexFn& f, const std::vector<Segment>& path, int order, int max_order,
                  double tol, Method method, double* max_abs = nullptr,
                  Complex scale = 1.0 / Complex(0.0, kTwoPi)) {
  PathSum prev = path_quadrature(f, path, order, scale);
  long evals = prev.evaluations;
  for (int n = 2 * order; n <= max_order; n *= 2) {
    PathSum cur = path_quadrature(f, path, n, scale);
    evals += cur.evaluations;
    const double diff = std::abs(cur.value - prev.value);
    EvalResult r;
    r.value = cur.value;
    r.err_estimate = std::max(diff, rounding_floor(cur.l1));
    r.method = method;
    r.evaluations = evals;
    if (max_abs) *max_abs = std::max(prev.max_abs, cur.max_abs);
    if (diff < tol || diff <= rounding_floor(cur.l1)) return r;
    prev = cur;
    if (2 * n > max_order) throw ConvergenceError("contour quadrature did not converge", r);
  }
  EvalResult r{prev.value, std::numeric_limits<double>::infinity(), method, evals};
  throw ConvergenceError("contour quadrature: max_order below two levels", r);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(compute_rule(n));
  return *slot;
}

double vertical_truncation(const VerticalLineSpec& spec, double tol) {
  const double target = std::log(tol / 10.0);
  auto log_tail = [&](double y) {
    const double growth = std::max(1.0, 3.0 * y * y / (2.0 * kPi * kPi));
    return -y + spec.tail_power * std::log(growth) + spec.tail_log_scale;
  };
  // past the maximum of -y + 2p log y
  const double start = std::max(spec.panel_width, 2.0 * std::abs(spec.tail_power));
  for (double y = std::ceil(start / spec.panel_width) * spec.panel_width; y < 1e4;
       y += spec.panel_width) {
    if (log_tail(y) < target) return y;
  }
  throw DomainError("integrate_vertical: tail bound cannot be met");
}

EvalResult integrate_vertical(const ComplexFn& f, const VerticalLineSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_vertical: tol must be positive");
  if (!(spec.panel_width > 0.0) || spec.panel_order < 1)
    throw DomainError("integrate_vertical: bad panel layout");
  double Y = spec.truncation;
  if (Y <= 0.0) {
    Y = vertical_truncation(spec, tol);
  } else {
    const double growth = std::max(1.0, 3.0 * Y * Y / (2.0 * kPi * kPi));
    if (-Y + spec.tail_power * std::log(growth) + spec.tail_log_scale >= std::log(tol / 10.0))
      throw DomainError("integrate_vertical: truncation violates the tail bound");
  }
  const int half_panels = static_cast<int>(std::ceil(Y / spec.panel_width - 1e-12));
  const double yy = half_panels * spec.panel_width;
  const std::vector<Segment> path = {
      {Complex(spec.abscissa, -yy), Complex(spec.abscissa, yy), 2 * half_panels}};
  double max_abs = 0.0;
  EvalResult r = refine(f, path, spec.panel_order, spec.max_order, tol, Method::VerticalLine, &max_abs);
  // Below tol only absolute accuracy is meaningful.
  const double scale = std::max(std::abs(r.value), tol);
  r.ill_conditioned = max_abs / scale > kIllConditionedRatio;
  return r;
}

EvalResult integrate_hankel(const ComplexFn& f, const HankelRectSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_hankel: tol must be positive");
  if (!(spec.half_height > 0.0)) throw DomainError("integrate_hankel: half_height must be positive");
  if (!(spec.cap_abscissa < kPi / 6.0)) throw DomainError("integrate_hankel: cap_abscissa must be < pi/6");
  if (!(spec.truncation > spec.cap_abscissa))
    throw DomainError("integrate_hankel: truncation must exceed cap_abscissa");
  const double a = spec.cap_abscissa, X = spec.truncation, d = spec.half_height;
  const int horizontal = std::max(1, static_cast<int>(std::ceil((X - a) / spec.panel_width - 1e-12)));
  const int vertical = std::max(1, static_cast<int>(std::ceil(2.0 * d / spec.panel_width - 1e-12)));
  const std::vector<Segment> path = {
      {Complex(a, -d), Complex(X, -d), horizontal},
      {Complex(X, -d), Complex(X, d), vertical},
      {Complex(X, d), Complex(a, d), horizontal},
      {Complex(a, d), Complex(a, -d), vertical},
  };
  EvalResult r = refine(f, path, spec.panel_order, spec.max_order, tol, Method::Hankel);
  // The right edge stands in for the truncated tail.
  const PathSum right = path_quadrature(f, {path[1]}, spec.panel_order, 1.0 / Complex(0.0, kTwoPi));
  if (std::abs(right.value) >= tol / 10.0)
    throw DomainError("integrate_hankel: truncation too short, right edge contributes " +
                      std::to_string(std::abs(right.value)));
  r.evaluations += right.evaluations;
  return r;
}

EvalResult integrate_interval(const ComplexFn& f, double a, double b, int panels, double tol,
                              int order, int max_order) {
  if (!(b > a) || panels < 1) throw DomainError("integrate_interval: bad interval");
  const std::vector<Segment> path = {{Complex(a, 0.0), Complex(b, 0.0), panels}};
  return refine(f, path, order, max_order, tol, Method::VerticalLine, nullptr, 1.0);
}

EvalResult integrate_circle(const ComplexFn& f, const CircleSpec& spec, double tol) {
  if (!(spec.radius > 0.0)) throw DomainError("integrate_circle: radius must be positive");
  if (spec.nodes < 2 || (spec.nodes & (spec.nodes - 1)) != 0)
    throw DomainError("integrate_circle: nodes must be a power of two");
  auto level = [&](int n, double& l1) {
    ComplexSum sum;
    for (int j = 0; j < n; ++j) {
      const double angle = kTwoPi * j / n;
      const Complex offset = std::polar(spec.radius, angle);
      const Complex fz = f(spec.center + offset);
      if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
        throw DomainError("integrate_circle: non-finite integrand on the circle");
      sum.add(fz * offset);
    }
    l1 = sum.l1() / n;
    return sum.value() / double(n);
  };
  double l1 = 0.0;
  Complex prev = level(spec.nodes, l1);
  long evals = spec.nodes;
  for (int n = 2 * spec.nodes; n <= spec.max_nodes; n *= 2) {
    const Complex cur = level(n, l1);
    evals += n;
    const double diff = std::abs(cur - prev);
    EvalResult r{cur, std::max(diff, rounding_floor(l1)), Method::Circle, evals};
    if (diff < tol || diff <= rounding_floor(l1)) return r;
    if (2 * n > spec.max_nodes) throw ConvergenceError("integrate_circle did not converge", r);
    prev = cur;
  }
  throw ConvergenceError("integrate_circle: max_nodes too small",
                         {prev, std::numeric_limits<double>::infinity(), Method::Circle, evals});
}

WindingTrace winding_trace(const ComplexFn& g, const Rect& rect, double max_step) {
  if (!(rect.re_hi > rect.re_lo) || !(rect.im_hi > rect.im_lo))
    throw DomainError("winding_number: degenerate rectangle");
  if (!(max_step > 0.0)) throw DomainError("winding_number: max_step must be positive");
  const Complex corners[4] = {{rect.re_lo, rect.im_lo},
                              {rect.re_hi, rect.im_lo},
                              {rect.re_hi, rect.im_hi},
                              {rect.re_lo, rect.im_hi}};
  WindingTrace trace;
  trace.min_abs = std::numeric_limits<double>::infinity();
  auto eval = [&](Complex z) {
    const Complex v = g(z);
    ++trace.evaluations;
    const double a = std::abs(v);
    trace.min_abs = std::min(trace.min_abs, a);
    if (!(a >= kBoundaryFloor))
      throw BoundaryError("winding_number: |g| below floor near (" + std::to_string(z.real()) +
                          ", " + std::to_string(z.imag()) + ")");
    return v;
  };
  const double perimeter = 2.0 * ((rect.re_hi - rect.re_lo) + (rect.im_hi - rect.im_lo));
  const double min_step = perimeter * 1e-10;
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const Complex a = corners[e], b = corners[(e + 1) % 4];
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_step)));
    Complex z0 = a;
    Complex g0 = eval(z0);
    for (int p = 1; p <= pieces; ++p) {
      const Complex z1 = a + (b - a) * (double(p) / pieces);
      const Complex g1 = eval(z1);
      // depth-first bisection of [z0, z1] until every phase step < pi/2
      struct Node { Complex za, zb, ga, gb; };
      std::vector<Node> stack{{z0, z1, g0, g1}};
      while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        const double step = std::arg(n.gb / n.ga);
        if (std::abs(step) < kPi / 2.0) {
          total += step;
          continue;
        }
        if (std::abs(n.zb - n.za) < min_step)
          throw BoundaryError("winding_number: phase jump unresolved; zero near boundary");
        const Complex zm = 0.5 * (n.za + n.zb);
        const Complex gm = eval(zm);
        // right half pushed first so the left half is consumed first
        stack.push_back({zm, n.zb, gm, n.gb});
        stack.push_back({n.za, zm, n.ga, gm});
      }
      z0 = z1;
      g0 = g1;
    }
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6)
    throw BoundaryError("winding_number: total phase is not a multiple of 2 pi");
  trace.winding = static_cast<int>(rounded);
  return trace;
}

int winding_number(const ComplexFn& g, const Rect& rect, double max_step) {
  return winding_trace(g, rect, max_step).winding;
}

}  // namespace pentadgf
