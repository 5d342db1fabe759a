#include "pentadgf/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>

#include "pentadgf/dgf.hpp"

namespace pentadgf {

namespace {

// Only the phase matters on the winding contour.
constexpr double kWindingTol = 1e-9;
constexpr int kMaxNewton = 50;
constexpr int kMaxDepth = 8;
constexpr double kDedup = 1e-6;

Complex eval_with(Method m, Complex s, double tol) {
  switch (m) {
    case Method::Mellin: return d_mellin(s, tol).value;
    case Method::Series: return d_series(s, tol).value;
    case Method::Integral: return dstar_integral(s, tol).value;
    default: throw DomainError("count_zeros: evaluator must be mellin, series or integral");
  }
}

bool inside(const Rect& r, Complex z, double pad) {
  return z.real() >= r.re_lo - pad && z.real() <= r.re_hi + pad && z.imag() >= r.im_lo - pad &&
         z.imag() <= r.im_hi + pad;
}

struct NewtonOutcome {
  Complex z;
  bool converged;
};

// Newton iteration kept inside `box`; leaving it counts as divergence.
NewtonOutcome newton(Complex z, double tol, const Rect& box) {
  try {
    for (int it = 0; it < kMaxNewton; ++it) {
      const Complex f = d_mellin(z, kDefaultTol).value;
      const Complex df = dstar_derivative(z, kDefaultTol, Method::Mellin).value;
      if (df == Complex(0.0, 0.0) || !std::isfinite(std::abs(df))) return {z, false};
      const Complex step = f / df;
      const Complex next = z - step;
      if (!std::isfinite(std::abs(next)) || !inside(box, next, 0.0)) return {z, false};
      z = next;
      if (std::abs(step) < tol) return {z, true};
    }
  } catch (const Error&) {
  }
  return {z, false};
}

Rect padded(const Rect& r, double pad) {
  return {r.re_lo - pad, r.re_hi + pad, r.im_lo - pad, r.im_hi + pad};
}

// Repeated 3x3 grid search for the minimum of |D*|, clamped to r.
Complex grid_minimum(const Rect& r) {
  Rect w = r;
  Complex best{};
  for (int round = 0; round < 12; ++round) {
    double best_abs = std::numeric_limits<double>::infinity();
    const double hx = (w.re_hi - w.re_lo) / 2.0, hy = (w.im_hi - w.im_lo) / 2.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Complex z(w.re_lo + i * hx, w.im_lo + j * hy);
        const double a = std::abs(d_mellin(z, kDefaultTol).value);
        if (a < best_abs) {
          best_abs = a;
          best = z;
        }
      }
    const double cx = std::clamp(best.real(), r.re_lo + hx / 2.0, r.re_hi - hx / 2.0);
    const double cy = std::clamp(best.imag(), r.im_lo + hy / 2.0, r.im_hi - hy / 2.0);
    w = {cx - hx / 2.0, cx + hx / 2.0, cy - hy / 2.0, cy + hy / 2.0};
  }
  return best;
}

std::array<Rect, 4> quadrants(const Rect& r) {
  const double mx = 0.5 * (r.re_lo + r.re_hi), my = 0.5 * (r.im_lo + r.im_hi);
  return {Rect{r.re_lo, mx, r.im_lo, my}, Rect{mx, r.re_hi, r.im_lo, my},
          Rect{r.re_lo, mx, my, r.im_hi}, Rect{mx, r.re_hi, my, r.im_hi}};
}

ZeroRecord finish(Complex z, bool converged, bool verified) {
  ZeroRecord rec;
  rec.location = z;
  rec.converged = converged;
  rec.winding_verified = verified;
  rec.method = Method::Mellin;
  rec.residual = std::abs(d_mellin(z, kDefaultTol).value);
  rec.series_residual = z.real() > 0.0 ? std::abs(d_series(z, 1e-13).value)
                                       : std::numeric_limits<double>::quiet_NaN();
  return rec;
}

// r holds exactly one zero. Newton from the centre, then from the grid
// minimum; failing both, the quadrant holding the zero is located by the
// argument principle and the procedure repeats there.
ZeroRecord refine(const Rect& r, double tol, int depth) {
  const Rect box = padded(r, 0.5);
  const Complex center(0.5 * (r.re_lo + r.re_hi), 0.5 * (r.im_lo + r.im_hi));
  NewtonOutcome out = newton(center, tol, box);
  if (out.converged && inside(r, out.z, 0.0)) return finish(out.z, true, true);
  const Complex seed = grid_minimum(r);
  out = newton(seed, tol, box);
  if (out.converged && inside(r, out.z, 0.0)) return finish(out.z, true, true);
  if (depth < kMaxDepth) {
    for (const Rect& q : quadrants(r)) {
      int c = 0;
      try {
        c = count_zeros(q);
      } catch (const BoundaryError&) {
        continue;
      }
      if (c == 1) return refine(q, tol, depth + 1);
    }
  }
  return finish(seed, false, false);
}

void search(const Rect& r, int count, double tol, int depth, std::vector<ZeroRecord>& out) {
  if (count <= 0) return;
  if (count == 1 || depth >= kMaxDepth) {
    ZeroRecord rec = refine(r, tol, depth);
    if (count > 1) rec.winding_verified = false;
    out.push_back(rec);
    return;
  }
  for (const Rect& p : quadrants(r)) search(p, count_zeros(p), tol, depth + 1, out);
}

std::vector<ZeroRecord> canonical(std::vector<ZeroRecord> all) {
  std::sort(all.begin(), all.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    return a.location.real() < b.location.real();
  });
  std::vector<ZeroRecord> out;
  for (const ZeroRecord& z : all) {
    if (!out.empty() && std::abs(out.back().location - z.location) < kDedup) {
      if (z.residual < out.back().residual) out.back() = z;
      continue;
    }
    out.push_back(z);
  }
  return out;
}

std::vector<ZeroRecord> scan_strip(double re_lo, double re_hi, double im_max, double tol) {
  if (!(im_max > 0.0) || im_max > kMaxZeroHeight)
    throw DomainError("find_zeros: im_max must lie in (0, 22]");
  std::vector<Rect> rects;
  for (double lo = 0.0; lo < im_max; lo += 1.0) rects.push_back({re_lo, re_hi, lo, std::min(lo + 1.0, im_max)});
  std::vector<std::future<std::vector<ZeroRecord>>> jobs;
  for (const Rect& r : rects)
    jobs.push_back(std::async(std::launch::async, [r, tol] {
      std::vector<ZeroRecord> found;
      search(r, count_zeros(r), tol, 0, found);
      return found;
    }));
  std::vector<ZeroRecord> all;
  for (auto& j : jobs) {
    auto part = j.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return canonical(std::move(all));
}

}  // namespace

int count_zeros(const Rect& rect, Method evaluator) {
  const ComplexFn g = [evaluator](Complex s) { return eval_with(evaluator, s, kWindingTol); };
  Rect r = rect;
  for (int attempt = 0;; ++attempt) {
    try {
      return winding_number(g, r, kWindingStep);
    } catch (const BoundaryError&) {
      if (attempt == 3)
        throw BoundaryError(
            "count_zeros: zero on or near the boundary after 3 perturbations; choose another "
            "rectangle");
      const double d = 2.5e-4 * (attempt + 1);
      r = {rect.re_lo - d, rect.re_hi + d, rect.im_lo - d, rect.im_hi + d};
    }
  }
}

std::vector<ZeroRecord> zeros_in_rect(const Rect& rect, double tol) {
  std::vector<ZeroRecord> found;
  search(rect, count_zeros(rect), tol, 0, found);
  return canonical(std::move(found));
}

std::vector<ZeroRecord> find_zeros(double im_max, double tol) {
  return scan_strip(0.0, 1.0, im_max, tol);
}

std::vector<ZeroRecord> find_margin_zeros(double im_max, double tol) {
  auto left = scan_strip(-0.2, 0.0, im_max, tol);
  auto right = scan_strip(1.0, 1.2, im_max, tol);
  left.insert(left.end(), right.begin(), right.end());
  return canonical(std::move(left));
}

}  // namespace pentadgf
