#pragma once

// Zeros of D*(s) in the critical strip by the argument principle and
// Newton refinement.

#include <vector>

#include "pentadgf/contour.hpp"
#include "pentadgf/types.hpp"

namespace pentadgf {

struct ZeroRecord {
  Complex location;
  double residual = 0.0;         // |D*(location)|, refinement method
  double series_residual = 0.0;  // |D*(location)| by the series route (NaN if Re <= 0)
  bool winding_verified = false; // inside a rectangle of winding number exactly 1
  bool converged = true;         // false: Newton failed, best grid point kept
  Method method = Method::Mellin;
};

// Largest height validated in double precision.
inline constexpr double kMaxZeroHeight = 22.0;

// Sampling step for the winding contour.
inline constexpr double kWindingStep = 0.05;

// Number of zeros of D* inside rect (Mellin, Series or Integral route).
// A zero on the boundary triggers up to three outward perturbations of the
// edges before a BoundaryError is raised.
int count_zeros(const Rect& rect, Method evaluator = Method::Mellin);

// Zeros with 0 <= Re s <= 1, 0 <= Im s <= im_max, sorted by Im.
std::vector<ZeroRecord> find_zeros(double im_max, double tol = 1e-12);

// Zeros in the margins -0.2 < Re s < 0 and 1 < Re s < 1.2 up to im_max.
std::vector<ZeroRecord> find_margin_zeros(double im_max, double tol = 1e-12);

// Zeros inside an arbitrary rectangle, sorted by Im then Re.
std::vector<ZeroRecord> zeros_in_rect(const Rect& rect, double tol = 1e-12);

}  // namespace pentadgf
