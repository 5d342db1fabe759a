#pragma once

// Extended-precision helpers kept out of the public headers: exact-to-double
// rounding of sums of AlgebraicValue * pi^j (MPFR), and the circle residue
// quadrature in 50- or 100-digit complex arithmetic (Boost.Multiprecision).

#include <utility>
#include <vector>

#include "pentadgf/specialnum.hpp"
#include "pentadgf/types.hpp"

namespace pentadgf::detail {

// sum_j coeffs[j] * pi^j, rounded to nearest double.
double pi_polynomial_to_double(const std::vector<AlgebraicValue>& coeffs);

// (1/2 pi i) of the circle integral of F(z) u(z)^{-k} around pi/3 and around
// 2 pi/3, radius pi/6, trapezoid rule doubled until stable.
std::pair<Complex, Complex> residue_circles(unsigned k);

// Largest k accepted by residue_circles.
inline constexpr unsigned kMaxResidueOrder = 60;

}  // namespace pentadgf::detail
