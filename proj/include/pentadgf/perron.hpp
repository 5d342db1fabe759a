#pragma once

// Partial sums S(x) = sum_{1 <= n < x} a_n from the poles of F enclosed
// between the line Re z = 0 and the level curve |u(z)| = x.

#include <cstdint>

namespace pentadgf {

struct PartialSumResult {
  double x = 0.0;
  long long value = 0;
  // Smallest integer k with z_-(x) <= k pi/3; poles k_min <= k < 0 are summed.
  long long k_min = 0;
  double z_minus = 0.0;
};

// Negative root of u(z) = x: pi/2 - (pi/6) sqrt(1 + 24 x). Needs x >= -1/24.
double z_minus(double x);

// x > 1, not an integer.
PartialSumResult partial_sum(double x);

// Direct summation of coeff_a; 1 < x <= 1e6.
long long partial_sum_oracle(double x);

}  // namespace pentadgf
