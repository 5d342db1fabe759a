#pragma once

// Closed-form scalar maps:
//   F(z)  = -4 sqrt(3) cos z / (1 + 2 cos 2z)      poles at k pi/3, k != 0 (mod 3)
//   u(z)  = (pi - 3z)(2pi - 3z) / (6 pi^2)         zeros at pi/3, 2pi/3
//   F'(z) = F(z + pi/2),  u'(z) = u(z + pi/2) = 3z^2/(2 pi^2) - 1/24
//   E(t)  = -(3t cos 2t + sqrt(3) t sin 2t) / sin 3t
// plus the principal power, complex Gamma and real zeta.

#include <functional>

#include "pentadgf/types.hpp"

namespace pentadgf {

// Denominator magnitude below which F, F' and E report a pole.
inline constexpr double kPoleThreshold = 1e-13;

Complex F(Complex z);
Complex u(Complex z);
Complex f_prime_shift(Complex z);
Complex u_prime_shift(Complex z);
Complex E(Complex t);

// exp(e * Log w), Log principal with Arg in (-pi, pi].
Complex principal_pow(Complex w, Complex e);

// Principal logarithm with Arg in (-pi, pi]; a signed-zero imaginary part
// on the negative real axis is mapped to +pi.
Complex principal_log(Complex w);

Complex gamma(Complex z);
Complex log_gamma(Complex z);
// 1 / Gamma(z); entire, exact zeros at nonpositive integers.
Complex rgamma(Complex z);

// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);

double zeta_real(double x);

enum class KernelTag { F, U, FPrime, UPrime, E };

struct KernelFn {
  KernelTag tag;
  std::function<Complex(Complex)> evaluator;

  Complex operator()(Complex z) const { return evaluator(z); }
};

KernelFn kernel_fn(KernelTag tag);

}  // namespace pentadgf
