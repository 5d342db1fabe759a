#pragma once

// Evaluation routes for D(s) = sum_{n>=1} a_n n^{-s} and its entire
// continuation D*(s):
//   Integral   (1/2 pi i) int_{c-i inf}^{c+i inf} F(z) u(z)^{-s} dz
//   Series     pentagonal blocks, alternating-series acceleration, Re s > 0
//   Mellin     (1/Gamma(s)) int_0^inf (phi(e^{-t}) - 1) t^{s-1} dt, continued
//   Explicit   exact finite sum at positive integers
//   ResidueOracle  -Res(F u^{-k}, pi/3) by extended-precision circle quadrature

#include <optional>
#include <vector>

#include "pentadgf/specialnum.hpp"
#include "pentadgf/types.hpp"

namespace pentadgf {

struct ExactDk {
  unsigned k = 0;
  // D(k) = sum_j pi_coeffs[j] * pi^j
  std::vector<AlgebraicValue> pi_coeffs;
  // Correctly rounded value of the exact expression.
  double decimal = 0.0;

  // e.g. "6 - 4/3*sqrt(3)*pi"
  std::string symbolic() const;
  // sum_j pi_coeffs[j].to_double() * pi^j in plain double arithmetic.
  double componentwise_double() const;
};

// Default quadrature tolerance of the numeric routes.
inline constexpr double kDefaultTol = 1e-12;

// Re(s) above which the Bromwich line moves to c = -pi/2 with the pole at
// -pi/3 (term -1^{-s} = -1) added back explicitly.
inline constexpr double kPeelThreshold = 8.0;

EvalResult dstar_integral(Complex s, double tol = kDefaultTol);

// Requires Re(s) > 0.
EvalResult d_series(Complex s, double tol = 1e-13);

EvalResult d_mellin(Complex s, double tol = kDefaultTol);

ExactDk d_explicit(unsigned k);

// -Res(F u^{-k}, pi/3), checked against -Res(F u^{-k}, 2 pi/3) to 1e-9.
EvalResult d_residue_oracle(unsigned k);

// Both residues separately, for diagnostics; first is at pi/3.
std::pair<Complex, Complex> residue_pair(unsigned k);

struct AsymptoticForms {
  double zeta_form;   // 2 sqrt3 6^{-s} zeta(2s)
  double gamma_form;  // 2^{s+1} 3^{1/2-s} pi^{2s-1} sin(pi s) Gamma(1-2s)
};

// Leading behaviour of D*(s) as s -> -inf; real s < 0 only.
AsymptoticForms asymptotic_approx(double s);

// D*'(s). With no route given, the integrand is differentiated unless the
// line integral is ill-conditioned at s (Re s > 0, |Im s| > 8), in which
// case a fourth-order symmetric difference of the Mellin route is used.
EvalResult dstar_derivative(Complex s, double tol = kDefaultTol,
                            std::optional<Method> route = std::nullopt);

// Dispatch; std::nullopt is AUTO: Explicit for positive integers, Mellin
// for Re(s) > 0 with |Im s| > 8, Integral otherwise (falling back to
// Mellin when the line integral reports ill-conditioning).
EvalResult evaluate(Complex s, std::optional<Method> method = std::nullopt,
                    double tol = kDefaultTol);

// True when s is a positive integer (imaginary part exactly zero).
bool is_positive_integer(Complex s);

}  // namespace pentadgf
