#pragma once

// Euler function phi(q) = prod (1 - q^n) and Dedekind eta(tau) = q^{1/24} phi(q),
// q = e^{2 pi i tau}, by the pentagonal residue series, by quadrature of
// F'(z) q^{u'(z)} on a Hankel rectangle, and by the truncated product.

#include "pentadgf/contour.hpp"
#include "pentadgf/types.hpp"

namespace pentadgf {

class QPoint {
 public:
  explicit QPoint(Complex q);
  Complex value() const { return q_; }

 private:
  Complex q_;
};

class TauPoint {
 public:
  explicit TauPoint(Complex tau);
  Complex value() const { return tau_; }

 private:
  Complex tau_;
};

// Domain guards for the quadrature and product routes.
inline constexpr double kMaxAbsQ = 0.95;
inline constexpr double kMinImTau = 0.05;

// sum_{n in Z} (-1)^n q^{(3n^2 - n)/2} with q = e^{log_q}, Re(log_q) < 0.
// Terms are formed as exp(p * log_q) so no power accumulates rounding.
// Without the constant the result is phi(q) - 1, free of cancellation.
Complex pentagonal_sum(Complex log_q, double tol, long* terms = nullptr,
                       bool include_constant = true);

EvalResult phi_series(const QPoint& q, double tol = 1e-15);

// prod_{n=1}^{N} (1 - q^n); N = 0 picks the smallest N with |q|^N < 1e-16.
Complex phi_product_oracle(const QPoint& q, int N = 0);

EvalResult phi_hankel(const QPoint& q, double tol = 1e-12, double half_height = kPi / 12.0);

EvalResult eta_series(const TauPoint& tau, double tol = 1e-15);

EvalResult eta_hankel(const TauPoint& tau, double tol = 1e-12, double half_height = kPi / 12.0);

// Integrands of the two Hankel representations.
Complex phi_hankel_integrand(Complex z, Complex log_q);
Complex eta_hankel_integrand(Complex z, Complex tau);

// Rectangle used by phi_hankel / eta_hankel for a given integrand decay.
HankelRectSpec phi_hankel_spec(Complex log_q, double half_height);
HankelRectSpec eta_hankel_spec(Complex tau, double half_height);

}  // namespace pentadgf
