#include "pentadgf/qfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pentadgf/kernel.hpp"

namespace pentadgf {

namespace {

constexpr Complex kI{0.0, 1.0};

// Largest magnitude exponent kept on a truncated Hankel edge.
constexpr double kEdgeDecay = 40.0;

void require_hankel_q(const QPoint& q) {
  const double a = std::abs(q.value());
  if (a > kMaxAbsQ) throw DomainError("phi: |q| above 0.95 is outside the validated range");
  if (a == 0.0) throw DomainError("phi_hankel: q = 0 has no logarithm; phi(0) = 1");
}

void require_tau(const TauPoint& tau) {
  if (tau.value().imag() < kMinImTau)
    throw DomainError("eta: Im(tau) below 0.05 is outside the validated range");
}

// First multiple of pi/3 beyond which log|integrand| on both horizontal
// edges stays below -kEdgeDecay.
double edge_truncation(double quad, double linear) {
  // log magnitude bound: -quad * x^2 + linear * x + const, quad > 0
  for (double x = kPi / 3.0;; x += kPi / 3.0) {
    if (-quad * x * x + linear * x < -kEdgeDecay && 2.0 * quad * x > linear) return x;
    if (x > 1e5) throw DomainError("hankel: integrand decays too slowly");
  }
}

}  // namespace

QPoint::QPoint(Complex q) : q_(q) {
  if (!(std::abs(q) < 1.0)) throw DomainError("QPoint: |q| must be < 1");
}

TauPoint::TauPoint(Complex tau) : tau_(tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("TauPoint: Im(tau) must be > 0");
}

Complex pentagonal_sum(Complex log_q, double tol, long* terms, bool include_constant) {
  const double decay = -log_q.real();
  if (!(decay > 0.0)) throw DomainError("pentagonal_sum: need |q| < 1");
  // |q|^{(3N^2 - N)/2} < tol / 10
  const double need = std::log(10.0 / tol) / decay;
  long N = 1;
  while ((3.0 * N * N - N) / 2.0 <= need) ++N;
  // smallest terms first
  Complex sum = 0.0;
  for (long n = N; n >= 1; --n) {
    const double minus = (3.0 * n * n - n) / 2.0;  // index n
    const double plus = (3.0 * n * n + n) / 2.0;   // index -n
    const Complex pair = std::exp(plus * log_q) + std::exp(minus * log_q);
    sum += (n % 2 == 0) ? pair : -pair;
  }
  if (include_constant) sum += 1.0;
  if (terms) *terms = 2 * N + 1;
  return sum;
}

EvalResult phi_series(const QPoint& q, double tol) {
  EvalResult r;
  r.method = Method::Series;
  if (q.value() == Complex(0.0, 0.0)) {
    r.value = 1.0;
    r.evaluations = 1;
    return r;
  }
  const Complex log_q = principal_log(q.value());
  r.value = pentagonal_sum(log_q, tol, &r.evaluations);
  r.err_estimate = std::max(tol / 10.0, 1e-16 * r.evaluations);
  return r;
}

Complex phi_product_oracle(const QPoint& q, int N) {
  const Complex qq = q.value();
  if (std::abs(qq) > kMaxAbsQ) throw DomainError("phi_product_oracle: |q| above 0.95");
  if (qq == Complex(0.0, 0.0)) return 1.0;
  if (N <= 0) N = static_cast<int>(std::ceil(std::log(1e-16) / std::log(std::abs(qq)))) + 1;
  Complex prod = 1.0, power = 1.0;
  for (int n = 1; n <= N; ++n) {
    power *= qq;
    prod *= 1.0 - power;
  }
  return prod;
}

Complex phi_hankel_integrand(Complex z, Complex log_q) {
  return f_prime_shift(z) * std::exp(u_prime_shift(z) * log_q);
}

Complex eta_hankel_integrand(Complex z, Complex tau) {
  return f_prime_shift(z) * std::exp(3.0 * kI * z * z * tau / kPi);
}

HankelRectSpec phi_hankel_spec(Complex log_q, double half_height) {
  HankelRectSpec spec;
  spec.half_height = half_height;
  // Re(u'(x +- i d) log q) <= -(3x^2/(2pi^2)) |ln|q|| + (3 x d / pi^2) |arg q| + const
  const double quad = 3.0 * std::abs(log_q.real()) / (2.0 * kPi * kPi);
  const double linear = 3.0 * half_height * std::abs(log_q.imag()) / (kPi * kPi);
  spec.truncation = edge_truncation(quad, linear) + kPi / 3.0;
  return spec;
}

HankelRectSpec eta_hankel_spec(Complex tau, double half_height) {
  HankelRectSpec spec;
  spec.half_height = half_height;
  // Re(3 i z^2 tau / pi) = -(3/pi) [(x^2 - d^2) Im tau +- 2 x d Re tau]
  const double quad = 3.0 * tau.imag() / kPi;
  const double linear = 6.0 * half_height * std::abs(tau.real()) / kPi;
  spec.truncation = edge_truncation(quad, linear) + kPi / 3.0;
  return spec;
}

EvalResult phi_hankel(const QPoint& q, double tol, double half_height) {
  require_hankel_q(q);
  if (!(half_height > 0.0) || half_height >= kPi / 6.0)
    throw DomainError("phi_hankel: half_height must lie in (0, pi/6)");
  const Complex log_q = principal_log(q.value());
  const HankelRectSpec spec = phi_hankel_spec(log_q, half_height);
  EvalResult r = integrate_hankel([log_q](Complex z) { return phi_hankel_integrand(z, log_q); },
                                  spec, tol);
  r.method = Method::Hankel;
  return r;
}

EvalResult eta_series(const TauPoint& tau, double tol) {
  require_tau(tau);
  const Complex t = tau.value();
  // |term n| = exp(-3 pi (n + 1/6)^2 Im tau); the slowest side is n = -N.
  const double need = std::log(10.0 / tol) / (3.0 * kPi * t.imag());
  long N = 1;
  while ((N - 1.0 / 6.0) * (N - 1.0 / 6.0) <= need) ++N;
  Complex sum = 0.0;
  for (long n = N; n >= 1; --n) {
    const double a = n + 1.0 / 6.0, b = -n + 1.0 / 6.0;
    const Complex pair = std::exp(3.0 * kPi * kI * a * a * t) + std::exp(3.0 * kPi * kI * b * b * t);
    sum += (n % 2 == 0) ? pair : -pair;
  }
  sum += std::exp(3.0 * kPi * kI * t / 36.0);
  EvalResult r;
  r.value = sum;
  r.method = Method::Series;
  r.evaluations = 2 * N + 1;
  r.err_estimate = std::max(tol / 10.0, 1e-16 * r.evaluations);
  return r;
}

EvalResult eta_hankel(const TauPoint& tau, double tol, double half_height) {
  require_tau(tau);
  if (!(half_height > 0.0) || half_height >= kPi / 6.0)
    throw DomainError("eta_hankel: half_height must lie in (0, pi/6)");
  const Complex t = tau.value();
  const HankelRectSpec spec = eta_hankel_spec(t, half_height);
  EvalResult r =
      integrate_hankel([t](Complex z) { return eta_hankel_integrand(z, t); }, spec, tol);
  r.method = Method::Hankel;
  return r;
}

}  // namespace pentadgf
