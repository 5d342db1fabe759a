#include "pentadgf/kernel.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pentadgf {

namespace {

constexpr Complex kI{0.0, 1.0};

[[noreturn]] void pole(const char* fn, Complex z) {
  throw PoleError(std::string(fn) + ": pole at (" + std::to_string(z.real()) + ", " +
                  std::to_string(z.imag()) + ")");
}

// Lanczos coefficients, g = 671/128, 14 terms.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

Complex log_gamma_right(Complex z) {
  Complex y = z;
  Complex tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Dirichlet eta(x) = sum (-1)^k (k+1)^{-x} by the Cohen-Rodriguez
// Villegas-Zagier alternating-series acceleration.
double dirichlet_eta(double x) {
  constexpr int n = 48;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(k + 1.0, -x);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

}  // namespace

double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (r == 0.5 || r == -0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0 || r == -1.0) return -1.0;
  return std::cos(kPi * r);
}

Complex sin_pi(Complex z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex F(Complex z) {
  // F is even; with w = e^{iz}, Im z >= 0, F = -2 sqrt3 w (1 + w^2) / (1 + w^2 + w^4),
  // which stays finite for any |Im z|.
  const Complex zz = z.imag() >= 0.0 ? z : -z;
  const Complex w = std::exp(kI * zz);
  const Complex w2 = w * w;
  const Complex den = 1.0 + w2 + w2 * w2;
  // 1 + 2 cos 2z = den / w^2
  if (std::abs(den) < kPoleThreshold * std::norm(w)) pole("F", z);
  return -2.0 * kSqrt3 * w * (1.0 + w2) / den;
}

Complex u(Complex z) {
  return (kPi - 3.0 * z) * (2.0 * kPi - 3.0 * z) / (6.0 * kPi * kPi);
}

Complex f_prime_shift(Complex z) {
  // 4 sqrt3 sin z / (1 - 2 cos 2z); odd. For Im z >= 0, w = e^{iz}:
  //   = 2 sqrt3 i w (w^2 - 1) / (w^4 - w^2 + 1).
  const bool flip = z.imag() < 0.0;
  const Complex zz = flip ? -z : z;
  const Complex w = std::exp(kI * zz);
  const Complex w2 = w * w;
  const Complex den = w2 * w2 - w2 + 1.0;
  // 1 - 2 cos 2z = -den / w^2
  if (std::abs(den) < kPoleThreshold * std::norm(w)) pole("f_prime_shift", z);
  const Complex v = 2.0 * kSqrt3 * kI * w * (w2 - 1.0) / den;
  return flip ? -v : v;
}

Complex u_prime_shift(Complex z) {
  return 3.0 * z * z / (2.0 * kPi * kPi) - 1.0 / 24.0;
}

Complex E(Complex t) {
  if (t == Complex(0.0, 0.0)) return -1.0;
  // Removable singularity: -1 - (2/sqrt3) t + t^2/2 + O(t^3).
  if (std::abs(t) < 1e-8) return -1.0 - (2.0 / kSqrt3) * t + 0.5 * t * t;
  const Complex den = std::sin(3.0 * t);
  if (std::abs(den) < kPoleThreshold) pole("E", t);
  return -(3.0 * t * std::cos(2.0 * t) + kSqrt3 * t * std::sin(2.0 * t)) / den;
}

Complex principal_log(Complex w) {
  if (w.imag() == 0.0 && w.real() < 0.0) return {std::log(-w.real()), kPi};
  return std::log(w);
}

Complex principal_pow(Complex w, Complex e) {
  if (w == Complex(0.0, 0.0)) {
    if (e.real() < 0.0 || (e.real() == 0.0 && e.imag() != 0.0))
      throw PoleError("principal_pow: zero base with non-positive exponent");
    if (e == Complex(0.0, 0.0)) return 1.0;
    return 0.0;
  }
  if (e == Complex(0.0, 0.0)) return 1.0;
  return std::exp(e * principal_log(w));
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) pole("log_gamma", z);
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
  return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) pole("gamma", z);
  if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
  return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
}

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
  return sin_pi(z) * std::exp(log_gamma_right(1.0 - z)) / kPi;
}

double zeta_real(double x) {
  if (x == 1.0) throw PoleError("zeta_real: pole at x = 1");
  if (x == 0.0) return -0.5;
  if (x > 0.0) {
    // zeta = eta / (1 - 2^{1-x})
    const double denom = -std::expm1((1.0 - x) * std::log(2.0));
    return dirichlet_eta(x) / denom;
  }
  const double reflected = zeta_real(1.0 - x);
  return std::pow(2.0, x) * std::pow(kPi, x - 1.0) * sin_pi(x / 2.0) * std::tgamma(1.0 - x) *
         reflected;
}

KernelFn kernel_fn(KernelTag tag) {
  switch (tag) {
    case KernelTag::F: return {tag, [](Complex z) { return F(z); }};
    case KernelTag::U: return {tag, [](Complex z) { return u(z); }};
    case KernelTag::FPrime: return {tag, [](Complex z) { return f_prime_shift(z); }};
    case KernelTag::UPrime: return {tag, [](Complex z) { return u_prime_shift(z); }};
    case KernelTag::E: return {tag, [](Complex t) { return E(t); }};
  }
  throw DomainError("kernel_fn: unknown tag");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Integral: return "integral";
    case Method::Series: return "series";
    case Method::Mellin: return "mellin";
    case Method::Explicit: return "explicit";
    case Method::ResidueOracle: return "residue_oracle";
    case Method::Asymptotic: return "asymptotic";
    case Method::Hankel: return "hankel";
    case Method::Product: return "product";
    case Method::Circle: return "circle";
    case Method::VerticalLine: return "vertical_line";
  }
  return "unknown";
}

}  // namespace pentadgf
