#include "pentadgf/dgf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "highprec.hpp"
#include "pentadgf/contour.hpp"
#include "pentadgf/kernel.hpp"
#include "pentadgf/qfunc.hpp"

namespace pentadgf {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// Bromwich line placement. Moving the line from c = 0 to c = -(2m+1) pi/6
// crosses the poles at -pi/3, ..., -m pi/3, whose residue terms
// r(-k) u(-k pi/3)^{-s} are then added back.
struct LinePlacement {
  double abscissa;
  int peeled;
};

LinePlacement line_for(Complex s) {
  if (s.real() > kPeelThreshold) return {-kPi / 2.0, 1};
  return {0.0, 0};
}

Complex peeled_terms(Complex s, int m, bool derivative) {
  Complex acc = 0.0;
  for (int k = 1; k <= m; ++k) {
    const int r = residue_r(-k);
    if (r == 0) continue;
    const double base = (k + 1.0) * (k + 2.0) / 6.0;  // u(-k pi/3)
    const double lb = std::log(base);
    const Complex term = double(r) * std::exp(-s * lb);
    acc += derivative ? -lb * term : term;
  }
  return acc;
}

VerticalLineSpec line_spec(Complex s, LinePlacement place, bool derivative) {
  VerticalLineSpec spec;
  spec.abscissa = place.abscissa;
  // |u^{-s}| <= |u|^{-Re s} e^{pi |Im s|}; |F(c + iy)| <= ~4 sqrt3 e^{-|y|}
  spec.tail_power = std::max(0.0, -s.real()) + (derivative ? 0.5 : 0.0);
  spec.tail_log_scale = kPi * std::abs(s.imag()) + std::log(4.0 * kSqrt3);
  return spec;
}

// ---------------------------------------------------------------------------
// Pentagonal block m: p1^{-s} + p2^{-s}, p1 = (3m^2 - m)/2, p2 = (3m^2 + m)/2.
Complex pentagonal_block(Complex s, std::uint64_t m) {
  const double p1 = static_cast<double>(pentagonal_minus(m));
  const double p2 = static_cast<double>(pentagonal_plus(m));
  return std::exp(-s * std::log(p1)) + std::exp(-s * std::log(p2));
}

// Cohen-Rodriguez Villegas-Zagier: sum_{k>=0} (-1)^k a_k from a_0..a_{n-1}.
Complex cvz_sum(const std::vector<Complex>& a, int n, double* l1) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d;
  Complex sum = 0.0;
  double mag = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * a[k];
    mag += std::abs(c * a[k]);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  if (l1) *l1 = mag / d;
  return sum / d;
}

// ---------------------------------------------------------------------------
// Mellin route. With t = e^{i theta} r, theta of the sign of Im s,
//   Gamma(s) D(s) = e^{i theta s} int_0^inf (phi(e^{-e^{i theta} r}) - 1) r^{s-1} dr
// and splitting at r = 1 with int_0^1 -r^{s-1} dr = -1/s gives the entire form
//   D(s) = e^{i theta s}/Gamma(s) [I_0 + I_1] - e^{i theta s}/Gamma(s+1),
//   I_0 = int_0^1 phi(...) r^{s-1} dr,   I_1 = int_1^inf (phi(...) - 1) r^{s-1} dr.
// Rotating towards the imaginary axis removes the e^{pi |Im s|/2}
// cancellation that the real-axis integral suffers at large |Im s|.
constexpr double kMellinMaxAngle = kPi / 2.0 - 0.25;
constexpr double kPhiTol = 1e-17;

double mellin_angle(double im_s) {
  return std::copysign(kMellinMaxAngle * std::min(1.0, std::abs(im_s) / 6.0), im_s);
}

struct MellinParts {
  Complex prefactor;   // e^{i theta s} / Gamma(s)
  Complex constant;    // e^{i theta s} / Gamma(s+1)
  EvalResult inner;    // I_0 on v = log r in [v_min, 0]
  EvalResult outer;    // I_1 on r in [1, R]
};

MellinParts mellin_parts(Complex s, double tol) {
  const double theta = mellin_angle(s.imag());
  const Complex rho = std::polar(1.0, theta);
  const double cos_t = std::cos(theta);
  const double sigma = s.real();
  MellinParts parts;
  const Complex phase = std::exp(kI * theta * s);
  parts.prefactor = phase * rgamma(s);
  parts.constant = phase * rgamma(s + 1.0);
  const double scale = std::max(1.0, std::abs(parts.prefactor));
  const double part_tol = tol / (4.0 * scale);

  // |phi(e^{-t})| ~ sqrt(2 pi/|t|) exp(-pi^2 Re(1/t) / 6), Re(1/t) = cos(theta)/r
  double r_min = 1.0;
  while (true) {
    const double bound = std::sqrt(2.0 * kPi / r_min) *
                         std::exp(-kPi * kPi * cos_t / (6.0 * r_min)) * std::pow(r_min, sigma);
    if (bound < part_tol * 1e-3 || r_min < 1e-6) break;
    r_min *= 0.9;
  }
  const double v_min = std::log(r_min);
  const int inner_panels = std::max(1, static_cast<int>(std::ceil(-v_min / 0.25)));
  parts.inner = integrate_interval(
      [&](Complex vv) {
        const double v = vv.real();
        const Complex log_q = -rho * std::exp(v);
        return pentagonal_sum(log_q, kPhiTol) * std::exp(s * v);
      },
      v_min, 0.0, inner_panels, part_tol);

  // |phi - 1| <= ~1.1 e^{-r cos theta}
  double r_max = 2.0;
  while (1.1 * std::exp(-r_max * cos_t) * std::pow(r_max, sigma - 1.0) >= part_tol * 1e-3)
    r_max += 1.0;
  const int outer_panels = static_cast<int>(std::ceil(r_max - 1.0));
  parts.outer = integrate_interval(
      [&](Complex rr) {
        const double r = rr.real();
        const Complex log_q = -rho * r;
        return pentagonal_sum(log_q, kPhiTol, nullptr, false) * std::exp((s - 1.0) * std::log(r));
      },
      1.0, 1.0 + outer_panels, outer_panels, part_tol);
  return parts;
}

// Fourth-order symmetric difference for a holomorphic f.
template <class Eval>
EvalResult holomorphic_derivative(Eval&& f, Complex s, double h, Method tag) {
  const EvalResult a = f(s + h), b = f(s - h), c = f(s + kI * h), d = f(s - kI * h);
  EvalResult r;
  r.value = (a.value - b.value - kI * (c.value - d.value)) / (4.0 * h);
  r.err_estimate = (a.err_estimate + b.err_estimate + c.err_estimate + d.err_estimate) / (4.0 * h);
  r.method = tag;
  r.evaluations = a.evaluations + b.evaluations + c.evaluations + d.evaluations;
  return r;
}

std::string pi_power(unsigned j) {
  if (j == 0) return "";
  if (j == 1) return "*pi";
  return "*pi^" + std::to_string(j);
}

}  // namespace

bool is_positive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() >= 1.0 && s.real() == std::floor(s.real()) &&
         s.real() < 4294967296.0;
}

// ---------------------------------------------------------------------------

EvalResult dstar_integral(Complex s, double tol) {
  const LinePlacement place = line_for(s);
  const VerticalLineSpec spec = line_spec(s, place, false);
  EvalResult r = integrate_vertical(
      [s](Complex z) { return F(z) * principal_pow(u(z), -s); }, spec, tol);
  r.value += peeled_terms(s, place.peeled, false);
  r.method = Method::Integral;
  return r;
}

EvalResult d_series(Complex s, double tol) {
  if (!(s.real() > 0.0)) throw DomainError("d_series: requires Re(s) > 0");
  constexpr std::uint64_t kDirect = 8;
  constexpr int kMaxTerms = 384;
  Complex head = 0.0;
  double head_l1 = 0.0;
  for (std::uint64_t m = 1; m <= kDirect; ++m) {
    const Complex b = pentagonal_block(s, m);
    head += (m % 2 == 0) ? b : -b;
    head_l1 += std::abs(b);
  }
  // tail: sum_{k>=0} (-1)^{kDirect+1+k} block(kDirect + 1 + k)
  const double tail_sign = ((kDirect + 1) % 2 == 0) ? 1.0 : -1.0;
  std::vector<Complex> a;
  a.reserve(kMaxTerms);
  for (int k = 0; k < kMaxTerms; ++k) a.push_back(pentagonal_block(s, kDirect + 1 + k));
  double l1 = 0.0;
  Complex prev = cvz_sum(a, 32, &l1);
  EvalResult r;
  r.method = Method::Series;
  for (int n = 48; n <= kMaxTerms; n += 16) {
    const Complex cur = cvz_sum(a, n, &l1);
    const double diff = std::abs(cur - prev);
    const double floor = 16.0 * kEps * (head_l1 + l1);
    r.value = head + tail_sign * cur;
    r.err_estimate = std::max(diff, floor);
    r.evaluations = static_cast<long>(kDirect) + n;
    if (diff < tol || diff <= floor) return r;
    prev = cur;
  }
  throw ConvergenceError("d_series: acceleration did not converge", r);
}

EvalResult d_mellin(Complex s, double tol) {
  const MellinParts p = mellin_parts(s, tol);
  EvalResult r;
  r.method = Method::Mellin;
  r.value = p.prefactor * (p.inner.value + p.outer.value) - p.constant;
  r.err_estimate = std::abs(p.prefactor) * (p.inner.err_estimate + p.outer.err_estimate) +
                   kEps * std::abs(p.constant);
  r.evaluations = p.inner.evaluations + p.outer.evaluations;
  return r;
}

ExactDk d_explicit(unsigned k) {
  if (k < 1) throw DomainError("d_explicit: k must be >= 1");
  ExactDk out;
  out.k = k;
  out.pi_coeffs.resize(k + 1);
  BigInt factorial = 1;
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) factorial *= j;
    BigInt six_pow, two_pow;
    mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, k - j);
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, j);
    // 6^{k-j} C(-k, k-j) 2^j / j!
    Rational factor(six_pow * binomial_negative(k, k - j) * two_pow, factorial);
    factor.canonicalize();
    out.pi_coeffs[j] = g_coeff(j) * factor;
  }
  out.decimal = detail::pi_polynomial_to_double(out.pi_coeffs);
  return out;
}

std::string ExactDk::symbolic() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& unit) {
    if (sgn(c) == 0) return;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_only = mag == 1 && !unit.empty();
    if (unit_only)
      os << unit.substr(1);
    else
      os << mag.get_str() << unit;
  };
  for (unsigned j = 0; j < pi_coeffs.size(); ++j) {
    emit(pi_coeffs[j].rat, pi_power(j));
    emit(pi_coeffs[j].root3, "*sqrt(3)" + pi_power(j));
  }
  if (first) os << "0";
  return os.str();
}

double ExactDk::componentwise_double() const {
  double acc = 0.0, pw = 1.0;
  for (const auto& c : pi_coeffs) {
    acc += c.to_double() * pw;
    pw *= kPi;
  }
  return acc;
}

std::pair<Complex, Complex> residue_pair(unsigned k) {
  return detail::residue_circles(k);
}

EvalResult d_residue_oracle(unsigned k) {
  if (k < 1) throw DomainError("d_residue_oracle: k must be >= 1");
  const auto [at_third, at_two_thirds] = detail::residue_circles(k);
  const Complex a = -at_third, b = -at_two_thirds;
  if (std::abs(a - b) > 1e-9)
    throw ConsistencyError("d_residue_oracle: residues at pi/3 and 2pi/3 disagree");
  EvalResult r;
  r.value = a;
  r.err_estimate = std::max(std::abs(a - b), kEps * std::abs(a));
  r.method = Method::ResidueOracle;
  r.evaluations = 2;
  return r;
}

AsymptoticForms asymptotic_approx(double s) {
  if (!(s < 0.0)) throw DomainError("asymptotic_approx: requires real s < 0");
  AsymptoticForms f;
  f.zeta_form = 2.0 * kSqrt3 * std::pow(6.0, -s) * zeta_real(2.0 * s);
  f.gamma_form = std::pow(2.0, s + 1.0) * std::pow(3.0, 0.5 - s) * std::pow(kPi, 2.0 * s - 1.0) *
                 sin_pi(s) * std::tgamma(1.0 - 2.0 * s);
  return f;
}

EvalResult dstar_derivative(Complex s, double tol, std::optional<Method> route) {
  const Method m = route.value_or(
      (s.real() > 0.0 && std::abs(s.imag()) > 8.0) ? Method::Mellin : Method::Integral);
  if (m == Method::Integral) {
    const LinePlacement place = line_for(s);
    const VerticalLineSpec spec = line_spec(s, place, true);
    EvalResult r = integrate_vertical(
        [s](Complex z) {
          const Complex w = u(z);
          return -F(z) * principal_log(w) * principal_pow(w, -s);
        },
        spec, tol);
    r.value += peeled_terms(s, place.peeled, true);
    r.method = Method::Integral;
    return r;
  }
  if (m == Method::Mellin)
    return holomorphic_derivative([tol](Complex z) { return d_mellin(z, tol); }, s, 1e-3,
                                  Method::Mellin);
  throw DomainError("dstar_derivative: route must be integral or mellin");
}

EvalResult evaluate(Complex s, std::optional<Method> method, double tol) {
  if (!method) {
    if (is_positive_integer(s)) return evaluate(s, Method::Explicit, tol);
    if (s.real() > 0.0 && std::abs(s.imag()) > 8.0) return d_mellin(s, tol);
    EvalResult r = dstar_integral(s, tol);
    if (r.ill_conditioned) return d_mellin(s, tol);
    return r;
  }
  switch (*method) {
    case Method::Integral: return dstar_integral(s, tol);
    case Method::Series: return d_series(s, tol);
    case Method::Mellin: return d_mellin(s, tol);
    case Method::Explicit: {
      if (!is_positive_integer(s)) throw DomainError("explicit: s must be a positive integer");
      const ExactDk e = d_explicit(static_cast<unsigned>(s.real()));
      return {e.decimal, kEps * std::abs(e.decimal), Method::Explicit, 1};
    }
    case Method::ResidueOracle: {
      if (!is_positive_integer(s)) throw DomainError("residue oracle: s must be a positive integer");
      return d_residue_oracle(static_cast<unsigned>(s.real()));
    }
    case Method::Asymptotic: {
      if (s.imag() != 0.0) throw DomainError("asymptotic: s must be real");
      const AsymptoticForms f = asymptotic_approx(s.real());
      return {f.zeta_form, std::abs(f.zeta_form - f.gamma_form), Method::Asymptotic, 1};
    }
    default: break;
  }
  throw DomainError("evaluate: method not applicable to D*(s)");
}

}  // namespace pentadgf
