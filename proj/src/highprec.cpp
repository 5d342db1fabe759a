#include "highprec.hpp"

#include <mpfr.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>

#include "pentadgf/contour.hpp"

namespace pentadgf::detail {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

long log2_magnitude(const Rational& q) {
  if (sgn(q) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + 1;
}

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Cplx50 = boost::multiprecision::cpp_complex_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;
using Cplx100 = boost::multiprecision::cpp_complex_100;

// Orders up to this use 50 digits; |u|^{-k} on the circle is about 24^k.
constexpr unsigned kFiftyDigitMaxOrder = 20;

template <class Real, class Cplx>
Cplx circle_residue(unsigned k, int third, const Real& stop) {
  const Real pi = boost::math::constants::pi<Real>();
  const Real sqrt3 = boost::multiprecision::sqrt(Real(3));
  const Real radius = pi / 6;
  const Real two_pi = 2 * pi;
  const Real six_pi2 = Real(6) * pi * pi;
  auto integrand = [&](const Cplx& z) {
    const Cplx c = cos(z);
    // F = -4 sqrt3 cos z / (1 + 2 cos 2z), cos 2z = 2 cos^2 z - 1
    const Cplx f = Real(-4) * sqrt3 * c / (Real(4) * c * c - Real(1));
    const Cplx u = (pi - Real(3) * z) * (Real(2) * pi - Real(3) * z) / six_pi2;
    return f / pow(u, static_cast<int>(k));
  };
  const Cplx center(Real(third) * pi / 3, Real(0));
  // Neighbouring singularity at distance pi/3: error ~ 2^{-N}. Each
  // doubling only evaluates the new midpoint nodes.
  Cplx prev = circle_trapezoid(integrand, center, radius, 64, two_pi);
  for (int n = 64; n <= 1024; n *= 2) {
    const Cplx mid = circle_trapezoid(integrand, center, radius, n, two_pi, pi / Real(n));
    const Cplx cur = (prev + mid) / Real(2);
    if (abs(cur - prev) < stop * (Real(1) + abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

template <class Real, class Cplx>
std::pair<Complex, Complex> both_circles(unsigned k, const Real& stop) {
  auto to_double = [](const Cplx& c) {
    return Complex(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  };
  return {to_double(circle_residue<Real, Cplx>(k, 1, stop)),
          to_double(circle_residue<Real, Cplx>(k, 2, stop))};
}

}  // namespace

double pi_polynomial_to_double(const std::vector<AlgebraicValue>& coeffs) {
  long max_bits = 0;
  for (const auto& c : coeffs)
    max_bits = std::max({max_bits, log2_magnitude(c.rat), log2_magnitude(c.root3)});
  // powers of pi up to pi^k add about 1.7 bits per degree
  const mpfr_prec_t prec = 128 + max_bits + 2 * static_cast<long>(coeffs.size());
  MpfrValue sum(prec), pi(prec), pow_pi(prec), sqrt3(prec), term(prec), part(prec);
  mpfr_set_zero(sum.get(), 1);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_ui(pow_pi.get(), 1, MPFR_RNDN);
  mpfr_sqrt_ui(sqrt3.get(), 3, MPFR_RNDN);
  for (const auto& c : coeffs) {
    mpfr_set_q(term.get(), c.root3.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), sqrt3.get(), MPFR_RNDN);
    mpfr_set_q(part.get(), c.rat.get_mpq_t(), MPFR_RNDN);
    mpfr_add(term.get(), term.get(), part.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), pow_pi.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_mul(pow_pi.get(), pow_pi.get(), pi.get(), MPFR_RNDN);
  }
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

std::pair<Complex, Complex> residue_circles(unsigned k) {
  if (k < 1 || k > kMaxResidueOrder) throw DomainError("residue oracle: k must lie in [1, 60]");
  if (k <= kFiftyDigitMaxOrder) return both_circles<Real50, Cplx50>(k, Real50("1e-20"));
  return both_circles<Real100, Cplx100>(k, Real100("1e-30"));
}

}  // namespace pentadgf::detail
