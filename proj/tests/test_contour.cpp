#include <cmath>

#include "doctest.h"
#include "pentadgf/contour.hpp"
#include "pentadgf/dgf.hpp"
#include "pentadgf/kernel.hpp"
#include "pentadgf/qfunc.hpp"

using namespace pentadgf;

namespace {

constexpr Complex kI{0.0, 1.0};

EvalResult line_for_power(double k, double tol, int order = 24) {
  VerticalLineSpec spec;
  spec.tail_log_scale = std::log(4.0 * kSqrt3);
  spec.panel_order = order;
  return integrate_vertical([k](Complex z) { return F(z) * principal_pow(u(z), -k); }, spec, tol);
}

// phi(q) for real q by the product, independent of the library.
double phi_product(double q) {
  double p = 1.0, qn = 1.0;
  for (int n = 1; n < 2000; ++n) {
    qn *= q;
    p *= 1.0 - qn;
  }
  return p;
}

}  // namespace

TEST_SUITE("contour") {

TEST_CASE("gauss-legendre rules") {
  const auto& r = gauss_legendre(24);
  double w = 0.0, x4 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    w += r.weights[i];
    x4 += r.weights[i] * std::pow(r.nodes[i], 4);
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x4 == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(&gauss_legendre(24) == &r);
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("vertical line reproduces D(1), D(2) and the Abel sum") {
  const double tol = 1e-12;
  // quoted values carry 11 truncated decimals
  CHECK(std::abs(line_for_power(1.0, tol).value - (-1.25519745693)) < tol + 1e-11);
  CHECK(std::abs(line_for_power(2.0, tol).value - (-1.19842171457)) < tol + 1e-11);
  CHECK(std::abs(line_for_power(0.0, tol).value - (-1.0)) < tol);
}

TEST_CASE("vertical line at real s has negligible imaginary part") {
  for (double k : {0.5, 1.0, 2.5, -1.5}) CHECK(std::abs(line_for_power(k, 1e-12).value.imag()) <= 1e-10);
}

TEST_CASE("refinement error shrinks with the starting order") {
  const EvalResult lo = line_for_power(1.5, 1e-30, 12);
  const EvalResult hi = line_for_power(1.5, 1e-30, 24);
  CHECK(hi.err_estimate <= lo.err_estimate);
}

TEST_CASE("vertical truncation") {
  VerticalLineSpec spec;
  const double y = vertical_truncation(spec, 1e-12);
  CHECK(std::exp(-y) < 1e-13);
  CHECK(std::exp(-(y - spec.panel_width)) >= 1e-13);
}

TEST_CASE("ill-conditioning flag at large imaginary part") {
  const Complex s(0.5, 20.0);
  const EvalResult r = dstar_integral(s, 1e-12);
  CHECK(r.ill_conditioned);
  CHECK_FALSE(dstar_integral(2.0, 1e-12).ill_conditioned);
}

TEST_CASE("hankel rectangle reproduces phi and eta") {
  const double q = 0.5;
  const Complex lq = std::log(q);
  const HankelRectSpec spec = phi_hankel_spec(lq, kPi / 12.0);
  const EvalResult r = integrate_hankel([lq](Complex z) { return phi_hankel_integrand(z, lq); }, spec, 1e-12);
  CHECK(std::abs(r.value - phi_product(q)) < 1e-10);

  const double small = 0.01;
  const Complex ls = std::log(small);
  const EvalResult rs = integrate_hankel([ls](Complex z) { return phi_hankel_integrand(z, ls); },
                                         phi_hankel_spec(ls, kPi / 12.0), 1e-12);
  CHECK(std::abs(rs.value - (1.0 - small - small * small)) < 1e-8);

  const Complex tau = kI;
  const EvalResult re = integrate_hankel([tau](Complex z) { return eta_hankel_integrand(z, tau); },
                                         eta_hankel_spec(tau, kPi / 12.0), 1e-12);
  CHECK(std::abs(re.value - std::exp(-kPi / 12.0) * phi_product(std::exp(-2.0 * kPi))) < 1e-10);
  CHECK(std::abs(re.value - 0.768225) < 1e-6);
}

TEST_CASE("hankel value does not depend on the half-height") {
  const Complex lq = std::log(0.5);
  double vals[3];
  int i = 0;
  for (double d : {kPi / 16.0, kPi / 12.0, kPi / 8.0}) {
    const EvalResult r = integrate_hankel([lq](Complex z) { return phi_hankel_integrand(z, lq); },
                                          phi_hankel_spec(lq, d), 1e-12);
    vals[i++] = r.value.real();
  }
  CHECK(std::abs(vals[0] - vals[1]) < 1e-9);
  CHECK(std::abs(vals[1] - vals[2]) < 1e-9);
}

TEST_CASE("hankel spec validation") {
  HankelRectSpec spec;
  spec.truncation = 10.0;
  spec.cap_abscissa = kPi / 6.0;
  CHECK_THROWS_AS(integrate_hankel([](Complex) { return Complex(0.0); }, spec, 1e-12), DomainError);
}

TEST_CASE("circle residues") {
  CircleSpec unit;
  CHECK(std::abs(integrate_circle([](Complex z) { return 1.0 / z; }, unit).value - 1.0) < 1e-13);
  CircleSpec c1{kPi / 3.0, kPi / 6.0};
  CHECK(std::abs(integrate_circle([](Complex z) { return F(z); }, c1).value - 1.0) < 1e-12);
  CircleSpec c4{4.0 * kPi / 3.0, kPi / 6.0};
  CHECK(std::abs(integrate_circle([](Complex z) { return F(z); }, c4).value + 1.0) < 1e-12);
}

TEST_CASE("circle value independent of the radius") {
  auto f = [](Complex z) { return F(z) / u(z - 1.0); };
  const CircleSpec a{kPi / 3.0, 0.1}, b{kPi / 3.0, 0.2};
  CHECK(std::abs(integrate_circle(f, a).value - integrate_circle(f, b).value) < 1e-10);
}

TEST_CASE("winding numbers of D*") {
  const ComplexFn g = [](Complex s) { return d_mellin(s, 1e-9).value; };
  CHECK(winding_number(g, {0.0, 1.0, 3.4, 4.4}, 0.05) == 1);
  CHECK(winding_number(g, {0.0, 1.0, 0.5, 3.0}, 0.05) == 0);
  CHECK(winding_number(g, {0.0, 1.0, 5.5, 8.5}, 0.05) == 2);
}

TEST_CASE("winding of simple polynomials and boundary zeros") {
  const ComplexFn g = [](Complex z) { return (z - 0.25) * (z + 0.25) * (z - 3.0); };
  CHECK(winding_number(g, {-1.0, 1.0, -1.0, 1.0}, 0.1) == 2);
  const WindingTrace t = winding_trace(g, {-1.0, 1.0, -1.0, 1.0}, 0.1);
  CHECK(t.min_abs > 0.0);
  CHECK(t.evaluations >= 80);
  CHECK_THROWS_AS(winding_number([](Complex z) { return z - 1.0; }, {-1.0, 1.0, -1.0, 1.0}, 0.1),
                  BoundaryError);
}

}  // TEST_SUITE
