#include <cmath>
#include <random>

#include "doctest.h"
#include "pentadgf/kernel.hpp"
#include "pentadgf/specialnum.hpp"

using namespace pentadgf;

TEST_SUITE("specialnum") {

TEST_CASE("bernoulli table") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  for (unsigned n = 3; n < 60; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli against the generating function") {
  // x/(1 - e^{-x}) at x = 0.5, partial sum through n = 30
  double sum = 0.0, fact = 1.0;
  for (unsigned n = 0; n <= 30; ++n) {
    if (n > 0) fact *= n;
    sum += bernoulli(n).get_d() * std::pow(0.5, n) / fact;
  }
  CHECK(sum == doctest::Approx(0.5 / (1.0 - std::exp(-0.5))).epsilon(1e-14));
}

TEST_CASE("glaisher G* table") {
  const int expected[] = {0, 0, 0, 1, 0, 5, 0, 49, 0, 809, 0};
  CHECK(glaisher_gstar(1) == Rational(1, 2));
  for (unsigned n = 0; n <= 10; ++n)
    if (n != 1) CHECK(glaisher_gstar(n) == expected[n]);
  CHECK(glaisher_g(1) == 1);
  CHECK(glaisher_g(3) == 49);
  CHECK(glaisher_g(4) == 809);
  CHECK_THROWS_AS(glaisher_g(0), DomainError);
}

TEST_CASE("glaisher G* parity and sign") {
  for (unsigned n = 0; n <= 40; ++n) {
    if (n % 2 == 0) CHECK(glaisher_gstar(n) == 0);
    CHECK(sgn(glaisher_gstar(n)) >= 0);
  }
}

TEST_CASE("glaisher G* against the generating function") {
  // 3x / (2 + 4 cos x) at x = 0.3
  const double x = 0.3;
  double sum = 0.0, fact = 1.0;
  for (unsigned n = 0; n <= 31; ++n) {
    if (n > 0) fact *= n;
    sum += glaisher_gstar(n).get_d() * std::pow(x, n) / fact;
  }
  CHECK(sum == doctest::Approx(3 * x / (2 + 4 * std::cos(x))).epsilon(1e-14));
}

TEST_CASE("g coefficients") {
  CHECK(g_coeff(0) == AlgebraicValue(-1, 0));
  CHECK(g_coeff(1) == AlgebraicValue(0, Rational(-2, 3)));  // -2/sqrt3
  CHECK(g_coeff(2) == AlgebraicValue(1, 0));
  for (unsigned j = 0; j <= 20; ++j) {
    const AlgebraicValue g = g_coeff(j);
    if (j % 2 == 0)
      CHECK(sgn(g.root3) == 0);
    else
      CHECK(sgn(g.rat) == 0);
  }
}

TEST_CASE("g coefficients re-expand E") {
  // Taylor oracle: E(x) = sum g(n) x^n / n!
  const double x = 0.1;
  double sum = 0.0, fact = 1.0;
  for (unsigned n = 0; n <= 20; ++n) {
    if (n > 0) fact *= n;
    sum += g_coeff(n).to_double() * std::pow(x, n) / fact;
  }
  CHECK(sum == doctest::Approx(E(x).real()).epsilon(1e-12));
}

TEST_CASE("algebraic values") {
  const AlgebraicValue a(Rational(2, 4), Rational(-3, 9));
  CHECK(a.rat.get_den() == 2);
  CHECK(a.root3 == Rational(-1, 3));
  CHECK(a.to_string() == "1/2 - 1/3*sqrt(3)");
  CHECK(AlgebraicValue().to_string() == "0");
  const AlgebraicValue b(1, 1);
  CHECK((b * b) == AlgebraicValue(4, 2));  // (1 + sqrt3)^2
  CHECK((a + b - b) == a);
  CHECK(a.to_double() == doctest::Approx(0.5 - std::sqrt(3.0) / 3.0).epsilon(1e-15));
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  // C(-k, k-j) = (-1)^{k-j} C(2k-j-1, k-j)
  CHECK(binomial_negative(3, 2) == 6);
  CHECK(binomial_negative(2, 1) == -2);
  for (long k = 1; k <= 10; ++k)
    for (long j = 0; j <= k; ++j) {
      const BigInt sign = ((k - j) % 2 == 0) ? 1 : -1;
      CHECK(binomial_negative(k, k - j) == sign * binomial(2 * k - j - 1, k - j));
    }
}

TEST_CASE("coefficients a_n") {
  CHECK(coeff_a(0) == 1);
  CHECK(coeff_a(1) == -1);
  CHECK(coeff_a(2) == -1);
  CHECK(coeff_a(5) == 1);
  CHECK(coeff_a(7) == 1);
  CHECK(coeff_a(12) == -1);
  CHECK(coeff_a(15) == -1);
  CHECK(coeff_a(6) == 0);
  // no false positives far out: 24n + 1 a perfect square needs n pentagonal
  const std::uint64_t m = 1000000;
  CHECK(coeff_a(pentagonal_minus(m)) == 1);
  CHECK(coeff_a(pentagonal_plus(m)) == 1);
  CHECK(coeff_a(pentagonal_plus(m) + 1) == 0);
}

TEST_CASE("coefficient tables") {
  CHECK(coeff_table(1).values == std::vector<int>{1, -1});
  CHECK(coeff_table(2).values == std::vector<int>{1, -1, -1});
  CHECK(coeff_table(7).values == std::vector<int>{1, -1, -1, 0, 0, 1, 0, 1});
  CHECK(product_oracle_coeffs(1).values == std::vector<int>{1, -1});
  CHECK(product_oracle_coeffs(7).values == std::vector<int>{1, -1, -1, 0, 0, 1, 0, 1});
  CHECK(product_oracle_coeffs(15)[12] == -1);
}

TEST_CASE("table equals the expanded product through N = 2000") {
  CHECK(coeff_table(2000) == product_oracle_coeffs(2000));
}

TEST_CASE("nonzero positions are exactly the generalized pentagonal numbers") {
  const std::uint64_t N = 3000;
  const CoeffTable t = coeff_table(N);
  std::vector<bool> pent(N + 1, false);
  pent[0] = true;
  for (std::uint64_t m = 1; pentagonal_minus(m) <= N; ++m) {
    pent[pentagonal_minus(m)] = true;
    if (pentagonal_plus(m) <= N) pent[pentagonal_plus(m)] = true;
  }
  for (std::uint64_t n = 0; n <= N; ++n) CHECK((t[n] != 0) == pent[n]);
}

TEST_CASE("residues r(k)") {
  CHECK(residue_r(1) == 1);
  CHECK(residue_r(2) == 1);
  CHECK(residue_r(3) == 0);
  CHECK(residue_r(4) == -1);
  CHECK(residue_r(5) == -1);
  CHECK(residue_r(-2) == -1);
  for (long long k = -100; k <= 100; ++k) CHECK(residue_r(k) == residue_r(k + 6));
}

}  // TEST_SUITE
