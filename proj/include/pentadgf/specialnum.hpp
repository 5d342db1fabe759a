#pragma once

// Exact integer and rational sequences: Bernoulli numbers, the rescaled
// Glaisher numbers G*, the coefficients g(j) of the finite-sum formula,
// pentagonal-theorem coefficients a_n and the pole residues r(k).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pentadgf {

// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;
using BigInt = mpz_class;

// rat + root3 * sqrt(3), both parts exact.
struct AlgebraicValue {
  Rational rat{0};
  Rational root3{0};

  AlgebraicValue() = default;
  AlgebraicValue(Rational r, Rational s) : rat(std::move(r)), root3(std::move(s)) {
    rat.canonicalize();
    root3.canonicalize();
  }

  double to_double() const;
  bool is_zero() const { return sgn(rat) == 0 && sgn(root3) == 0; }
  // "p/q + r/s*sqrt(3)" with zero parts omitted; "0" when both vanish.
  std::string to_string() const;

  friend AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator*(const AlgebraicValue& a, const Rational& c);
  friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
    return a.rat == b.rat && a.root3 == b.root3;
  }
};

// a_0..a_N of the pentagonal-number expansion of prod (1 - q^n).
struct CoeffTable {
  std::vector<int> values;

  std::size_t size() const { return values.size(); }
  int operator[](std::size_t n) const { return values[n]; }
  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

// B_n from x / (1 - e^{-x}); B_1 = +1/2.
Rational bernoulli(unsigned n);

// Coefficients of 3x / (2 + 4 cos x) as an exponential generating function.
Rational glaisher_gstar(unsigned n);

// Glaisher's G(n) = G*(2n + 1). Requires n >= 1.
Rational glaisher_g(unsigned n);

// g(j): rational for even j, pure sqrt(3) multiple for odd j.
AlgebraicValue g_coeff(unsigned j);

// Exact binomial C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// Generalized binomial C(-n, k) = (-1)^k C(n + k - 1, k) for n >= 1, k >= 0.
BigInt binomial_negative(long n, long k);

// Pentagonal-theorem coefficient: (-1)^m at n = (3m^2 +- m)/2, 1 at n = 0.
int coeff_a(std::uint64_t n);

CoeffTable coeff_table(std::uint64_t N);

// Direct truncated expansion of prod_{n<=N} (1 - q^n); N <= 10^4.
CoeffTable product_oracle_coeffs(std::uint64_t N);

// Residue of F at k*pi/3: +1 for k = 1,2 (mod 6), -1 for k = 4,5, else 0.
int residue_r(long long k);

// (3m^2 - m)/2 and (3m^2 + m)/2.
inline std::uint64_t pentagonal_minus(std::uint64_t m) { return (3 * m * m - m) / 2; }
inline std::uint64_t pentagonal_plus(std::uint64_t m) { return (3 * m * m + m) / 2; }

}  // namespace pentadgf
