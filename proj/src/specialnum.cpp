#include "pentadgf/specialnum.hpp"
#include "pentadgf/types.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace pentadgf {

namespace {

// Memo table grown under a unique lock; readers of already computed
// entries take a shared lock.
class RationalMemo {
 public:
  template <class Extend>
  Rational get(unsigned n, Extend&& extend) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) values_.push_back(extend(values_));
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

RationalMemo& bernoulli_memo() {
  static RationalMemo memo;
  return memo;
}

RationalMemo& gstar_memo() {
  static RationalMemo memo;
  return memo;
}

// Standard recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 (B_1 = -1/2 variant).
Rational next_bernoulli_minus(const std::vector<Rational>& prev) {
  const unsigned m = static_cast<unsigned>(prev.size());
  if (m == 0) return Rational(1);
  if (m > 1 && m % 2 == 1) return Rational(0);
  Rational acc(0);
  for (unsigned k = 0; k < m; ++k) {
    if (sgn(prev[k]) == 0) continue;
    acc += Rational(binomial(m + 1, k)) * prev[k];
  }
  Rational b = -acc / Rational(m + 1);
  b.canonicalize();
  return b;
}

// (2 + 4 cos x) * E(x) = 3x, matched coefficientwise in x^n / n!:
//   6 G*(n) + 4 sum_{m>=1} (-1)^m C(n, 2m) G*(n - 2m) = 3 [n = 1].
Rational next_gstar(const std::vector<Rational>& prev) {
  const unsigned n = static_cast<unsigned>(prev.size());
  Rational acc(n == 1 ? 3 : 0);
  for (unsigned m = 1; 2 * m <= n; ++m) {
    Rational term = Rational(binomial(n, 2 * m)) * prev[n - 2 * m];
    if (m % 2 == 1)
      acc += 4 * term;
    else
      acc -= 4 * term;
  }
  Rational g = acc / 6;
  g.canonicalize();
  return g;
}

bool exact_sqrt(const BigInt& v, BigInt& root) {
  if (sgn(v) < 0) return false;
  root = sqrt(v);
  return root * root == v;
}

}  // namespace

double AlgebraicValue::to_double() const {
  return rat.get_d() + root3.get_d() * std::sqrt(3.0);
}

std::string AlgebraicValue::to_string() const {
  std::ostringstream os;
  const bool has_rat = sgn(rat) != 0;
  const bool has_root = sgn(root3) != 0;
  if (!has_rat && !has_root) return "0";
  if (has_rat) os << rat.get_str();
  if (has_root) {
    if (has_rat) os << (sgn(root3) > 0 ? " + " : " - ");
    else if (sgn(root3) < 0) os << "-";
    Rational mag = abs(root3);
    os << mag.get_str() << "*sqrt(3)";
  }
  return os.str();
}

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b) {
  return {a.rat + b.rat, a.root3 + b.root3};
}

AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b) {
  return {a.rat - b.rat, a.root3 - b.root3};
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  return {a.rat * b.rat + 3 * a.root3 * b.root3, a.rat * b.root3 + a.root3 * b.rat};
}

AlgebraicValue operator*(const AlgebraicValue& a, const Rational& c) {
  return {a.rat * c, a.root3 * c};
}

BigInt binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt binomial_negative(long n, long k) {
  if (n < 1 || k < 0) throw DomainError("binomial_negative: need n >= 1, k >= 0");
  BigInt r = binomial(n + k - 1, k);
  return (k % 2 == 0) ? r : BigInt(-r);
}

Rational bernoulli(unsigned n) {
  Rational b = bernoulli_memo().get(n, next_bernoulli_minus);
  if (n == 1) b = -b;
  return b;
}

Rational glaisher_gstar(unsigned n) { return gstar_memo().get(n, next_gstar); }

Rational glaisher_g(unsigned n) {
  if (n < 1) throw DomainError("glaisher_g: n must be >= 1");
  return glaisher_gstar(2 * n + 1);
}

AlgebraicValue g_coeff(unsigned j) {
  BigInt two_j, three_j;
  mpz_ui_pow_ui(two_j.get_mpz_t(), 2, j);
  mpz_ui_pow_ui(three_j.get_mpz_t(), 3, j);
  if (j % 2 == 0) {
    // -(1/2) (-1)^{j/2} (2^j - 2)(3^j - 3) B_j
    Rational v = Rational((two_j - 2) * (three_j - 3)) * bernoulli(j) / 2;
    if ((j / 2) % 2 == 0) v = -v;
    return {v, Rational(0)};
  }
  // -(1/sqrt(3)) (2^j + 2) G*(j) = -(sqrt(3)/3) (2^j + 2) G*(j)
  Rational w = -Rational(two_j + 2) * glaisher_gstar(j) / 3;
  return {Rational(0), w};
}

int coeff_a(std::uint64_t n) {
  if (n == 0) return 1;
  // n = (3m^2 +- m)/2  <=>  24n + 1 = (6m -+ 1)^2
  const BigInt disc = BigInt(24) * BigInt(std::to_string(n)) + 1;
  BigInt root;
  if (!exact_sqrt(disc, root)) return 0;
  // root = 6m - 1 (for the minus branch) or 6m + 1 (plus branch)
  BigInt m;
  if (root % 6 == 1) {
    m = (root - 1) / 6;
  } else if (root % 6 == 5) {
    m = (root + 1) / 6;
  } else {
    return 0;
  }
  if (m < 1) return 0;
  return (m % 2 == 0) ? 1 : -1;
}

CoeffTable coeff_table(std::uint64_t N) {
  if (N < 1) throw DomainError("coeff_table: N must be >= 1");
  CoeffTable t;
  t.values.assign(N + 1, 0);
  t.values[0] = 1;
  for (std::uint64_t m = 1; pentagonal_minus(m) <= N; ++m) {
    const int sign = (m % 2 == 0) ? 1 : -1;
    t.values[pentagonal_minus(m)] = sign;
    if (pentagonal_plus(m) <= N) t.values[pentagonal_plus(m)] = sign;
  }
  return t;
}

CoeffTable product_oracle_coeffs(std::uint64_t N) {
  if (N < 1 || N > 10000) throw DomainError("product_oracle_coeffs: need 1 <= N <= 10^4");
  // Partial products have coefficients far beyond 64 bits before the
  // cancellation completes, hence big integers.
  std::vector<BigInt> poly(N + 1, 0);
  poly[0] = 1;
  // Multiply by (1 - q^n) in place, highest degree first.
  for (std::uint64_t n = 1; n <= N; ++n)
    for (std::uint64_t d = N; d >= n; --d) poly[d] -= poly[d - n];
  CoeffTable t;
  t.values.reserve(N + 1);
  for (const auto& c : poly) {
    if (!c.fits_sint_p()) throw std::overflow_error("product_oracle_coeffs: coefficient out of int range");
    t.values.push_back(static_cast<int>(c.get_si()));
  }
  return t;
}

int residue_r(long long k) {
  const long long r = ((k % 6) + 6) % 6;
  if (r == 1 || r == 2) return 1;
  if (r == 4 || r == 5) return -1;
  return 0;
}

}  // namespace pentadgf
