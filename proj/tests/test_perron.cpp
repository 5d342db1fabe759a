#include <cmath>
#include <random>

#include "doctest.h"
#include "pentadgf/perron.hpp"
#include "pentadgf/specialnum.hpp"
#include "pentadgf/types.hpp"

using namespace pentadgf;

TEST_SUITE("perron") {

TEST_CASE("z_minus") {
  CHECK(z_minus(1.0) == doctest::Approx(-kPi / 3.0).epsilon(1e-15));
  CHECK(z_minus(0.0) == doctest::Approx(kPi / 3.0).epsilon(1e-15));
  CHECK(z_minus(2.5) == doctest::Approx(kPi / 2.0 - kPi / 6.0 * std::sqrt(61.0)).epsilon(1e-15));
  CHECK(std::abs(z_minus(2.5) - (-2.5186408)) < 1e-7);
  CHECK(z_minus(-1.0 / 24.0) == doctest::Approx(kPi / 2.0));
  CHECK_THROWS_AS(z_minus(-0.1), DomainError);
}

TEST_CASE("partial sums") {
  CHECK(partial_sum(1.5).value == -1);
  CHECK(partial_sum(2.5).value == -2);
  CHECK(partial_sum(6.5).value == -1);
  CHECK(partial_sum_oracle(1.5) == -1);
  CHECK(partial_sum_oracle(100.5) == 0);
  CHECK(partial_sum_oracle(93.0) == -1);
  CHECK_THROWS_AS(partial_sum(3.0), DomainError);
  CHECK_THROWS_AS(partial_sum(0.5), DomainError);
  CHECK_THROWS_AS(partial_sum_oracle(2e6), DomainError);
}

TEST_CASE("k_min is the smallest k with z_minus <= k pi / 3") {
  for (double x : {1.5, 2.5, 6.5, 40.25, 1234.5}) {
    const PartialSumResult r = partial_sum(x);
    CHECK(r.z_minus <= r.k_min * kPi / 3.0);
    CHECK(r.z_minus > (r.k_min - 1) * kPi / 3.0);
    // the summed poles are k_min <= k < 0
    long long s = 0;
    for (long long k = r.k_min; k < 0; ++k) s += residue_r(k);
    CHECK(s == r.value);
  }
}

TEST_CASE("oracle equivalence on random x") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> d(1.0, 2000.0);
  for (int i = 0; i < 500; ++i) {
    double x = d(rng);
    if (x == std::floor(x)) x += 0.5;
    CHECK(partial_sum(x).value == partial_sum_oracle(x));
  }
}

TEST_CASE("jumps at the generalized pentagonal numbers") {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    const long long expect = (m % 2 == 0) ? 1 : -1;
    for (std::uint64_t g : {pentagonal_minus(m), pentagonal_plus(m)}) {
      const double gd = double(g);
      const long long above = partial_sum(gd + 0.25).value;
      const long long below = gd - 0.25 > 1.0 ? partial_sum(gd - 0.25).value : 0;
      CHECK(above - below == expect);
    }
  }
}

TEST_CASE("bounded step function") {
  std::vector<std::uint64_t> pent;
  for (std::uint64_t m = 1; pentagonal_minus(m) <= 200; ++m) {
    pent.push_back(pentagonal_minus(m));
    pent.push_back(pentagonal_plus(m));
  }
  std::sort(pent.begin(), pent.end());
  for (std::size_t i = 0; i + 1 < pent.size() && pent[i + 1] <= 160; ++i) {
    const double a = double(pent[i]), b = double(pent[i + 1]);
    const double pts[3] = {a + 0.1 * (b - a), a + 0.5 * (b - a), a + 0.9 * (b - a)};
    long long first = 0;
    for (int j = 0; j < 3; ++j) {
      double x = pts[j];
      if (x == std::floor(x)) x += 0.01;
      const long long v = partial_sum(x).value;
      if (j == 0) first = v;
      CHECK(v == first);
      CHECK(std::llabs(v) <= 2);
    }
  }
}

}  // TEST_SUITE
