#include <cmath>

#include "doctest.h"
#include "pentadgf/dgf.hpp"
#include "pentadgf/zeros.hpp"

using namespace pentadgf;

TEST_SUITE("zeros") {

TEST_CASE("counting") {
  CHECK(count_zeros({0.0, 1.0, 3.4, 4.4}) == 1);
  CHECK(count_zeros({0.0, 1.0, 0.5, 3.0}) == 0);
  CHECK(count_zeros({0.1, 1.0, 3.4, 4.4}, Method::Series) == 1);
  CHECK_THROWS_AS(count_zeros({0.0, 1.0, 3.4, 4.4}, Method::Explicit), DomainError);
}

TEST_CASE("a zero on the edge is handled by perturbation") {
  // Im z_1 = 3.91652...: put the lower edge through the zero
  const ZeroRecord z1 = zeros_in_rect({0.5, 1.0, 3.5, 4.5}).at(0);
  CHECK(count_zeros({0.0, 1.0, z1.location.imag(), 5.0}) == 1);
}

TEST_CASE("first zeros") {
  const auto zs = find_zeros(8.0);
  REQUIRE(zs.size() == 3);
  const Complex expect[3] = {{0.88271, 3.91652}, {0.56199, 6.01547}, {0.35935, 7.89946}};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(zs[i].location - expect[i]) < 2e-4);
    CHECK(zs[i].residual <= 1e-7);
    CHECK(zs[i].series_residual <= 1e-7);
    CHECK(zs[i].winding_verified);
    CHECK(zs[i].converged);
    CHECK(zs[i].method == Method::Mellin);
  }
  const auto five = find_zeros(5.0);
  REQUIRE(five.size() == 1);
  CHECK(std::abs(five[0].location - expect[0]) < 2e-4);
}

TEST_CASE("conjugate zero") {
  const auto zs = find_zeros(4.5);
  REQUIRE(zs.size() == 1);
  CHECK(std::abs(d_mellin(std::conj(zs[0].location)).value) <= 1e-7);
  CHECK(std::abs(d_series(std::conj(zs[0].location)).value) <= 1e-7);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(find_zeros(23.0), DomainError);
  CHECK_THROWS_AS(find_zeros(0.0), DomainError);
}

}  // TEST_SUITE
