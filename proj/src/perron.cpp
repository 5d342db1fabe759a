#include "pentadgf/perron.hpp"

#include <cmath>

#include "pentadgf/specialnum.hpp"
#include "pentadgf/types.hpp"

namespace pentadgf {

double z_minus(double x) {
  if (!(x >= -1.0 / 24.0)) throw DomainError("z_minus: x must be >= -1/24");
  return kPi / 2.0 - (kPi / 6.0) * std::sqrt(1.0 + 24.0 * x);
}

PartialSumResult partial_sum(double x) {
  if (!std::isfinite(x) || !(x > 1.0)) throw DomainError("partial_sum: x must exceed 1");
  if (x == std::floor(x)) throw DomainError("partial_sum: x must not be an integer");
  if (x > 1e15) throw DomainError("partial_sum: x too large");
  PartialSumResult out;
  out.x = x;
  out.z_minus = z_minus(x);
  out.k_min = static_cast<long long>(std::ceil(3.0 * out.z_minus / kPi));
  // The pole at -m pi/3 lies inside |u| < x iff u(-m pi/3) = (m+1)(m+2)/6 < x.
  // The comparison is done on integers so no pole is miscounted near the curve.
  const auto fx = static_cast<long long>(std::floor(x));
  long long sum = 0;
  for (long long m = 1;; ++m) {
    const long long six_u = (m + 1) * (m + 2);
    if (six_u > 6 * fx) break;  // (m+1)(m+2)/6 <= floor(x) < x otherwise
    sum += residue_r(-m);
  }
  out.value = sum;
  return out;
}

long long partial_sum_oracle(double x) {
  if (!(x > 1.0) || x > 1e6) throw DomainError("partial_sum_oracle: x must lie in (1, 1e6]");
  long long sum = 0;
  for (std::uint64_t n = 1; static_cast<double>(n) < x; ++n) sum += coeff_a(n);
  return sum;
}

}  // namespace pentadgf
