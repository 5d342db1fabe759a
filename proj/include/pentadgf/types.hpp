#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pentadgf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;

// Tag carried by every numeric evaluation. The first six name the routes
// for the Dirichlet generating function; the rest tag q-function and raw
// contour evaluations.
enum class Method {
  Integral,
  Series,
  Mellin,
  Explicit,
  ResidueOracle,
  Asymptotic,
  Hankel,
  Product,
  Circle,
  VerticalLine,
};

std::string_view to_string(Method m);

struct EvalResult {
  Complex value{};
  // |difference of the last two refinement levels|, floored at the
  // rounding level implied by the magnitude of the summed terms.
  double err_estimate = 0.0;
  Method method = Method::Integral;
  long evaluations = 0;
  // Set when max|integrand| / |result| exceeds the conditioning limit.
  bool ill_conditioned = false;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument within the pole-proximity threshold of a singularity.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Refinement budget exhausted; carries the best value obtained.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, EvalResult best)
      : Error(what), best_(best) {}
  const EvalResult& best() const noexcept { return best_; }

 private:
  EvalResult best_;
};

// Two routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Argument-principle sampling hit a near-zero on the contour.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

}  // namespace pentadgf
