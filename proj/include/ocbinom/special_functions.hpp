#pragma once

#include <cstdint>
#include <span>

// Numerically stable building blocks for the evidence computations. All
// probability magnitudes are carried as natural logarithms end to end;
// linear-scale values materialize only at API boundaries. -inf is the
// logarithm of an exact zero.
namespace ocbinom {

// Shape parameters of the beta function Be(a,b); both must be positive.
struct BetaParams {
  double a;
  double b;
};

// ln Be(a,b). Throws std::domain_error unless a > 0 and b > 0.
double log_beta(const BetaParams& p);

// ln C(n,k). Throws std::domain_error unless 0 <= k <= n.
double log_binomial_coefficient(std::int64_t n, std::int64_t k);

// Regularized incomplete beta I_x(a,b), i.e. the Beta(a,b) CDF at x.
// Continued-fraction evaluation with the symmetry switch at
// x > (a+1)/(a+b+2); exactly 0 at x = 0 and exactly 1 at x = 1.
// Throws std::domain_error for x outside [0,1] or invalid shapes.
double regularized_incomplete_beta(double x, const BetaParams& p);

// ln I_x(a,b). Stays finite for x in (0,1] even where the linear value
// underflows double precision (e.g. deep tails at large integer shapes).
double log_regularized_incomplete_beta(double x, const BetaParams& p);

// ln sum_i exp(terms[i]), computed by shifting by the maximum term and
// summing in descending order. The result is invariant under permutation
// of the input. Returns -inf iff every term is -inf; a singleton input is
// returned unchanged. Throws std::invalid_argument on empty input.
double log_sum_exp(std::span<const double> terms);

}  // namespace ocbinom
