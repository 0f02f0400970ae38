#pragma once

#include "ocbinom/types.hpp"

// Bayes factor B01 for the order-constrained binomial model M0 (theta <= z)
// against the full model M1, via the encompassing-prior identity: B01 equals
// the ratio of posterior to prior mass of the full model on [0,z]. Weights
// assume equal prior model odds.
namespace ocbinom {

struct BayesResult {
  double log_b01;  // ln B01
  double w0;       // posterior model probability of the constrained model
};

// Uniform encompassing prior: ln B01 = ln I_z(y+1, n-y+1) - ln z.
BayesResult bayes_factor_uniform(const BinomialData& data, const Boundary& boundary);

// Jeffreys encompassing prior Beta(1/2,1/2), truncated to [0,z] under M0:
// ln B01 = ln I_z(y+1/2, n-y+1/2) - ln I_z(1/2, 1/2).
BayesResult bayes_factor_jeffreys(const BinomialData& data, const Boundary& boundary);

BayesResult bayes_factor(const BinomialData& data, const Boundary& boundary,
                         PriorFamily prior);

// B01/(1+B01) from ln B01, evaluated in log space so the tails stay stable.
double posterior_weight(double log_b01);

// 1/(1+z): the supremum of the uniform-prior posterior weight w0 over all
// possible data, approached when the constraint clearly holds.
double max_constrained_weight(const Boundary& boundary);

}  // namespace ocbinom
