#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include "ocbinom/types.hpp"

// Luckiness-weighted and standard normalized maximum likelihood for the
// constrained and full binomial model, by exact enumeration of the sample
// space {0, ..., n}. The binomial coefficient C(n,y) is part of the sampling
// distribution and is included in every numerator and normalizer term.
namespace ocbinom {

struct LnmlResult {
  double log_numerator;   // ln p^L(y | theta_hat) at the model's own estimator
  double log_normalizer;  // ln sum_x p^L(x | theta_hat_x)
  double log_lnml;        // log_numerator - log_normalizer
  double estimator;       // the (clipped) maximizer used for the numerator
};

struct LnmlWeights {
  double w0;  // LNML_0 / (LNML_0 + LNML_1)
  double w1;
};

// a(theta) = -ln theta^{1/2}(1-theta)^{1/2}; minimum ln 2 at theta = 1/2.
// Throws std::domain_error outside the open interval (0,1).
double luckiness(double theta);

// Fisher information of the binomial rate: 1/(theta(1-theta)).
double fisher_information(double theta);

// ln p^L(y|theta): the binomial log-pmf plus -a(theta). Under kMatchedUniform
// this is ln C(n,y) + (y+1/2) ln theta + (n-y+1/2) ln(1-theta) and theta must
// lie strictly inside (0,1); under kConstant it is the plain log-pmf with the
// 0^0 = 1 convention at the endpoints.
double weighted_log_likelihood(const BinomialData& data, double theta, Luckiness luck);

// argmax of the matched-uniform weighted likelihood: (y+1/2)/(n+1).
double luckiness_estimator_full(const BinomialData& data);

// min((y+1/2)/(n+1), z); the tie (y+1/2)/(n+1) == z counts as satisfied.
double luckiness_estimator_constrained(const BinomialData& data, const Boundary& boundary);

// Plain ML estimator y/n, clipped to z when a boundary is supplied.
double ml_estimator(const BinomialData& data, std::optional<Boundary> boundary = {});

// ln sum_{x=0}^{n} p^L(x | theta_hat_x), where theta_hat_x is the (clipped)
// luckiness estimator under kMatchedUniform and the (clipped) ML estimator
// under kConstant.
double lnml_normalizer(std::int64_t n, std::optional<Boundary> boundary, Luckiness luck);

// Memoizes normalizers per (n, boundary, luckiness); sweeps reuse them across
// all y. Safe for concurrent readers and writers; results never depend on
// cache hits.
class NormalizerCache {
 public:
  double lnml(std::int64_t n, std::optional<Boundary> boundary, Luckiness luck);
  double nml(std::int64_t n, std::optional<Boundary> boundary);
  void clear();

 private:
  double lookup(int kind, std::int64_t n, std::optional<Boundary> boundary);

  using Key = std::tuple<int, std::int64_t, bool, double>;
  std::map<Key, double> values_;
  std::shared_mutex mutex_;
};

LnmlResult lnml_evidence(const BinomialData& data, std::optional<Boundary> boundary,
                         Luckiness luck, NormalizerCache* cache = nullptr);

// Eq. weights of the constrained vs full model. The shared numerator of the
// two models cancels exactly, so in the constraint-satisfied region the
// weights are bit-identical across y.
LnmlWeights lnml_weights(const BinomialData& data, const Boundary& boundary,
                         Luckiness luck, NormalizerCache* cache = nullptr);

// Standard NML computed directly from the unweighted likelihood and ML
// estimators; lnml_evidence with kConstant luckiness must agree with it.
LnmlResult nml_evidence(const BinomialData& data, std::optional<Boundary> boundary,
                        NormalizerCache* cache = nullptr);

LnmlWeights nml_weights(const BinomialData& data, const Boundary& boundary,
                        NormalizerCache* cache = nullptr);

}  // namespace ocbinom
