#pragma once

#include <cstdint>
#include <stdexcept>

namespace ocbinom {

// Observed binomial data: y successes out of n trials.
class BinomialData {
 public:
  BinomialData(std::int64_t trials, std::int64_t successes)
      : n_(trials), y_(successes) {
    if (n_ < 1)
      throw std::invalid_argument("BinomialData: trial count must be >= 1");
    if (y_ < 0 || y_ > n_)
      throw std::invalid_argument("BinomialData: success count must lie in 0..n");
  }

  std::int64_t trials() const { return n_; }
  std::int64_t successes() const { return y_; }

 private:
  std::int64_t n_;
  std::int64_t y_;
};

// Cutpoint z of the order constraint theta <= z. Values outside the open
// interval (0,1) are rejected rather than clamped; the endpoints degenerate
// the model comparison.
class Boundary {
 public:
  explicit Boundary(double z) : z_(z) {
    if (!(z > 0.0 && z < 1.0))
      throw std::invalid_argument("Boundary: cutpoint must lie strictly inside (0,1)");
  }

  double value() const { return z_; }

 private:
  double z_;
};

enum class PriorFamily { kUniform, kJeffreys };

// Luckiness function a(theta) used to reweight the likelihood.
// kMatchedUniform is a(theta) = -ln theta^{1/2}(1-theta)^{1/2}, which matches
// the uniform prior; kConstant (a = 0) reduces LNML to standard NML.
enum class Luckiness { kMatchedUniform, kConstant };

}  // namespace ocbinom
