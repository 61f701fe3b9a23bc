#pragma once

#include <cstddef>
#include <vector>

#include "censcdf/sample.hpp"
#include "censcdf/smoothed_cdf.hpp"
#include "censcdf/step_cdf.hpp"

namespace censcdf {

// Kernel regression weights at x0. If no sample covariate falls inside the
// bandwidth window the unit nearest to x0 (smallest index on ties) receives
// weight 1, so the conditional estimators stay defined everywhere.
std::vector<double> nw_weights(double x0, const CensoredSample& sample,
                               double covariate_bandwidth);

// Conditional CDF of the duration given covariate value x0: product-limit
// estimator with kernel weights.
StepCdf beran_cdf(double x0, const CensoredSample& sample,
                  double covariate_bandwidth);

// Conditional median: invert the time-smoothed conditional CDF at 1/2.
double conditional_median(double x0, const CensoredSample& sample,
                          double covariate_bandwidth, double time_bandwidth);

// Presorts one sample so that many conditional fits (different x0 or
// bandwidths) share the setup work. All methods are const and safe to call
// concurrently.
class ConditionalFitter {
 public:
  explicit ConditionalFitter(const CensoredSample& sample);

  std::vector<double> weights(double x0, double covariate_bandwidth) const;
  StepCdf beran(double x0, double covariate_bandwidth) const;
  double median(double x0, double covariate_bandwidth,
                double time_bandwidth) const;

  const CensoredSample& sample() const { return sample_; }

 private:
  CensoredSample sample_;
  std::vector<std::size_t> order_;  // by time, uncensored first on ties
};

}  // namespace censcdf
