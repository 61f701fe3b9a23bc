#pragma once

#include <span>

#include "censcdf/sample.hpp"
#include "censcdf/step_cdf.hpp"

namespace censcdf {

// Product-limit estimator of the distribution of the (possibly censored)
// durations, forced to 1 at and beyond the largest observation so that the
// result is a genuine distribution function. Tied times are processed as a
// group; at equal times the uncensored units are ranked first, so censored
// units remain in the risk set of a simultaneous event.
StepCdf km_cdf(const CensoredSample& sample);
StepCdf km_cdf(std::span<const double> times, std::span<const int> events);

// Product-limit estimator with flipped indicators: estimates the censoring
// time distribution.
StepCdf reverse_km_cdf(const CensoredSample& sample);
StepCdf reverse_km_cdf(std::span<const double> times, std::span<const int> events);

// Weighted product-limit estimator (unit weights reduce it to km_cdf).
// Negative weights are rejected; times at which the remaining weight at
// risk is zero contribute no factor.
StepCdf weighted_km_cdf(std::span<const double> times, std::span<const int> events,
                        std::span<const double> weights);

}  // namespace censcdf
