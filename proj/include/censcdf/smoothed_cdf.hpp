#pragma once

#include <vector>

#include "censcdf/kernel.hpp"
#include "censcdf/step_cdf.hpp"

namespace censcdf {

// Kernel-smoothed step distribution: each jump of the base step CDF is
// replaced by its mass spread through the integrated kernel, so the value
// at u is sum_l mass_l * H((u - location_l)/h). Nondecreasing, 0 below the
// first location minus h and exactly 1 above the last location plus h.
class SmoothedCdf {
 public:
  SmoothedCdf(const StepCdf& base, KernelSpec kernel);
  SmoothedCdf(const StepCdf& base, double bandwidth);

  double operator()(double u) const;

  // Generalized inverse by bisection over [first location - h,
  // last location + h], to absolute tolerance 1e-10 times that width.
  double quantile(double p) const;

  double bandwidth() const { return kernel_.bandwidth; }
  const std::vector<double>& locations() const { return locations_; }
  const std::vector<double>& masses() const { return masses_; }

 private:
  std::vector<double> locations_;
  std::vector<double> masses_;
  std::vector<double> prefix_;  // cumulative masses, equals base jump values
  KernelSpec kernel_;
};

// Assembles the smoothed version of a step CDF (free-function spelling used
// by the conditional estimators).
SmoothedCdf smooth_cdf(const StepCdf& base, double bandwidth);

}  // namespace censcdf
