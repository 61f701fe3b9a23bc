#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "censcdf/conditional.hpp"
#include "censcdf/sample.hpp"
#include "censcdf/step_cdf.hpp"

namespace censcdf {

// Covariates for every unit of a finite population together with the
// identity and observations of the sampled subset.
struct PopulationFrame {
  std::vector<double> covariates;          // x for all N units
  std::vector<std::size_t> sample_index;   // sampled unit ids, 0-based
  CensoredSample sample;                   // observations for those units

  std::size_t population_size() const { return covariates.size(); }
  std::size_t sample_size() const { return sample_index.size(); }
  std::vector<std::size_t> nonsampled_index() const;

  // Checks index range/distinctness and that the sample covariates match
  // the frame at sample_index. Throws std::invalid_argument.
  void validate() const;
};

// Residuals of the observed durations around the fitted conditional
// medians; a residual is censored exactly when its duration is.
struct ResidualSet {
  std::vector<double> residual;
  std::vector<int> event;
};

ResidualSet residuals(const CensoredSample& sample, double covariate_bandwidth,
                      double time_bandwidth);

// Product-limit CDF of the residuals (they may be negative; the estimator
// operates on the whole real line).
StepCdf residual_cdf(const ResidualSet& res);

// Finite-population CDF estimator: sample term via the product-limit CDF,
// nonsampled units predicted through the residual CDF shifted by their
// fitted conditional medians. Fitted medians are computed once at
// construction, so repeated evaluation over a grid is cheap.
class ModelCdf {
 public:
  ModelCdf(const PopulationFrame& pop, double covariate_bandwidth,
           double time_bandwidth);

  double operator()(double t) const;
  std::vector<double> curve(std::span<const double> grid) const;

  // Generalized inverse over the exact jump set of the estimator.
  double quantile(double p) const;

  const StepCdf& sample_cdf() const { return sample_cdf_; }
  const StepCdf& residual_step_cdf() const { return residual_cdf_; }
  const std::vector<double>& nonsampled_medians() const { return medians_; }

 private:
  std::size_t population_size_;
  std::size_t sample_size_;
  StepCdf sample_cdf_;
  StepCdf residual_cdf_;
  std::vector<double> medians_;  // fitted medians of the nonsampled units
};

// Pointwise / batched / inverted evaluation without keeping the object.
double f_m(double t, const PopulationFrame& pop, double covariate_bandwidth,
           double time_bandwidth);
std::vector<double> f_m_curve(std::span<const double> grid,
                              const PopulationFrame& pop,
                              double covariate_bandwidth,
                              double time_bandwidth);
double f_m_quantile(double p, const PopulationFrame& pop,
                    double covariate_bandwidth, double time_bandwidth);

}  // namespace censcdf
