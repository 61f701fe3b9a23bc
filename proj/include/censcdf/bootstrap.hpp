#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "censcdf/bandwidth.hpp"
#include "censcdf/model_cdf.hpp"
#include "censcdf/rng.hpp"
#include "censcdf/smoothed_cdf.hpp"

namespace censcdf {

struct BootstrapConfig {
  std::size_t populations = 200;   // B
  std::size_t replicates = 1000;   // R, per population
  double alpha = 0.05;             // CI level complement
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t grid_size = 30;
  // Selector grid for the initial fit; defaults to the sample's ranges.
  std::optional<BandwidthGrid> grid;
  // Retain every replicate curve (memory grows with B*R; meant for small
  // runs and verification).
  bool keep_replicates = false;

  void validate(std::size_t population_size, std::size_t sample_size) const;
};

// Everything needed to synthesize populations from the fitted model:
// conditional medians for every population unit, the smoothed residual CDF
// and the smoothed censoring-time CDF, plus the bandwidths that produced
// them.
struct FittedGenerators {
  std::vector<double> population_medians;  // aligned with pop.covariates
  ResidualSet sample_residuals;
  SmoothedCdf residual_cdf;    // smoothed residual product-limit CDF
  SmoothedCdf censoring_cdf;   // smoothed reverse product-limit CDF
  Bandwidths bandwidths;       // selected by cross-validation
  double residual_bandwidth;   // lambda selected by cross-validation
  double censoring_bandwidth;
};

FittedGenerators fit_generators(const PopulationFrame& pop,
                                const std::optional<BandwidthGrid>& grid = {});

// A synthesized population; the latent event times are retained so the
// population-level target CDF stays computable.
struct SyntheticPopulation {
  std::vector<double> event_time;  // t*, before censoring
  std::vector<double> time;        // observed min(t*, c*)
  std::vector<int> event;
};

SyntheticPopulation synth_population(const FittedGenerators& fitted,
                                     std::span<const double> covariates,
                                     Rng& rng);

struct EstimatorBootstrapSummary {
  std::vector<double> point;     // estimate from the original sample
  std::vector<double> bias;
  std::vector<double> variance;
  std::vector<double> ci_lower;
  std::vector<double> ci_upper;
};

struct BootstrapResult {
  std::vector<double> grid;
  EstimatorBootstrapSummary km;
  EstimatorBootstrapSummary model;
  Bandwidths fit_bandwidths;
  double residual_bandwidth = 0.0;
  std::size_t populations = 0;
  std::size_t replicates_requested = 0;
  std::size_t replicates_dropped = 0;

  // Raw replicate material, populated when keep_replicates is set:
  // target[b][k] and estimates [b][r][k] per estimator (dropped replicates
  // hold empty curves).
  std::vector<std::vector<double>> target_curves;
  std::vector<std::vector<std::vector<double>>> km_curves;
  std::vector<std::vector<std::vector<double>>> model_curves;
};

// Three-step residual bootstrap: fit generators on the original sample,
// synthesize B populations, draw R size-n samples from each, and estimate
// the bias and variance of the prediction error of both CDF estimators,
// with percentile confidence intervals at every grid time.
BootstrapResult run_bootstrap(const PopulationFrame& pop,
                              const BootstrapConfig& config);

// Interval from the empirical quantiles of the pooled deviations
// (estimate - population target): [point - q_{1-a/2}, point + q_{a/2}],
// clipped to [0,1]. The quantile convention is the order statistic of rank
// ceil(alpha*M). Throws on an empty deviation set.
std::pair<double, double> percentile_ci(double point,
                                        std::span<const double> deviations,
                                        double alpha);

}  // namespace censcdf
