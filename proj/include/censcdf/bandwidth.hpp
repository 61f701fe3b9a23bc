#pragma once

#include <span>
#include <utility>
#include <vector>

#include "censcdf/model_cdf.hpp"
#include "censcdf/sample.hpp"

namespace censcdf {

// A pair of smoothing bandwidths: `time` acts on the duration axis,
// `covariate` on the covariate axis.
struct Bandwidths {
  double time = 0.0;
  double covariate = 0.0;
};

// Candidate bandwidths for the selectors. All entries must be positive.
struct BandwidthGrid {
  std::vector<double> time;       // h_T candidates
  std::vector<double> covariate;  // h_X candidates
  std::vector<double> residual;   // lambda candidates

  void validate() const;
};

// {fraction*range : fraction in {0.1, 0.2, ..., 1.0}}; the default grid
// policy everywhere a selector needs candidates.
std::vector<double> fraction_grid(double range);

// Grid built from the sample's duration and covariate ranges (residual
// candidates are left empty; they depend on fitted residuals).
BandwidthGrid default_bandwidth_grid(const CensoredSample& sample);

// Leave-one-out selection of (time, covariate) bandwidths: minimizes the
// sum of absolute prediction errors of the conditional median over the
// uncensored units, each predicted from the sample with that unit removed.
// Iterates time-major over the grid; ties keep the first pair. Requires at
// least two uncensored units.
Bandwidths cv_median_bandwidths(const CensoredSample& sample,
                                const BandwidthGrid& grid);

// Leave-one-out selection of the residual smoothing bandwidth: minimizes
// the squared distance between the indicator of each uncensored residual
// and the smoothed leave-one-out residual CDF, accumulated over a grid of
// 30 equally spaced points spanning the residual range (endpoints
// included). Requires at least two uncensored residuals.
double cv_lambda(const ResidualSet& res, const BandwidthGrid& grid);

// 30% of the observed duration range and 30% of the covariate range; errors
// on a zero range.
Bandwidths data_driven_bandwidths(const CensoredSample& sample);

// Oracle selection: the grid pair minimizing the mean squared distance
// between the model CDF and `target` over `eval_grid` (same iteration order
// and tie rule as cv_median_bandwidths).
Bandwidths ase_oracle_bandwidths(const PopulationFrame& pop,
                                 const BandwidthGrid& grid,
                                 std::span<const double> target,
                                 std::span<const double> eval_grid);

}  // namespace censcdf
