#include "censcdf/step_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace censcdf {

StepCdf::StepCdf(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.empty() || times_.size() != values_.size()) {
    throw std::invalid_argument("StepCdf: empty or mismatched jump arrays");
  }
  double prev_value = 0.0;
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!std::isfinite(times_[i])) {
      throw std::invalid_argument("StepCdf: non-finite jump time");
    }
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw std::invalid_argument("StepCdf: jump times must be strictly increasing");
    }
    if (!(values_[i] >= prev_value) || values_[i] > 1.0) {
      throw std::invalid_argument("StepCdf: values must be nondecreasing in [0,1]");
    }
    prev_value = values_[i];
  }
  if (values_.back() != 1.0) {
    throw std::invalid_argument("StepCdf: terminal value must be exactly 1");
  }
}

double StepCdf::operator()(double t) const {
  if (t >= times_.back()) return 1.0;
  // Largest jump location <= t.
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double StepCdf::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("StepCdf::quantile: p must lie in (0,1)");
  }
  auto it = std::lower_bound(values_.begin(), values_.end(), p);
  // values_.back() == 1 > p, so `it` is always valid.
  return times_[static_cast<std::size_t>(it - values_.begin())];
}

std::vector<double> StepCdf::jump_masses() const {
  std::vector<double> masses(values_.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    masses[i] = values_[i] - prev;
    prev = values_[i];
  }
  return masses;
}

}  // namespace censcdf
