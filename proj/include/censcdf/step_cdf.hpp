#pragma once

#include <cstddef>
#include <vector>

namespace censcdf {

// Right-continuous step distribution function. The value is 0 before the
// first jump, constant between jumps and exactly 1 at and beyond the last
// jump location (the terminal time).
class StepCdf {
 public:
  // `times` strictly increasing, `values` nondecreasing within [0,1] with
  // values.back() == 1. Throws std::invalid_argument otherwise.
  StepCdf(std::vector<double> times, std::vector<double> values);

  double operator()(double t) const;

  // Generalized inverse inf{t : F(t) >= p}; p must lie in (0,1).
  double quantile(double p) const;

  std::size_t jump_count() const { return times_.size(); }
  const std::vector<double>& jump_times() const { return times_; }
  const std::vector<double>& jump_values() const { return values_; }
  std::vector<double> jump_masses() const;

  double terminal_time() const { return times_.back(); }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

}  // namespace censcdf
