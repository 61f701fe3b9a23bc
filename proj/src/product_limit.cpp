#include "censcdf/product_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace censcdf {

namespace {

void check_input(std::span<const double> times, std::span<const int> events) {
  if (times.empty()) throw std::invalid_argument("product limit: no data");
  if (events.size() != times.size()) {
    throw std::invalid_argument("product limit: times/events lengths differ");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) {
      throw std::invalid_argument("product limit: non-finite time");
    }
    if (events[i] != 0 && events[i] != 1) {
      throw std::invalid_argument("product limit: event indicator must be 0 or 1");
    }
  }
}

std::vector<std::size_t> time_order(std::span<const double> times) {
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
  return order;
}

}  // namespace

StepCdf km_cdf(std::span<const double> times, std::span<const int> events) {
  check_input(times, events);
  const std::size_t n = times.size();
  const auto order = time_order(times);
  const double terminal = times[order.back()];

  std::vector<double> jump_times;
  std::vector<double> jump_values;

  // Survival after each processed group is corr * at_risk_next / n; `corr`
  // stays exactly 1 until a censored unit leaves the risk set, which makes
  // the uncensored case agree with the empirical CDF to the last bit.
  double corr = 1.0;
  std::size_t at_risk = n;
  std::size_t i = 0;
  while (i < n) {
    const double t = times[order[i]];
    std::size_t deaths = 0;
    std::size_t censored = 0;
    while (i < n && times[order[i]] == t) {
      if (events[order[i]] == 1) {
        ++deaths;
      } else {
        ++censored;
      }
      ++i;
    }
    if (deaths > 0 && t < terminal) {
      const double survivors = static_cast<double>(at_risk - deaths);
      const double value =
          (static_cast<double>(n) - corr * survivors) / static_cast<double>(n);
      jump_times.push_back(t);
      jump_values.push_back(std::min(value, 1.0));
    }
    if (censored > 0) {
      const std::size_t keep = at_risk - deaths;
      const std::size_t next = keep - censored;
      if (next > 0) {
        corr *= static_cast<double>(keep) / static_cast<double>(next);
      }
    }
    at_risk -= deaths + censored;
  }

  // The value is forced to 1 at the largest observation, whatever the
  // indicator there.
  jump_times.push_back(terminal);
  jump_values.push_back(1.0);
  return StepCdf(std::move(jump_times), std::move(jump_values));
}

StepCdf km_cdf(const CensoredSample& sample) {
  sample.validate();
  return km_cdf(std::span<const double>(sample.time),
                std::span<const int>(sample.event));
}

StepCdf reverse_km_cdf(std::span<const double> times, std::span<const int> events) {
  check_input(times, events);
  std::vector<int> flipped(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) flipped[i] = 1 - events[i];
  return km_cdf(times, flipped);
}

StepCdf reverse_km_cdf(const CensoredSample& sample) {
  sample.validate();
  return reverse_km_cdf(std::span<const double>(sample.time),
                        std::span<const int>(sample.event));
}

StepCdf weighted_km_cdf(std::span<const double> times, std::span<const int> events,
                        std::span<const double> weights) {
  check_input(times, events);
  if (weights.size() != times.size()) {
    throw std::invalid_argument("product limit: weights length differs");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("product limit: weights must be nonnegative");
    }
  }

  const std::size_t n = times.size();
  const auto order = time_order(times);
  const double terminal = times[order.back()];

  std::vector<double> jump_times;
  std::vector<double> jump_values;

  double at_risk_weight = 0.0;
  for (double w : weights) at_risk_weight += w;

  double survival = 1.0;
  std::size_t i = 0;
  while (i < n) {
    const double t = times[order[i]];
    double death_weight = 0.0;
    double group_weight = 0.0;
    while (i < n && times[order[i]] == t) {
      const double w = weights[order[i]];
      group_weight += w;
      if (events[order[i]] == 1) death_weight += w;
      ++i;
    }
    if (death_weight > 0.0 && at_risk_weight > 0.0 && t < terminal) {
      const double factor =
          std::max(0.0, 1.0 - death_weight / at_risk_weight);
      survival *= factor;
      const double value = std::min(1.0 - survival, 1.0);
      if (jump_values.empty() || value > jump_values.back()) {
        jump_times.push_back(t);
        jump_values.push_back(value);
      }
    }
    at_risk_weight -= group_weight;
  }

  if (!jump_times.empty() && jump_times.back() == terminal) {
    jump_values.back() = 1.0;
  } else {
    jump_times.push_back(terminal);
    jump_values.push_back(1.0);
  }
  return StepCdf(std::move(jump_times), std::move(jump_values));
}

}  // namespace censcdf
