#pragma once

#include <cstddef>
#include <vector>

namespace censcdf {

// One unit per index: the observed duration (event or censoring time,
// whichever came first), an event indicator (1 = the duration ended,
// 0 = right censored) and a real covariate.
struct CensoredSample {
  std::vector<double> time;
  std::vector<int> event;
  std::vector<double> covariate;

  std::size_t size() const { return time.size(); }
  std::size_t uncensored_count() const;

  // Throws std::invalid_argument on mismatched lengths, empty data,
  // non-finite values or indicators outside {0,1}.
  void validate() const;
};

}  // namespace censcdf
