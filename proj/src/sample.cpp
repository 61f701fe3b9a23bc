#include "censcdf/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace censcdf {

std::size_t CensoredSample::uncensored_count() const {
  std::size_t count = 0;
  for (int e : event) count += (e == 1);
  return count;
}

void CensoredSample::validate() const {
  if (time.empty()) throw std::invalid_argument("sample: no data");
  if (event.size() != time.size() || covariate.size() != time.size()) {
    throw std::invalid_argument("sample: time/event/covariate lengths differ");
  }
  for (std::size_t i = 0; i < time.size(); ++i) {
    if (!std::isfinite(time[i])) {
      throw std::invalid_argument("sample: non-finite time at index " +
                                  std::to_string(i));
    }
    if (!std::isfinite(covariate[i])) {
      throw std::invalid_argument("sample: non-finite covariate at index " +
                                  std::to_string(i));
    }
    if (event[i] != 0 && event[i] != 1) {
      throw std::invalid_argument("sample: event indicator must be 0 or 1 at index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace censcdf
