#include "censcdf/kernel.hpp"

namespace censcdf {

double triweight_density(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return (35.0 / 32.0) * w * w * w;
}

double triweight_integrated(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  // Antiderivative of (35/32)(1-u^2)^3, anchored so H(-1) = 0.
  const double u2 = u * u;
  const double poly = u * (1.0 - u2 + 0.6 * u2 * u2 - u2 * u2 * u2 / 7.0);
  return 0.5 + (35.0 / 32.0) * poly;
}

double KernelSpec::density(double u) const { return triweight_density(u); }

double KernelSpec::integrated(double u) const { return triweight_integrated(u); }

}  // namespace censcdf
