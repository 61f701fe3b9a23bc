#pragma once

namespace censcdf {

enum class KernelId { Triweight };

// Symmetric density kernel on (-1,1) together with its antiderivative
// (the integrated kernel). Only the triweight kernel is registered; the
// enum leaves room for alternatives without changing call sites.
struct KernelSpec {
  KernelId id = KernelId::Triweight;
  double bandwidth = 1.0;

  double density(double u) const;     // K, integrates to 1 over (-1,1)
  double integrated(double u) const;  // H, 0 below -1 and 1 above +1
};

double triweight_density(double u);
double triweight_integrated(double u);

}  // namespace censcdf
