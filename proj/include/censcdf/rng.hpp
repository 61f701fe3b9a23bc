#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace censcdf {

// Mixes a master seed with a stream path into an independent sub-seed.
// Used to give every population / replicate / iteration its own generator,
// so parallel schedules cannot change the numbers drawn.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

// Deterministic generator with platform-stable output. The uniform doubles
// are produced from raw 64-bit draws directly (the standard distribution
// adaptors are implementation-defined and would break byte-identical
// replay across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Strictly inside (0,1); safe to feed to quantile inversions.
  double uniform01();
  double uniform(double lo, double hi);

  // Simple random sample without replacement of k indices from [0, n),
  // returned in increasing order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace censcdf
