#pragma once

// Seed-deterministic random inputs. The generator is std::mt19937_64 (whose
// output sequence is fixed by the standard); bounded integers are drawn by
// rejection from the raw 64-bit stream, so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "kee/picard.hpp"

namespace kee {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  long uniform_int(long lo, long hi);

  // num / den with den uniform in [1, 64] and num uniform in [1, 2 den].
  Rat angle();
  // Uniform in [0, 1] with the same denominators, zero included.
  Rat unit_coefficient();

  SurfaceParams params(int max_n = 6, int max_m = 6);

  // Rejection from angle() until the log anticanonical class is ample.
  Angles ample_angles(const SurfaceParams& params);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kee
