#include "kee/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace kee {

long Sampler::uniform_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Largest multiple of span that fits; values above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rat Sampler::angle() {
  long den = uniform_int(1, 64);
  long num = uniform_int(1, 2 * den);
  return rat(num, den);
}

Rat Sampler::unit_coefficient() {
  long den = uniform_int(1, 64);
  long num = uniform_int(0, den);
  return rat(num, den);
}

SurfaceParams Sampler::params(int max_n, int max_m) {
  int n = static_cast<int>(uniform_int(0, max_n));
  int m = static_cast<int>(uniform_int(0, max_m));
  return {n, m};
}

Angles Sampler::ample_angles(const SurfaceParams& params) {
  for (;;) {
    Angles a{angle(), angle()};
    if (ample_angle_range(params, a)) return a;
  }
}

}  // namespace kee
