#include "ivspec/rng.hpp"

#include "ivspec/error.hpp"

namespace ivspec {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform_below(0)");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t rejected = (0 - bound) % bound;
  const std::uint64_t limit = 0 - rejected; // 2^64 - rejected, wraps to 0 when rejected == 0
  for (;;) {
    const std::uint64_t x = engine_();
    if (rejected == 0 || x < limit) return x % bound;
  }
}

double Rng::uniform_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

} // namespace ivspec
