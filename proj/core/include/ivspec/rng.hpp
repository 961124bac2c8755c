#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ivspec {

/// Portable random source: std::mt19937_64 seeded with the 64-bit seed, plus
/// distribution helpers defined here rather than by the standard library
/// (whose distributions are implementation-specific). Any implementation of
/// MT19937-64 with the same mappings reproduces every result bit for bit.
///
///  - uniform_below(b): rejection sampling; draw x until x < 2^64 - (2^64 mod b),
///    return x mod b.
///  - uniform_unit(): (x >> 11) * 2^-53, in [0, 1).
///  - shuffle(): Fisher-Yates from the back, j = uniform_below(i + 1).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t uniform_below(std::uint64_t bound);
  double uniform_unit();

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace ivspec
