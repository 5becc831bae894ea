#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace antimagic {

// All randomized code in this library draws from std::mt19937_64 (whose
// output sequence is fixed by the C++ standard) through this rejection
// sampler, so a seed reproduces bit-identical results on any conforming
// implementation. std::uniform_int_distribution gives no such guarantee.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;  // multiple of n
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

}  // namespace antimagic
