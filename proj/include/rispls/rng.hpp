#ifndef RISPLS_RNG_HPP
#define RISPLS_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace rispls {

// Engine and draws are spelled out here instead of using <random>
// distributions, whose output differs between standard libraries.

/// Independent stream `stream` of the run seeded with `seed`.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

/// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % bound;
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(eng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace rispls

#endif
