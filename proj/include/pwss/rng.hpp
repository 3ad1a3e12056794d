#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pwss {

// splitmix64, used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed from a base seed and a path of words (problem index, algorithm
// id, run index, ...). Parallel workers seeded this way never share a stream.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = base ^ 0xd6e8feb86659fd93ULL;
  std::uint64_t h = splitmix64(s);
  for (std::uint64_t w : path) {
    s ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = splitmix64(s);
  }
  return h;
}

// Deterministic uniform source. Distributions are hand-rolled on top of
// mt19937_64 so draws do not depend on the standard library's
// implementation-defined distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n must be positive. Rejection keeps the draw unbiased.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pwss
