#pragma once

// Deterministic random streams.  Every randomized routine in the library
// takes a caller seed and derives an independent stream from (seed, tags)
// so that results are reproducible bit-for-bit across platforms and across
// unrelated changes elsewhere in a run.  Draws are produced by hand-rolled
// rejection sampling on top of std::mt19937_64 rather than the standard
// distributions, whose outputs are not portable across implementations.

#include <cstdint>
#include <random>
#include <vector>

namespace flashbow::rng {

// SplitMix64 finalizer: a cheap, well-mixed 64-bit permutation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t tag0 = 0,
                  std::uint64_t tag1 = 0, std::uint64_t tag2 = 0)
      : gen_(mix64(seed ^ mix64(tag0 ^ mix64(tag1 ^ mix64(tag2))))) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [0, bound); bound >= 1.  Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace flashbow::rng
