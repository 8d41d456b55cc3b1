#ifndef CRCPHENO_RNG_HPP
#define CRCPHENO_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace crcpheno {

// splitmix64 step; used to derive per-item seeds (seed + index) so that
// parallel loops produce the same streams as the serial reference.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG wrapper. std::uniform_*_distribution output is
// implementation-defined, so all draws here are built from raw mt19937_64
// words to keep artifacts byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased draw from [0, n) by rejection.
  uint64_t uniform_u64(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform_u64(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform_u64(items.size())];
  }

  // Fisher-Yates; deterministic given the seed.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = uniform_u64(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace crcpheno

#endif  // CRCPHENO_RNG_HPP
