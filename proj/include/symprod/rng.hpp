#pragma once

#include <cstdint>

namespace symprod {

// splitmix64. Small, fast, and fully specified here so random draws are
// byte-identical across platforms and standard library versions (std
// distributions are implementation-defined, so we avoid them).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [lo, hi]. Modulo bias is irrelevant here (draws feed
  // genericity arguments, not statistics); determinism is what matters.
  long long bounded(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

 private:
  std::uint64_t s_;
};

// Independent stream per (seed, a, b). Worker scheduling can then never
// change which numbers a given (j, trial) slot sees.
inline SplitMix64 derived_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  SplitMix64 mixer(seed ^ (a + 1) * 0xD1B54A32D192ED03ULL ^ (b + 1) * 0x9E6C63D0876A9AD5ULL);
  std::uint64_t s = mixer.next();
  s ^= mixer.next() >> 1;
  return SplitMix64(s);
}

}  // namespace symprod
