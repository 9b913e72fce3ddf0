#pragma once

#include <cstdint>
#include <random>

namespace akizuki {

// Deterministic stream: mt19937_64 is bit-exact across platforms, and bounded
// draws use plain modulo because std::uniform_int_distribution is
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // uniform-ish in [0, bound), bound >= 1
  uint64_t next(uint64_t bound) { return eng_() % bound; }

  // uniform-ish in [lo, hi]
  long next_long(long lo, long hi) {
    return lo + static_cast<long>(next(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

// independent per-trial stream derived from (seed, index)
inline Rng trial_rng(uint64_t seed, uint64_t index) {
  return Rng(seed * 0x9e3779b97f4a7c15ULL + index + 1);
}

}  // namespace akizuki
