#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace spherebraid {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic per-stream generator.  Estimators hand stream = sample index
// (and attempt count) so that results are independent of worker count and
// scheduling: sample i always sees the same random values.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0, uint64_t substream = 0) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s) ^ (stream * 0x9e3779b97f4a7c15ULL);
    uint64_t b = splitmix64(s) ^ (substream * 0xc2b2ae3d27d4eb4fULL);
    std::seed_seq seq{static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
                      static_cast<uint32_t>(b), static_cast<uint32_t>(b >> 32)};
    gen_.seed(seq);
  }

  double uniform() { return unit_(gen_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  uint64_t bits() { return gen_(); }
  long index(long n) { return static_cast<long>(gen_() % static_cast<uint64_t>(n)); }

  std::complex<double> unit_complex() {
    double a = uniform(0.0, 2.0 * 3.14159265358979323846);
    return {std::cos(a), std::sin(a)};
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace spherebraid
