#pragma once

#include <cstdint>

namespace yaoconn {

// splitmix64. All randomized generation goes through this engine and the
// mappings below, never through std:: distributions, so identical seeds give
// byte-identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform in {0, 1, ..., n-1}; n > 0
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Independent stream for trial `index` under a master seed.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace yaoconn
