#pragma once

#include <cstdint>
#include <random>

namespace ctxdist {

// Deterministic random stream.  mt19937_64 output is fully specified by the
// standard; the double conversion below avoids std::uniform_real_distribution,
// whose output is implementation-defined.  Seeds and all derived streams are
// therefore reproducible across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_(splitmix(seed)), eng_(base_) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).  Modulo bias is ~2^-32 for the small n used
  // here and does not affect sampling quality.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  bool coin() { return (next_u64() & 1u) != 0; }

  // Independent child stream identified by a salt; independent of how much
  // of the parent stream has been consumed.
  Rng fork(std::uint64_t salt) const { return Rng(base_ ^ splitmix(salt)); }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t base_;
  std::mt19937_64 eng_;
};

}  // namespace ctxdist
